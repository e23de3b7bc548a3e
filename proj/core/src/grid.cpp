#include "gridroll/grid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gridroll {

namespace {

// Union-find over bus indices.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw DataError(message);
}

void check_series(const std::vector<double>& v, int horizon, const std::string& what) {
  require(static_cast<int>(v.size()) == horizon,
          what + " must have one value per interval (expected " + std::to_string(horizon) +
              ", got " + std::to_string(v.size()) + ")");
}

}  // namespace

ValidatedCase ValidatedCase::validate(GridCase raw) {
  ValidatedCase v;
  require(!raw.buses.empty(), "case has no buses");
  require(raw.horizon_T >= 1, "horizon_T must be >= 1");
  require(raw.window_W >= 1, "window_W must be >= 1");
  require(raw.interval_hours > 0.0, "interval_hours must be positive");

  for (int b = 0; b < static_cast<int>(raw.buses.size()); ++b) {
    require(v.bus_idx_.emplace(raw.buses[b], b).second, "duplicate bus id " + raw.buses[b]);
  }
  auto bus_of = [&](const std::string& id, const std::string& owner) {
    auto it = v.bus_idx_.find(id);
    require(it != v.bus_idx_.end(), owner + " references unknown bus " + id);
    return it->second;
  };

  require(!raw.slack_bus.empty(), "slack_bus not set");
  v.slack_index_ = bus_of(raw.slack_bus, "slack_bus");

  for (int l = 0; l < static_cast<int>(raw.lines.size()); ++l) {
    const Line& line = raw.lines[l];
    require(v.line_idx_.emplace(line.id, l).second, "duplicate line id " + line.id);
    bus_of(line.from_bus, "line " + line.id);
    bus_of(line.to_bus, "line " + line.id);
    require(line.from_bus != line.to_bus, "line " + line.id + " is a self-loop");
    require(line.susceptance > 0.0, "line " + line.id + " susceptance must be positive");
    require(line.capacity > 0.0, "line " + line.id + " capacity must be positive");
    require(line.contingency_capacity >= line.capacity,
            "line " + line.id + " contingency capacity below nominal rating");
  }

  const int T = raw.horizon_T;
  double max_energy_cost = 0.0;
  for (int g = 0; g < static_cast<int>(raw.generators.size()); ++g) {
    const Generator& gen = raw.generators[g];
    require(v.gen_idx_.emplace(gen.id, g).second, "duplicate generator id " + gen.id);
    v.gen_bus_.push_back(bus_of(gen.bus, "generator " + gen.id));
    check_series(gen.cost_energy, T, gen.id + ".cost_energy");
    check_series(gen.cost_res_up, T, gen.id + ".cost_res_up");
    check_series(gen.cost_res_dn, T, gen.id + ".cost_res_dn");
    check_series(gen.g_min, T, gen.id + ".g_min");
    check_series(gen.g_max, T, gen.id + ".g_max");
    check_series(gen.res_up_cap, T, gen.id + ".res_up_cap");
    check_series(gen.res_dn_cap, T, gen.id + ".res_dn_cap");
    for (int t = 0; t < T; ++t) {
      require(gen.g_min[t] <= gen.g_max[t], gen.id + ": g_min exceeds g_max");
      require(gen.res_up_cap[t] >= 0.0 && gen.res_dn_cap[t] >= 0.0,
              gen.id + ": reserve capability must be nonnegative");
      max_energy_cost = std::max(max_energy_cost, gen.cost_energy[t]);
    }
    require(gen.ramp_up >= 0.0 && gen.ramp_dn >= 0.0, gen.id + ": ramp rates must be nonnegative");
    require(gen.initial_output >= gen.g_min[0] - 1e-9 && gen.initial_output <= gen.g_max[0] + 1e-9,
            gen.id + ": initial output outside generation bounds");
  }

  for (int l = 0; l < static_cast<int>(raw.loads.size()); ++l) {
    const LoadPoint& load = raw.loads[l];
    require(v.load_idx_.emplace(load.id, l).second, "duplicate load id " + load.id);
    v.load_bus_.push_back(bus_of(load.bus, "load " + load.id));
    check_series(load.demand, T, load.id + ".demand");
    check_series(load.shed_price, T, load.id + ".shed_price");
    for (int t = 0; t < T; ++t) {
      require(load.demand[t] >= 0.0, load.id + ": forecast demand must be nonnegative");
      if (load.shed_price[t] <= max_energy_cost) {
        v.warnings_.push_back(load.id + ": shedding price does not exceed every energy bid");
        break;
      }
    }
  }

  v.case_ = std::move(raw);

  std::vector<std::uint8_t> all_on(v.case_.lines.size(), 1);
  if (!is_connected(v, all_on)) throw DataError("network not connected");
  return v;
}

int ValidatedCase::bus_index(const std::string& id) const {
  auto it = bus_idx_.find(id);
  if (it == bus_idx_.end()) throw DataError("unknown bus " + id);
  return it->second;
}

int ValidatedCase::line_index(const std::string& id) const {
  auto it = line_idx_.find(id);
  if (it == line_idx_.end()) throw DataError("unknown line " + id);
  return it->second;
}

int ValidatedCase::generator_index(const std::string& id) const {
  auto it = gen_idx_.find(id);
  if (it == gen_idx_.end()) throw DataError("unknown generator " + id);
  return it->second;
}

int ValidatedCase::load_index(const std::string& id) const {
  auto it = load_idx_.find(id);
  if (it == load_idx_.end()) throw DataError("unknown load " + id);
  return it->second;
}

double ValidatedCase::total_demand(int t) const {
  double sum = 0.0;
  for (const LoadPoint& l : case_.loads) sum += l.demand[t];
  return sum;
}

namespace {

// Component labels of the in-service subgraph; label of the slack component
// and a flag telling whether every gen/load bus shares it.
struct Components {
  std::vector<int> root;
  int slack_root = -1;
  bool relevant_connected = true;
};

Components components(const ValidatedCase& grid, const std::vector<std::uint8_t>& in_service) {
  const GridCase& c = grid.data();
  if (in_service.size() != c.lines.size())
    throw BuildError("line-status mask length does not match line count");
  DisjointSet ds(grid.num_buses());
  for (int l = 0; l < grid.num_lines(); ++l) {
    if (in_service[l])
      ds.unite(grid.bus_index(c.lines[l].from_bus), grid.bus_index(c.lines[l].to_bus));
  }
  Components out;
  out.root.resize(grid.num_buses());
  for (int b = 0; b < grid.num_buses(); ++b) out.root[b] = ds.find(b);
  out.slack_root = out.root[grid.slack_index()];
  for (int g = 0; g < grid.num_generators(); ++g)
    if (out.root[grid.generator_bus(g)] != out.slack_root) out.relevant_connected = false;
  for (int l = 0; l < grid.num_loads(); ++l)
    if (out.root[grid.load_bus(l)] != out.slack_root) out.relevant_connected = false;
  return out;
}

}  // namespace

bool is_connected(const ValidatedCase& grid, const std::vector<std::uint8_t>& in_service) {
  return components(grid, in_service).relevant_connected;
}

ShiftFactors compute_ptdf(const ValidatedCase& grid, const std::vector<std::uint8_t>& in_service) {
  const GridCase& c = grid.data();
  Components comp = components(grid, in_service);
  if (!comp.relevant_connected)
    throw IslandingError("line-status state disconnects a bus carrying generation or load");

  // Buses of the slack component, with the slack removed, form the reduced
  // susceptance system. Injections elsewhere are structurally zero.
  const int n = grid.num_buses();
  std::vector<int> reduced_index(n, -1);
  std::vector<int> reduced_bus;
  for (int b = 0; b < n; ++b) {
    if (b != grid.slack_index() && comp.root[b] == comp.slack_root) {
      reduced_index[b] = static_cast<int>(reduced_bus.size());
      reduced_bus.push_back(b);
    }
  }
  const int m = static_cast<int>(reduced_bus.size());

  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(m, m);
  ShiftFactors sf;
  for (int l = 0; l < grid.num_lines(); ++l) {
    if (!in_service[l]) continue;
    const int f = grid.bus_index(c.lines[l].from_bus);
    const int t = grid.bus_index(c.lines[l].to_bus);
    if (comp.root[f] != comp.slack_root) continue;  // line in an island of empty buses
    sf.line_rows.push_back(l);
    const double b = c.lines[l].susceptance;
    const int fi = reduced_index[f], ti = reduced_index[t];
    if (fi >= 0) laplacian(fi, fi) += b;
    if (ti >= 0) laplacian(ti, ti) += b;
    if (fi >= 0 && ti >= 0) {
      laplacian(fi, ti) -= b;
      laplacian(ti, fi) -= b;
    }
  }

  Eigen::MatrixXd inv;
  if (m > 0) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(laplacian);
    inv = lu.solve(Eigen::MatrixXd::Identity(m, m));
  }

  sf.bus_ptdf = Eigen::MatrixXd::Zero(static_cast<int>(sf.line_rows.size()), n);
  for (int r = 0; r < static_cast<int>(sf.line_rows.size()); ++r) {
    const Line& line = c.lines[sf.line_rows[r]];
    const int fi = reduced_index[grid.bus_index(line.from_bus)];
    const int ti = reduced_index[grid.bus_index(line.to_bus)];
    for (int b = 0; b < n; ++b) {
      const int bi = reduced_index[b];
      if (bi < 0) continue;  // slack or out of component: zero sensitivity
      const double xf = fi >= 0 ? inv(fi, bi) : 0.0;
      const double xt = ti >= 0 ? inv(ti, bi) : 0.0;
      sf.bus_ptdf(r, b) = line.susceptance * (xf - xt);
    }
  }
  return sf;
}

ContingencyState apply_contingency(const ValidatedCase& grid,
                                   const std::vector<std::string>& outage_ids) {
  std::vector<std::uint8_t> in_service(grid.num_lines(), 1);
  for (const std::string& id : outage_ids) in_service[grid.line_index(id)] = 0;

  ContingencyState state;
  state.factors = compute_ptdf(grid, in_service);
  state.capacities.reserve(state.factors.line_rows.size());
  const bool contingent = !outage_ids.empty();
  for (int row : state.factors.line_rows) {
    const Line& line = grid.data().lines[row];
    state.capacities.push_back(contingent ? line.contingency_capacity : line.capacity);
  }
  return state;
}

}  // namespace gridroll
