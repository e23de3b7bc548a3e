#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "gridroll/errors.hpp"

namespace gridroll {

/// Transmission line in the DC model. Flows are oriented from_bus -> to_bus.
struct Line {
  std::string id;
  std::string from_bus;
  std::string to_bus;
  double susceptance = 0.0;           // per-unit, > 0
  double capacity = 0.0;              // MW rating used in nominal constraints
  double contingency_capacity = 0.0;  // MW rating used in scenario constraints
};

/// Dispatchable generator. Per-interval arrays have length horizon_T.
struct Generator {
  std::string id;
  std::string bus;
  std::vector<double> cost_energy;   // $/MWh
  std::vector<double> cost_res_up;   // $/MWh
  std::vector<double> cost_res_dn;   // $/MWh
  std::vector<double> g_min;         // MW
  std::vector<double> g_max;         // MW
  std::vector<double> res_up_cap;    // MW
  std::vector<double> res_dn_cap;    // MW
  double ramp_up = 0.0;              // MW per interval transition
  double ramp_dn = 0.0;              // MW per interval transition
  double initial_output = 0.0;       // MW at interval 0
};

/// Load (net of renewables). Per-interval arrays have length horizon_T.
struct LoadPoint {
  std::string id;
  std::string bus;
  std::vector<double> demand;      // forecast MW
  std::vector<double> shed_price;  // $/MWh
};

/// Raw case data as read from a case file.
struct GridCase {
  std::vector<std::string> buses;
  std::vector<Line> lines;
  std::vector<Generator> generators;
  std::vector<LoadPoint> loads;
  int horizon_T = 0;
  int window_W = 0;
  double interval_hours = 1.0;
  std::string slack_bus;
};

/// Case with all invariants checked and index maps frozen. Immutable after
/// construction and safe to share across threads.
class ValidatedCase {
 public:
  static ValidatedCase validate(GridCase raw);

  const GridCase& data() const { return case_; }
  int num_buses() const { return static_cast<int>(case_.buses.size()); }
  int num_lines() const { return static_cast<int>(case_.lines.size()); }
  int num_generators() const { return static_cast<int>(case_.generators.size()); }
  int num_loads() const { return static_cast<int>(case_.loads.size()); }
  int horizon() const { return case_.horizon_T; }
  int window() const { return case_.window_W; }
  double interval_hours() const { return case_.interval_hours; }

  int bus_index(const std::string& id) const;
  int line_index(const std::string& id) const;
  int generator_index(const std::string& id) const;
  int load_index(const std::string& id) const;

  int slack_index() const { return slack_index_; }
  int generator_bus(int g) const { return gen_bus_[g]; }
  int load_bus(int l) const { return load_bus_[l]; }

  /// Total forecast load at an interval, MW.
  double total_demand(int t) const;

  /// Non-fatal findings from validation (e.g. a shedding price that does not
  /// dominate every energy bid).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  GridCase case_;
  std::unordered_map<std::string, int> bus_idx_, line_idx_, gen_idx_, load_idx_;
  std::vector<int> gen_bus_, load_bus_;
  int slack_index_ = -1;
  std::vector<std::string> warnings_;
};

/// PTDF rows for the surviving lines of one line-status state, relative to the
/// case's slack bus. bus_ptdf(r, b) is the sensitivity of the flow on line
/// line_rows[r] to an injection at bus b withdrawn at the slack.
struct ShiftFactors {
  std::vector<int> line_rows;  // indices into GridCase::lines, in service
  Eigen::MatrixXd bus_ptdf;    // rows align with line_rows, cols are buses

  double generator_factor(const ValidatedCase& grid, int row, int gen) const {
    return bus_ptdf(row, grid.generator_bus(gen));
  }
  double load_factor(const ValidatedCase& grid, int row, int load) const {
    return bus_ptdf(row, grid.load_bus(load));
  }
};

/// Shift factors plus the line ratings that apply in the given state.
struct ContingencyState {
  ShiftFactors factors;
  std::vector<double> capacities;  // aligned with factors.line_rows
};

/// True when every bus that carries generation or load (plus the slack) is in
/// one connected component of the in-service subgraph.
bool is_connected(const ValidatedCase& grid, const std::vector<std::uint8_t>& in_service);

/// Standard DC PTDF from susceptances and the slack choice. Throws
/// IslandingError when the in-service subgraph disconnects a bus that matters.
ShiftFactors compute_ptdf(const ValidatedCase& grid, const std::vector<std::uint8_t>& in_service);

/// Shift factors after removing `outage_ids`. An empty outage set returns the
/// nominal factors with nominal ratings; any outage switches the surviving
/// lines to their contingency ratings.
ContingencyState apply_contingency(const ValidatedCase& grid,
                                   const std::vector<std::string>& outage_ids);

}  // namespace gridroll
