#pragma once

#include <limits>
#include <string>
#include <vector>

#include "gridroll/errors.hpp"

namespace gridroll {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Sparse linear program in ranged-row form:
///
///   minimize    cost' x
///   subject to  row_lower <= A x <= row_upper
///               col_lower <=   x <= col_upper
///
/// Rows with row_lower == row_upper are equalities. Columns are stored
/// compressed (CSC); use add_col/add_row/add_entry and call finalize() once.
class LpProblem {
 public:
  int add_col(std::string name, double lower, double upper, double cost);
  int add_row(std::string name, double lower, double upper);
  void add_entry(int row, int col, double value);
  void set_cost(int col, double cost) { cost_[col] = cost; }
  void set_col_bounds(int col, double lower, double upper);
  void set_row_bounds(int row, double lower, double upper);

  /// Sorts and compresses the coefficient triplets. Duplicate (row, col)
  /// entries are summed. Must be called before solving.
  void finalize();
  bool finalized() const { return finalized_; }

  int num_cols() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(row_lower_.size()); }
  std::size_t num_entries() const { return values_.size(); }

  const std::vector<double>& cost() const { return cost_; }
  const std::vector<double>& col_lower() const { return col_lower_; }
  const std::vector<double>& col_upper() const { return col_upper_; }
  const std::vector<double>& row_lower() const { return row_lower_; }
  const std::vector<double>& row_upper() const { return row_upper_; }
  const std::vector<std::size_t>& col_start() const { return col_start_; }
  const std::vector<int>& row_index() const { return row_index_; }
  const std::vector<double>& values() const { return values_; }
  const std::string& col_name(int j) const { return col_name_[j]; }
  const std::string& row_name(int r) const { return row_name_[r]; }

  /// Row activities A x for a full primal vector.
  std::vector<double> row_activity(const std::vector<double>& x) const;

  /// Writes the problem in CPLEX LP text format using the tag-map names, for
  /// cross-checking against external solvers.
  std::string to_lp_format() const;

 private:
  std::vector<double> cost_, col_lower_, col_upper_, row_lower_, row_upper_;
  std::vector<std::string> col_name_, row_name_;
  // triplets until finalize(), CSC afterwards
  std::vector<int> trip_row_, trip_col_;
  std::vector<double> trip_val_;
  std::vector<std::size_t> col_start_;
  std::vector<int> row_index_;
  std::vector<double> values_;
  bool finalized_ = false;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit, Numerical };

/// Basis status of one variable (column or row logical), for warm starts and
/// vertex inspection.
enum class BasisStatus : std::uint8_t { Basic, AtLower, AtUpper, FreeNonbasic };

/// Solution of an LpProblem with duals in the convention
///
///   cost = A' row_dual + col_reduced_cost
///
/// where for a minimization a row binding at its lower bound has row_dual >= 0,
/// a row binding at its upper bound has row_dual <= 0, and analogously a column
/// at its lower/upper bound has nonnegative/nonpositive reduced cost. The
/// multiplier of an `A x <= u` constraint in a "cost plus violation" Lagrangian
/// is therefore -row_dual, and +row_dual for `A x >= l`.
struct LpSolution {
  LpStatus status = LpStatus::Numerical;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> row_value;
  std::vector<double> row_dual;
  std::vector<double> col_reduced_cost;
  std::vector<BasisStatus> col_basis;
  std::vector<BasisStatus> row_basis;
  long iterations = 0;
  double primal_infeasibility = 0.0;  // max bound/row violation at exit
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  long max_iterations = -1;  // -1: scaled with problem size
  int refactor_interval = 100;
  // after this many consecutive degenerate pivots, fall back to Bland's rule
  int degenerate_limit = 60;
};

/// Solves the LP with a two-phase bounded-variable revised simplex method.
/// This is the single seam where an external solver could be plugged in; the
/// rest of the library depends only on LpProblem/LpSolution.
LpSolution lp_solve(const LpProblem& lp, const SimplexOptions& options = {});

}  // namespace gridroll
