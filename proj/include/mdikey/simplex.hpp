#pragma once

#include <string>
#include <vector>

namespace mdikey {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(LpStatus s);

// Dense linear program with box bounds. Problems here are tiny (around a
// hundred variables), so everything is kept dense and deterministic.
struct LinearProgram {
  Sense sense = Sense::Minimize;
  std::vector<double> objective;
  std::vector<std::string> var_names;
  std::vector<double> lower, upper;  // +-infinity allowed
  std::vector<std::vector<double>> rows;
  std::vector<Relation> relations;
  std::vector<double> rhs;

  int add_variable(const std::string& name, double lo, double hi);
  void add_row(std::vector<double> coeffs, Relation rel, double b);
  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  // Plain-text canonical dump (objective row, constraint rows, bounds) for
  // external cross-checking.
  std::string to_text() const;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  // max violation of the original constraints and bounds at x
  double residual = 0.0;
  int pivots = 0;
  // unbounded: improving ray in the original variable space;
  // infeasible: phase-1 row multipliers (Farkas direction)
  std::vector<double> certificate;
};

LpSolution solve_lp(const LinearProgram& lp, int max_pivots = 100000);

}  // namespace mdikey
