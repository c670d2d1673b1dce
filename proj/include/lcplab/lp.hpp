#pragma once

#include <optional>
#include <vector>

#include "lcplab/linalg.hpp"

namespace lcplab {

enum class Rel { LE, EQ, GE };

struct LpConstraint {
  RationalVector coeffs;  // size num_vars
  Rel rel = Rel::LE;
  Rational rhs = Rational(0);
};

struct LpProblem {
  int num_vars = 0;
  bool maximize = false;
  RationalVector objective;  // size num_vars
  std::vector<LpConstraint> rows;
  // Per-variable lower bound; nullopt means the variable is free.
  std::vector<std::optional<Rational>> lower;

  static LpProblem with_vars(int m);
  void add_row(RationalVector coeffs, Rel rel, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value = Rational(0);  // objective at optimum, in the given sense
  RationalVector point;          // optimal point, or the vertex a ray leaves
  RationalVector ray;            // improving feasible direction if Unbounded
};

// Exact two-phase primal simplex with Bland's rule (anti-cycling). All
// arithmetic is rational; the returned vertex is exact.
LpOutcome lp_solve(const LpProblem& p);

// Feasibility probe: exact witness point, or nullopt.
std::optional<RationalVector> lp_feasible(const LpProblem& p);

// Matrix game value in the convention v(A) = max_x min_i (Ax)_i over
// probability vectors, so v(A) > 0 iff some 0 != x >= 0 has Ax > 0.
// row_strategy is the maximizing x, col_strategy the minimizing y with
// A^T y <= v e. Computed by shifting A positive (c = max(1, 1 - min entry))
// and solving the two normalization LPs; exact duality is asserted.
struct GameValue {
  Rational value;
  RationalVector row_strategy;
  RationalVector col_strategy;
};

GameValue game_value(const RationalMatrix& a);

}  // namespace lcplab
