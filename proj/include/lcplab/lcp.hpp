#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcplab/linalg.hpp"
#include "lcplab/lp.hpp"

namespace lcplab {

// LCP(q,A): find z >= 0 with w = q + Az >= 0 and z^T w = 0.
struct LcpInstance {
  RationalMatrix a;
  RationalVector q;

  LcpInstance(RationalMatrix a_, RationalVector q_);
  int n() const { return a.n(); }
};

struct LcpSolution {
  RationalVector z, w;
  IndexSet support;        // indices with z_i > 0
  Rational min_z, min_w;   // smallest components
  Rational complementarity;  // z^T w

  // Builds the solution record from z, recomputing w = q + Az.
  static LcpSolution from_z(const LcpInstance& inst, RationalVector z);
};

struct CheckResult {
  bool valid = false;
  Rational min_z, min_w, complementarity;
};

// Exact verdict: z >= -tol, q + Az >= -tol, |z^T(q+Az)| <= tol.
CheckResult check_solution(const LcpInstance& inst, const RationalVector& z,
                           const Rational& tol = Rational(0));

struct CheckResultF {
  bool valid = false;
  double min_z = 0, min_w = 0, complementarity = 0;
};

// Floating-point verdict with the same shape.
CheckResultF check_solution(const LcpInstance& inst,
                            const std::vector<double>& z, double tol);

struct EnumerateResult {
  std::vector<LcpSolution> solutions;  // deduplicated, support-lex order
  bool solvable = false;
};

// Definitional oracle: for every support a solve A[a,a] z_a = -q_a and keep
// the candidates with z_a >= 0 and q_abar + A[abar,a] z_a >= 0. Singular
// blocks fall back to an exact feasibility LP on {z_a >= 0,
// A[a,a] z_a = -q_a, q_abar + A[abar,a] z_a >= 0} so that supports whose
// basic system is consistent but not uniquely solvable are still covered.
// Throws std::invalid_argument when n > 20.
EnumerateResult solve_enumerate(const LcpInstance& inst);

// Almost-complementary ray returned when Lemke terminates without a
// solution: points z(t) = z + t*z_dir, z0(t) = z0 + t*z0_dir stay feasible
// for the augmented system w = q + Az + d*z0 >= 0 for all t >= 0.
struct LemkeRay {
  RationalVector z, z_dir;
  Rational z0, z0_dir;
};

struct LemkeOutcome {
  std::optional<LcpSolution> solution;
  std::optional<LemkeRay> ray;
  int pivots = 0;
  // Sorted basic-column signature after every pivot (initial basis first);
  // lexicographic tie-breaking guarantees no repeats.
  std::vector<std::vector<int>> basis_history;
};

// Complementary pivoting on [I, -A, -d | q] with exact rationals and
// lexicographic ratio tests (w-columns double as the basis inverse).
// The covering vector d defaults to all ones and must be positive.
LemkeOutcome solve_lemke(const LcpInstance& inst,
                         RationalVector covering = {});

// Exact LP: maximize t subject to z >= t e, q + Az >= t e, t <= 1, z >= 0.
// Returns z from the optimum when t* > 0, otherwise nothing.
std::optional<RationalVector> strict_feasible_point(const LcpInstance& inst);

}  // namespace lcplab
