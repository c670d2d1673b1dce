#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcplab/linalg.hpp"
#include "lcplab/lp.hpp"

namespace lcplab {

// Verdict for one matrix class. When member is false the witness (if the
// class has a vector-valued violation) re-verifies the definitional
// violation exactly; support/index locate it (0-based).
struct ClassVerdict {
  bool member = false;
  std::optional<RationalVector> witness;
  std::optional<IndexSet> support;
  std::optional<int> index;
  std::string detail;

  static ClassVerdict yes() { return {true, {}, {}, {}, ""}; }
};

enum class MatrixClass {
  E0,
  E,
  Star,
  E0s,
  E0sTilde,
  CompletelyE0s,
  P0,
  P,
  Psd,
  Z,
  Copositive,
  CopositiveStar,
  R0,
  Sufficient,
};

std::string class_name(MatrixClass c);

// Semimonotone (E0): every 0 != x >= 0 has an i with x_i > 0, (Ax)_i >= 0.
// Decided per support a by the closed homogeneous reduction
// {x_a >= 1, A[a,a] x_a <= -1} (feasible iff a violating x with that
// support exists); supports scanned in lex order, first hit wins.
ClassVerdict is_semimonotone(const RationalMatrix& a);

// Strictly semimonotone (E): as E0 with strict conclusion; reduction
// {x_a >= 1, A[a,a] x_a <= 0}.
ClassVerdict is_strictly_semimonotone(const RationalMatrix& a);

// Star property: A^T x <= 0 for every x in SOL(0,A). Normalized solutions
// with support a form the polytope
//   C_a = {x_a >= 0, sum x_a = 1, A[a,a] x_a = 0, A[abar,a] x_a >= 0}
// (every point of C_a lies in SOL(0,A) and every normalized solution lies in
// C_supp(x)), so the property holds iff max (A^T x)_i <= 0 over every
// nonempty C_a for every i.
ClassVerdict star_property(const RationalMatrix& a);

// E0s = E0 and star.
ClassVerdict is_E0s(const RationalMatrix& a);

// E0s~ : E0s plus, on SOL(0,A), (A^T x)_i != 0 implies (Ax)_i != 0.
// Contrapositive checked exactly: for i in a both the max and min of
// (A^T x)_i over C_a are 0; for i outside a the same over
// C_a intersect {(Ax)_i = 0} when nonempty.
ClassVerdict is_E0s_tilde(const RationalMatrix& a);

// Every principal submatrix (including A) in E0s.
ClassVerdict is_completely_E0s(const RationalMatrix& a);

enum class MinorClass { P, P0, AlmostP0, N0, N, None };

std::string minor_class_name(MinorClass c);

struct MinorClassResult {
  MinorClass label = MinorClass::None;
  // (alpha, det A[alpha,alpha]) for every nonempty alpha, lex order.
  std::vector<std::pair<IndexSet, Rational>> minors;
};

// Label priority when several apply: P, P0, N, N0, almost-P0, none.
MinorClassResult principal_minor_class(const RationalMatrix& a);

ClassVerdict is_p0(const RationalMatrix& a);
ClassVerdict is_p(const RationalMatrix& a);

// PSD of the symmetric part (x^T A x >= 0 for all x). Decided by exact
// pivoted Schur elimination; a negative verdict carries x with x^T A x < 0.
ClassVerdict is_psd(const RationalMatrix& a);

// Off-diagonal entries <= 0.
ClassVerdict is_z_matrix(const RationalMatrix& a);

// Copositive: x^T A x >= 0 on x >= 0. Face LPs on S = (A + A^T)/2: for each
// nonempty face a, minimize l subject to {2 S[a,a] x = l e, sum x = 1,
// x >= 0}; a feasible point with l < 0 is a violation (x^T A x = l/2), and
// the global simplex minimizer is stationary on its own face, so scanning
// all faces is complete.
ClassVerdict is_copositive(const RationalMatrix& a);

// C0* = copositive and star.
ClassVerdict is_copositive_star(const RationalMatrix& a);

// R0: SOL(0,A) = {0}, i.e. every C_a is empty.
ClassVerdict is_r0(const RationalMatrix& a);

// Sufficient (column and row). Decided by the order-2 principal pivot
// criterion: A is sufficient iff every legitimate PPT of A has all principal
// submatrices of order <= 2 (column and row) sufficient. 2x2 sufficiency
// uses an exact sign case table; every negative verdict is mapped back to a
// definitional violating vector for A itself and re-checked before return.
ClassVerdict is_sufficient(const RationalMatrix& a);

// Exact 2x2 column sufficiency (the frozen case table) plus a closed-form
// violating vector when false. Exposed for oracle cross-validation.
std::pair<bool, std::optional<RationalVector>> column_sufficient_2x2(
    const RationalMatrix& b);

// One exact point of each nonempty normalized solution cone C_a, lex order.
std::vector<std::pair<IndexSet, RationalVector>> sol0_representatives(
    const RationalMatrix& a);

// Scaling certificate for the L2 property at x: D2 = I and
// D1_ii = -(A^T x)_i / (Ax)_i when (Ax)_i != 0, else 0. Returned only if
// D1 >= 0 and (D1 A + A^T D2) x = 0 verify exactly; VerifyFailed signals the
// caller's E0s~ assumption does not hold at x.
struct L2Certificate {
  RationalVector d1;  // diagonal
  RationalVector d2;  // diagonal (all ones)
};

enum class L2Status { Ok, NotInSol0, VerifyFailed };

struct L2Result {
  L2Status status = L2Status::NotInSol0;
  std::optional<L2Certificate> cert;
  std::string detail;
};

L2Result l2_certificate(const RationalMatrix& a, const RationalVector& x);

struct DerivedFlag {
  bool holds = false;
  std::vector<std::string> premises;  // one entry per established route
};

struct ClassReport {
  int n = 0;
  ClassVerdict e0, e, star, e0s, e0s_tilde, completely_e0s, p0, p, psd, z,
      copositive, copositive_star, r0, sufficient;
  MinorClassResult minor_class;
  GameValue game;
  DerivedFlag q;        // processability of every q (E0 and R0)
  DerivedFlag q_b;      // nonempty bounded solution sets
  DerivedFlag q0_via_l; // partial: only the E0 cap L2 route is implemented
};

// Ordered (name, verdict) view used by report rendering.
std::vector<std::pair<MatrixClass, const ClassVerdict*>> report_entries(
    const ClassReport& r);

// Runs every detector, derives Q/Q_b/Q0 flags with premise chains, and
// asserts the class lattice (throws std::logic_error on an inconsistent
// output, which would indicate a detector bug).
ClassReport classify_full(const RationalMatrix& a);

// Exact definitional re-check of a negative verdict's violation.
bool reverify_violation(MatrixClass cls, const RationalMatrix& a,
                        const ClassVerdict& v);

}  // namespace lcplab
