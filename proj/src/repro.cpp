#include "lcplab/repro.hpp"

#include <cmath>
#include <sstream>

#include "lcplab/classes.hpp"
#include "lcplab/generate.hpp"
#include "lcplab/ipm.hpp"
#include "lcplab/lcp.hpp"
#include "lcplab/ppt.hpp"

namespace lcplab {

namespace {

RationalMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.push_back(Rational(x));
    r.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(r);
}

RationalVector vec(const std::vector<long>& xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::string expect(bool cond, const std::string& what) {
  return cond ? "" : what;
}

// The worked 3x3 instance driven end to end by the solvers.
const RationalMatrix& worked_matrix() {
  static const RationalMatrix a = mat({{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}});
  return a;
}

LcpInstance worked_instance() {
  return LcpInstance(worked_matrix(), vec({-4, -7, 10}));
}

RationalVector worked_solution() {
  return {Rational(15, 14), Rational(11, 7), Rational(17, 7)};
}

// The 3x3 member whose symmetrization, inverse and transpose all leave the
// class (three separate checks share it).
const RationalMatrix& fragile_member() {
  static const RationalMatrix a = mat({{0, 1, 1}, {2, 0, 1}, {-1, -1, 0}});
  return a;
}

std::string check_negative_e0s(const RationalMatrix& a,
                               const std::string& label) {
  ClassVerdict v = is_E0s(a);
  if (v.member) return label + " unexpectedly passes the E0s detector";
  bool ok = reverify_violation(MatrixClass::E0, a, v) ||
            reverify_violation(MatrixClass::Star, a, v);
  return expect(ok, label + ": violation witness does not re-verify");
}

std::vector<ReproCheck> build_checks() {
  std::vector<ReproCheck> cs;
  auto add = [&](std::string name, std::function<std::string()> fn) {
    cs.push_back({std::move(name), std::move(fn)});
  };

  add("e0s_member_upper_2x2", [] {
    return expect(is_E0s(mat({{0, -5}, {2, 0}})).member,
                  "[[0,-5],[2,0]] should be E0s");
  });

  add("e0s_member_bordered_3x3", [] {
    return expect(is_E0s(mat({{0, 1, 1}, {2, 0, 2}, {-4, -5, 0}})).member,
                  "bordered 3x3 should be E0s");
  });

  add("e0s_closed_under_permutation_similarity", [] {
    RationalMatrix a = mat({{0, 1, 1}, {2, 0, 2}, {-4, -5, 0}});
    RationalMatrix p = mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    RationalMatrix papt = p * a * p.transpose();
    if (papt != mat({{0, -4, -5}, {1, 0, 1}, {2, 2, 0}}))
      return std::string("PAP^T came out wrong");
    return expect(is_E0s(papt).member, "PAP^T should stay E0s");
  });

  add("e0s_not_closed_under_symmetrization", [] {
    const RationalMatrix& a = fragile_member();
    if (!is_E0s(a).member) return std::string("base matrix should be E0s");
    RationalMatrix s(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s.at(i, j) = a.at(i, j) + a.at(j, i);
    if (s != mat({{0, 3, 0}, {3, 0, 0}, {0, 0, 0}}))
      return std::string("A + A^T came out wrong");
    return check_negative_e0s(s, "symmetrization");
  });

  add("full_pivot_matches_inverse", [] {
    const RationalMatrix& a = fragile_member();
    IndexSet full({0, 1, 2});
    auto m = ppt_transform(a, full);
    if (!m) return std::string("full pivot should be legitimate");
    RationalMatrix expected(3);
    long num[3][3] = {{-1, 1, -1}, {1, -1, -2}, {2, 1, 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) expected.at(i, j) = Rational(num[i][j], 3);
    if (*m != expected) return std::string("full pivot value mismatch");
    auto inv = inverse(a);
    if (!inv || *inv != expected)
      return std::string("inverse disagrees with the expected value");
    return std::string("");
  });

  add("e0s_not_closed_under_inversion", [] {
    auto inv = inverse(fragile_member());
    if (!inv) return std::string("matrix should be invertible");
    return check_negative_e0s(*inv, "inverse");
  });

  add("e0s_not_closed_under_transpose", [] {
    return check_negative_e0s(fragile_member().transpose(), "transpose");
  });

  add("e0s_not_hereditary", [] {
    RationalMatrix a = mat({{0, 1, 1}, {2, 0, 1}, {-4, -5, 0}});
    if (!is_E0s(a).member) return std::string("3x3 matrix should be E0s");
    RationalMatrix sub = principal_submatrix(a, IndexSet({0, 1}));
    if (sub != mat({{0, 1}, {2, 0}}))
      return std::string("leading 2x2 block extraction mismatch");
    std::string err = check_negative_e0s(sub, "leading 2x2 block");
    if (!err.empty()) return err;
    ClassVerdict all = is_completely_E0s(a);
    return expect(!all.member,
                  "completely-E0s should fail via the leading block");
  });

  add("e0s_member_skew_like_2x2", [] {
    return expect(is_E0s(mat({{0, 3}, {-1, 0}})).member,
                  "[[0,3],[-1,0]] should be E0s");
  });

  add("tilde_member_not_copositive_star", [] {
    RationalMatrix a = mat({{0, 1, 1}, {2, 0, 2}, {-2, -4, 0}});
    if (!is_E0s_tilde(a).member) return std::string("matrix should be E0s~");
    ClassVerdict cop = is_copositive_star(a);
    if (cop.member) return std::string("matrix should fall outside C0*");
    return expect(reverify_violation(MatrixClass::CopositiveStar, a, cop),
                  "C0* violation witness does not re-verify");
  });

  add("p0_e0s_member_outside_tilde", [] {
    RationalMatrix a = mat({{1, -1, -2}, {-1, 1, 0}, {0, 0, 1}});
    if (!is_p0(a).member) return std::string("matrix should be P0");
    if (!is_E0s(a).member) return std::string("matrix should be E0s");
    ClassVerdict t = is_E0s_tilde(a);
    if (t.member) return std::string("matrix should fall outside E0s~");
    if (!reverify_violation(MatrixClass::E0sTilde, a, t))
      return std::string("tilde violation witness does not re-verify");
    // independent hand witness: x = (1,1,0)
    RationalVector x = vec({1, 1, 0});
    RationalVector ax = a.apply(x), atx = a.apply_transpose(x);
    if (!(is_nonneg(ax) && dot(x, ax) == 0))
      return std::string("hand witness left SOL(0,A)");
    return expect(ax[2] == 0 && atx[2] != 0,
                  "hand witness should break the tilde condition at index 3");
  });

  add("tilde_r0_with_positive_game_value", [] {
    RationalMatrix a = mat({{0, 2, 1}, {1, 0, 1}, {-2, -2, 1}});
    ClassReport r = classify_full(a);
    if (!r.e0s_tilde.member) return std::string("matrix should be E0s~");
    if (!r.r0.member) return std::string("matrix should be R0");
    if (!(r.game.value > 0)) return std::string("game value should be > 0");
    if (!r.q_b.holds) return std::string("Q_b should be derived");
    RationalVector ax = a.apply(vec({1, 1, 5}));
    if (!(ax == vec({7, 6, 1})))
      return std::string("A(1,1,5) should equal (7,6,1)");
    return std::string("");
  });

  add("worked_instance_exact_solution", [] {
    // The zero diagonal admits two boundary solutions next to the interior
    // one, so the instance has exactly three. The interior point is the only
    // full-support one and equals -A^{-1} q; the default covering vector
    // walks Lemke onto the support {1,2} boundary solution.
    LcpInstance inst = worked_instance();
    EnumerateResult e = solve_enumerate(inst);
    if (!e.solvable || e.solutions.size() != 3)
      return std::string("enumeration should find exactly three solutions");
    if (e.solutions[0].z != worked_solution())
      return std::string("interior z mismatch: got " +
                         to_string(e.solutions[0].z));
    if (!is_zero(e.solutions[0].w))
      return std::string("w should vanish at the interior solution");
    RationalVector boundary1 = {Rational(5), Rational(0), Rational(4)};
    RationalVector boundary2 = {Rational(0), Rational(2), Rational(7, 2)};
    if (e.solutions[1].z != boundary1 || e.solutions[2].z != boundary2)
      return std::string("boundary solutions mismatch: got " +
                         to_string(e.solutions[1].z) + " and " +
                         to_string(e.solutions[2].z));
    LemkeOutcome l = solve_lemke(inst);
    if (!l.solution) return std::string("pivoting should find a solution");
    return expect(l.solution->z == boundary2 && l.pivots == 3,
                  "pivoting z mismatch: got " + to_string(l.solution->z));
  });

  add("worked_instance_start_slacks", [] {
    LcpInstance inst = worked_instance();
    RationalVector w0 = inst.q + inst.a.apply(vec({1, 1, 5}));
    return expect(w0 == vec({2, 5, 3}),
                  "q + A(1,1,5) should equal (2,5,3), got " + to_string(w0));
  });

  add("worked_instance_ipm_converges", [] {
    IpmParams p;
    p.z0 = VectorD{1, 1, 5};
    IpmResult r = solve_ipm(worked_instance(), p);
    if (r.status != IpmStatus::Converged)
      return "status " + ipm_status_name(r.status);
    if (r.trace.size() > 501)
      return std::string("took more than 500 iterations");
    if (!(r.trace.back().ztw <= 1e-5))
      return std::string("final z^T w above the tolerance");
    RationalVector zs = worked_solution();
    for (int i = 0; i < 3; ++i)
      if (std::fabs(r.z[i] - to_double(zs[i])) > 1e-3)
        return std::string("limit differs from the exact solution at " +
                           std::to_string(i + 1));
    return std::string("");
  });

  add("worked_instance_psi_monotone", [] {
    IpmParams p;
    p.z0 = VectorD{1, 1, 5};
    IpmResult r = solve_ipm(worked_instance(), p);
    if (r.status != IpmStatus::Converged)
      return "status " + ipm_status_name(r.status);
    for (size_t k = 0; k + 1 < r.trace.size(); ++k) {
      const IpmIterate& a = r.trace[k];
      const IpmIterate& b = r.trace[k + 1];
      if (!(merit_psi(b.z, b.w, a.kappa) < a.psi))
        return "psi not decreased at step " + std::to_string(k);
    }
    return std::string("");
  });

  add("worked_instance_class_flags", [] {
    // R0 (and with it Q_b) genuinely fails here: e3 lies in SOL(0,A), and
    // row 3 <= 0 rules out Ax > 0 for x >= 0, so v(A) <= 0.
    ClassReport r = classify_full(worked_matrix());
    if (!r.e0s_tilde.member) return std::string("matrix should be E0s~");
    if (r.r0.member) return std::string("R0 should fail (e3 solves LCP(0,A))");
    if (!(r.r0.witness && *r.r0.witness == vec({0, 0, 1})))
      return std::string("R0 witness should be e3");
    if (r.game.value > 0) return std::string("game value should be <= 0");
    return expect(!r.q_b.holds, "no Q_b route should fire");
  });

  add("det_of_fragile_member_is_minus_3", [] {
    return expect(determinant(fragile_member()) == Rational(-3),
                  "determinant should be -3");
  });

  add("structured_identity_block", [] {
    RationalMatrix got = generate_structured(RationalMatrix::identity(2),
                                             vec({1, 1}), vec({-1, -1}));
    return expect(got == mat({{1, 0, 1}, {0, 1, 1}, {-1, -1, 0}}),
                  "bordered identity construction mismatch");
  });

  add("structured_scalar_block", [] {
    RationalMatrix block(1);
    block.at(0, 0) = 2;
    RationalMatrix got = generate_structured(block, vec({1}), vec({-1}));
    return expect(got.n() == 2 && is_E0s_tilde(got).member,
                  "2x2 construction should be E0s~");
  });

  add("structured_rejects_non_p0_block", [] {
    RationalMatrix block(1);
    block.at(0, 0) = -1;
    try {
      generate_structured(block, vec({1}), vec({-1}));
    } catch (const std::invalid_argument&) {
      return std::string("");
    }
    return std::string("negative block should be rejected");
  });

  add("game_value_skew_symmetric_zero", [] {
    return expect(game_value(mat({{0, 1}, {-1, 0}})).value == 0,
                  "skew-symmetric game should have value 0");
  });

  add("game_value_identity_2x2", [] {
    GameValue g = game_value(RationalMatrix::identity(2));
    if (g.value != Rational(1, 2)) return std::string("value should be 1/2");
    return expect(g.row_strategy == RationalVector{Rational(1, 2),
                                                   Rational(1, 2)},
                  "row strategy should be (1/2,1/2)");
  });

  return cs;
}

}  // namespace

const std::vector<ReproCheck>& repro_checks() {
  static const std::vector<ReproCheck> cs = build_checks();
  return cs;
}

ReproResult run_repro_check(const ReproCheck& c) {
  ReproResult r;
  r.name = c.name;
  try {
    r.message = c.run();
    r.pass = r.message.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.message = std::string("exception: ") + e.what();
  }
  return r;
}

std::vector<ReproResult> run_repro_checks() {
  std::vector<ReproResult> out;
  for (const ReproCheck& c : repro_checks()) out.push_back(run_repro_check(c));
  return out;
}

}  // namespace lcplab
