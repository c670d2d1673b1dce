#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcplab/classes.hpp"
#include "lcplab/generate.hpp"
#include "oracles.hpp"

using namespace lcplab;

namespace {

RationalMatrix mk(const std::vector<std::vector<long>>& rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.push_back(Rational(x));
    r.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(r);
}

RationalMatrix random_matrix(Rng& rng, int n, long lo, long hi) {
  RationalMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = Rational(rng.range(lo, hi));
  return a;
}

}  // namespace

TEST_CASE("semimonotone star verdicts on the curated family") {
  CHECK(is_E0s(mk({{0, -5}, {2, 0}})).member);
  CHECK(is_E0s(mk({{0, 3}, {-1, 0}})).member);
  CHECK(is_E0s(mk({{0, 1, 1}, {2, 0, 2}, {-4, -5, 0}})).member);
  CHECK(is_E0s(mk({{0, -4, -5}, {1, 0, 1}, {2, 2, 0}})).member);

  // same family is fragile under symmetrization, inversion, transposition
  for (const auto& rows : {std::vector<std::vector<long>>{{0, 3, 0},
                                                          {3, 0, 0},
                                                          {0, 0, 0}},
                           {{0, 2, -1}, {1, 0, -1}, {1, 1, 0}}}) {
    RationalMatrix a = mk(rows);
    ClassVerdict v = is_E0s(a);
    CHECK(!v.member);
    CHECK((reverify_violation(MatrixClass::E0, a, v) ||
           reverify_violation(MatrixClass::Star, a, v)));
  }

  RationalMatrix inv3(3);
  long num[3][3] = {{-1, 1, -1}, {1, -1, -2}, {2, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv3.at(i, j) = Rational(num[i][j], 3);
  ClassVerdict v = is_E0s(inv3);
  CHECK(!v.member);
  CHECK(reverify_violation(MatrixClass::E0, inv3, v));
}

TEST_CASE("membership is not hereditary") {
  RationalMatrix a = mk({{0, 1, 1}, {2, 0, 1}, {-4, -5, 0}});
  CHECK(is_E0s(a).member);
  ClassVerdict sub = is_E0s(principal_submatrix(a, IndexSet({0, 1})));
  CHECK(!sub.member);
  ClassVerdict all = is_completely_E0s(a);
  CHECK(!all.member);
  REQUIRE(all.support);
  CHECK(reverify_violation(MatrixClass::CompletelyE0s, a, all));

  // hereditary on the positive side: a P-matrix passes completely
  CHECK(is_completely_E0s(RationalMatrix::identity(3)).member);
}

TEST_CASE("tilde refinement separates the two 3x3 neighbours") {
  RationalMatrix yes = mk({{0, 1, 1}, {2, 0, 2}, {-2, -4, 0}});
  CHECK(is_E0s_tilde(yes).member);
  ClassVerdict cop = is_copositive_star(yes);
  CHECK(!cop.member);
  CHECK(reverify_violation(MatrixClass::CopositiveStar, yes, cop));

  RationalMatrix no = mk({{1, -1, -2}, {-1, 1, 0}, {0, 0, 1}});
  CHECK(is_p0(no).member);
  CHECK(is_E0s(no).member);
  ClassVerdict t = is_E0s_tilde(no);
  CHECK(!t.member);
  REQUIRE(t.index);
  CHECK(reverify_violation(MatrixClass::E0sTilde, no, t));
}

TEST_CASE("exhaustive 2x2 sweep against the definitional oracles") {
  int checked = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          RationalMatrix m = mk({{a, b}, {c, d}});
          CHECK(is_semimonotone(m).member == oracle::e0_2x2(m));
          if (is_semimonotone(m).member)
            CHECK(star_property(m).member == oracle::star_2x2(m));
          ++checked;
        }
  CHECK(checked == 625);
}

TEST_CASE("star verdicts hold without semimonotonicity too") {
  // star_property quantifies over LCP(0,A) solutions regardless of E0
  for (long a = -2; a <= 2; ++a)
    for (long c = -2; c <= 2; ++c) {
      RationalMatrix m = mk({{a, -1}, {c, -2}});
      CHECK(star_property(m).member == oracle::star_2x2(m));
    }
}

TEST_CASE("strict semimonotonicity is the strict variant") {
  CHECK(is_strictly_semimonotone(RationalMatrix::identity(2)).member);
  CHECK(is_strictly_semimonotone(mk({{1, -1}, {2, 1}})).member);
  ClassVerdict v = is_strictly_semimonotone(mk({{0, 1}, {1, 0}}));
  CHECK(!v.member);  // x = e1 has (Ax)_1 = 0, never > 0
  CHECK(reverify_violation(MatrixClass::E, mk({{0, 1}, {1, 0}}), v));
  // E implies E0 on randoms
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    RationalMatrix m = random_matrix(rng, 3, -2, 2);
    if (is_strictly_semimonotone(m).member)
      CHECK(is_semimonotone(m).member);
  }
}

TEST_CASE("positive semidefiniteness with exact witnesses") {
  CHECK(is_psd(mk({{2, -1}, {-1, 2}})).member);
  CHECK(is_psd(mk({{1, 2}, {0, 1}})).member);  // symmetrized part is PSD
  CHECK(is_psd(mk({{0, 1}, {-1, 0}})).member); // skew: x^T A x = 0
  CHECK(is_psd(RationalMatrix(2)).member);     // zero matrix

  ClassVerdict v = is_psd(mk({{0, 1}, {1, 0}}));
  CHECK(!v.member);
  REQUIRE(v.witness);
  CHECK(dot(*v.witness, mk({{0, 1}, {1, 0}}).apply(*v.witness)) < 0);

  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    RationalMatrix m = random_matrix(rng, 4, -3, 3);
    ClassVerdict p = is_psd(m);
    if (!p.member) {
      CHECK(reverify_violation(MatrixClass::Psd, m, p));
    } else {
      // necessary spot-check: random rational directions stay nonnegative
      for (int s = 0; s < 20; ++s) {
        RationalVector x;
        for (int i = 0; i < 4; ++i)
          x.push_back(oracle::frac(rng.range(-5, 5), 1 + rng.range(0, 3)));
        CHECK(dot(x, m.apply(x)) >= 0);
      }
    }
  }
}

TEST_CASE("Z-matrices have nonpositive off-diagonals") {
  CHECK(is_z_matrix(mk({{3, -1}, {0, 2}})).member);
  CHECK(is_z_matrix(RationalMatrix::identity(3)).member);
  ClassVerdict v = is_z_matrix(mk({{0, 1}, {-1, 0}}));
  CHECK(!v.member);
  CHECK(reverify_violation(MatrixClass::Z, mk({{0, 1}, {-1, 0}}), v));
}

TEST_CASE("copositivity via face stationarity") {
  CHECK(is_copositive(mk({{0, 1}, {1, 0}})).member);
  CHECK(is_copositive(mk({{1, -1}, {-1, 1}})).member);
  // indefinite but copositive on the orthant despite negative entries
  CHECK(is_copositive(mk({{1, -1}, {2, 1}})).member);

  RationalMatrix bad = mk({{1, -3}, {-3, 1}});
  ClassVerdict v = is_copositive(bad);
  CHECK(!v.member);
  REQUIRE(v.witness);
  CHECK(is_nonneg(*v.witness));
  CHECK(dot(*v.witness, bad.apply(*v.witness)) < 0);

  Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    RationalMatrix m = random_matrix(rng, 3, -3, 3);
    ClassVerdict c = is_copositive(m);
    if (!c.member) {
      CHECK(reverify_violation(MatrixClass::Copositive, m, c));
    } else {
      for (int s = 0; s < 20; ++s) {
        RationalVector x;
        for (int i = 0; i < 3; ++i)
          x.push_back(oracle::frac(rng.range(0, 5), 1 + rng.range(0, 3)));
        CHECK(dot(x, m.apply(x)) >= 0);
      }
    }
  }
}

TEST_CASE("principal minor classes") {
  CHECK(principal_minor_class(RationalMatrix::identity(3)).label ==
        MinorClass::P);
  CHECK(principal_minor_class(RationalMatrix(2)).label == MinorClass::P0);
  CHECK(principal_minor_class(mk({{-1}})).label == MinorClass::N);
  CHECK(principal_minor_class(mk({{0, 1}, {1, 0}})).label == MinorClass::N0);
  CHECK(principal_minor_class(mk({{1, 2}, {2, 1}})).label ==
        MinorClass::AlmostP0);
  CHECK(principal_minor_class(mk({{-1, 0}, {0, -1}})).label ==
        MinorClass::None);

  auto res = principal_minor_class(mk({{0, 1}, {2, 0}}));
  REQUIRE(res.minors.size() == 3);
  // dets in subset-lex order: {1}, {1,2}, {2}
  CHECK(res.minors[1].second == Rational(-2));

  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    RationalMatrix m = random_matrix(rng, 3, -3, 3);
    auto mc = principal_minor_class(m);
    CHECK(is_p(m).member == (mc.label == MinorClass::P));
    for (const auto& [alpha, d] : mc.minors)
      CHECK(d == oracle::det_cofactor(principal_submatrix(m, alpha)));
  }
}

TEST_CASE("2x2 column sufficiency matches a dense refuter") {
  CHECK(!column_sufficient_2x2(mk({{-1, 0}, {0, 1}})).first);
  CHECK(!column_sufficient_2x2(mk({{1, 3}, {1, 1}})).first);
  CHECK(column_sufficient_2x2(mk({{0, 1}, {-1, 0}})).first);
  CHECK(column_sufficient_2x2(RationalMatrix::identity(2)).first);

  auto violates = [](const RationalMatrix& m, const RationalVector& x) {
    RationalVector mx = m.apply(x);
    bool some_neg = false;
    for (int i = 0; i < 2; ++i) {
      Rational p = x[i] * mx[i];
      if (p > 0) return false;
      if (p < 0) some_neg = true;
    }
    return some_neg;
  };

  Rng rng(53);
  for (int t = 0; t < 300; ++t) {
    RationalMatrix m = random_matrix(rng, 2, -2, 2);
    auto [ok, wit] = column_sufficient_2x2(m);
    if (!ok) {
      REQUIRE(wit);
      CHECK(violates(m, *wit));
    } else {
      // refuter scan: x over [-3,3]^2 in steps of 1/2
      for (long i = -6; i <= 6; ++i)
        for (long j = -6; j <= 6; ++j)
          CHECK(!violates(m, {oracle::frac(i, 2), oracle::frac(j, 2)}));
    }
  }
}

TEST_CASE("sufficiency through pivots agrees with the 2x2 criterion") {
  CHECK(is_sufficient(RationalMatrix::identity(3)).member);
  CHECK(is_sufficient(mk({{0, 1}, {-1, 0}})).member);
  ClassVerdict v = is_sufficient(mk({{-1, 0}, {0, 1}}));
  CHECK(!v.member);
  CHECK(reverify_violation(MatrixClass::Sufficient, mk({{-1, 0}, {0, 1}}), v));

  Rng rng(61);
  for (int t = 0; t < 120; ++t) {
    RationalMatrix m = random_matrix(rng, 2, -2, 2);
    bool direct = column_sufficient_2x2(m).first &&
                  column_sufficient_2x2(m.transpose()).first;
    // column sufficiency is invariant under principal pivoting, so for
    // n = 2 the pivot-based detector must coincide with the direct test
    CHECK(is_sufficient(m).member == direct);
  }
}

TEST_CASE("R0 and the solution cones of the homogeneous problem") {
  RationalMatrix a = mk({{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}});
  ClassVerdict r0 = is_r0(a);
  CHECK(!r0.member);
  REQUIRE(r0.witness);
  CHECK(*r0.witness == RationalVector{Rational(0), Rational(0), Rational(1)});
  CHECK(reverify_violation(MatrixClass::R0, a, r0));

  auto reps = sol0_representatives(a);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].first.idx == std::vector<int>{2});

  CHECK(is_r0(RationalMatrix::identity(3)).member);
  CHECK(is_r0(mk({{0, 2, 1}, {1, 0, 1}, {-2, -2, 1}})).member);
}

TEST_CASE("scaling certificates on the homogeneous solutions") {
  RationalMatrix a = mk({{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}});
  RationalVector e3 = {Rational(0), Rational(0), Rational(1)};
  L2Result res = l2_certificate(a, e3);
  REQUIRE(res.status == L2Status::Ok);
  REQUIRE(res.cert);
  for (int i = 0; i < 3; ++i) {
    CHECK(res.cert->d1[i] >= 0);
    // (D1 A + A^T) x = 0, row by row
    Rational row = res.cert->d1[i] * a.apply(e3)[i] + a.apply_transpose(e3)[i];
    CHECK(row == 0);
  }

  RationalVector e1 = {Rational(1), Rational(0), Rational(0)};
  CHECK(l2_certificate(a, e1).status == L2Status::NotInSol0);
}

TEST_CASE("full report wiring and derived flags") {
  ClassReport p = classify_full(mk({{2, 1}, {1, 2}}));
  CHECK(p.p.member);
  CHECK(p.psd.member);
  CHECK(p.sufficient.member);
  CHECK(p.e.member);
  CHECK(p.e0s_tilde.member);
  CHECK(p.r0.member);
  CHECK(p.q.holds);
  CHECK(p.q_b.holds);

  ClassReport w = classify_full(mk({{0, 1, 1}, {2, 0, 2}, {-2, -5, 0}}));
  CHECK(w.e0s_tilde.member);
  CHECK(!w.r0.member);
  CHECK(!w.q.holds);
  CHECK(!w.q_b.holds);
  CHECK(w.q0_via_l.holds);
  CHECK(!(w.game.value > 0));

  ClassReport g = classify_full(mk({{0, 2, 1}, {1, 0, 1}, {-2, -2, 1}}));
  CHECK(g.e0s_tilde.member);
  CHECK(g.r0.member);
  CHECK(g.game.value > 0);
  CHECK(g.q_b.holds);
}

TEST_CASE("every negative verdict re-verifies across random matrices") {
  Rng rng(71);
  for (int t = 0; t < 250; ++t) {
    int n = 1 + static_cast<int>(rng.range(0, 3));
    RationalMatrix m = random_matrix(rng, n, -3, 3);
    auto probe = [&](MatrixClass cls, const ClassVerdict& v) {
      if (!v.member) CHECK(reverify_violation(cls, m, v));
    };
    probe(MatrixClass::E0, is_semimonotone(m));
    probe(MatrixClass::E, is_strictly_semimonotone(m));
    probe(MatrixClass::Star, star_property(m));
    probe(MatrixClass::E0s, is_E0s(m));
    probe(MatrixClass::E0sTilde, is_E0s_tilde(m));
    probe(MatrixClass::CompletelyE0s, is_completely_E0s(m));
    probe(MatrixClass::P0, is_p0(m));
    probe(MatrixClass::P, is_p(m));
    probe(MatrixClass::Psd, is_psd(m));
    probe(MatrixClass::Z, is_z_matrix(m));
    probe(MatrixClass::Copositive, is_copositive(m));
    probe(MatrixClass::CopositiveStar, is_copositive_star(m));
    probe(MatrixClass::R0, is_r0(m));
    probe(MatrixClass::Sufficient, is_sufficient(m));
  }
}

TEST_CASE("re-verification rejects doctored witnesses") {
  RationalMatrix id = RationalMatrix::identity(2);
  ClassVerdict fake;
  fake.member = false;
  fake.witness = RationalVector{Rational(1), Rational(1)};
  CHECK(!reverify_violation(MatrixClass::E0, id, fake));
  CHECK(!reverify_violation(MatrixClass::Star, id, fake));
  CHECK(!reverify_violation(MatrixClass::Copositive, id, fake));
  CHECK(!reverify_violation(MatrixClass::R0, id, fake));
  fake.support = IndexSet({0});
  CHECK(!reverify_violation(MatrixClass::P0, id, fake));
  ClassVerdict member;
  member.member = true;
  CHECK(!reverify_violation(MatrixClass::E0, id, member));
}

TEST_CASE("class invariance under permutation similarity and scaling") {
  Rng rng(83);
  RationalMatrix p3 = mk({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  for (int t = 0; t < 60; ++t) {
    RationalMatrix m = random_matrix(rng, 3, -2, 2);
    RationalMatrix pm = p3 * m * p3.transpose();
    CHECK(is_E0s(m).member == is_E0s(pm).member);
    CHECK(is_E0s_tilde(m).member == is_E0s_tilde(pm).member);

    // positive diagonal scaling D A D preserves E0s
    RationalMatrix d = RationalMatrix(3);
    for (int i = 0; i < 3; ++i) d.at(i, i) = Rational(1 + rng.range(0, 2));
    RationalMatrix dad = d * m * d;
    CHECK(is_E0s(m).member == is_E0s(dad).member);
  }
}
