#include "lcplab/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcplab/ppt.hpp"

namespace lcplab {

namespace {

RationalVector embed(const RationalVector& xa, const IndexSet& alpha, int n) {
  RationalVector x(n, Rational(0));
  for (int i = 0; i < alpha.size(); ++i) x[alpha.idx[i]] = xa[i];
  return x;
}

RationalVector restrict_to(const RationalVector& x, const IndexSet& alpha) {
  RationalVector out(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) out[i] = x[alpha.idx[i]];
  return out;
}

IndexSet support_of(const RationalVector& x) {
  IndexSet s;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[i] != 0) s.idx.push_back(i);
  return s;
}

std::string set_str(const IndexSet& s) {
  std::string out = "{";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.idx[i] + 1);  // 1-based in human text
  }
  return out + "}";
}

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Normalized solution cone C_a over variables x_a >= 0.
LpProblem cone_lp(const RationalMatrix& a, const IndexSet& alpha) {
  const int k = alpha.size(), n = a.n();
  LpProblem p = LpProblem::with_vars(k);
  p.add_row(RationalVector(k, Rational(1)), Rel::EQ, Rational(1));
  for (int i = 0; i < n; ++i) {
    RationalVector row(k);
    for (int j = 0; j < k; ++j) row[j] = a.at(i, alpha.idx[j]);
    p.add_row(std::move(row), alpha.contains(i) ? Rel::EQ : Rel::GE,
              Rational(0));
  }
  return p;
}

RationalVector transpose_row_objective(const RationalMatrix& a,
                                       const IndexSet& alpha, int i) {
  RationalVector obj(alpha.size());
  for (int j = 0; j < alpha.size(); ++j) obj[j] = a.at(alpha.idx[j], i);
  return obj;
}

bool in_sol0(const RationalMatrix& a, const RationalVector& x) {
  if (!is_nonneg(x)) return false;
  RationalVector ax = a.apply(x);
  return is_nonneg(ax) && dot(x, ax) == 0;
}

}  // namespace

std::string class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::E0: return "E0";
    case MatrixClass::E: return "E";
    case MatrixClass::Star: return "star";
    case MatrixClass::E0s: return "E0s";
    case MatrixClass::E0sTilde: return "E0s~";
    case MatrixClass::CompletelyE0s: return "completely-E0s";
    case MatrixClass::P0: return "P0";
    case MatrixClass::P: return "P";
    case MatrixClass::Psd: return "PSD";
    case MatrixClass::Z: return "Z";
    case MatrixClass::Copositive: return "copositive";
    case MatrixClass::CopositiveStar: return "C0*";
    case MatrixClass::R0: return "R0";
    case MatrixClass::Sufficient: return "sufficient";
  }
  return "?";
}

std::string minor_class_name(MinorClass c) {
  switch (c) {
    case MinorClass::P: return "P";
    case MinorClass::P0: return "P0";
    case MinorClass::AlmostP0: return "almost-P0";
    case MinorClass::N0: return "N0";
    case MinorClass::N: return "N";
    case MinorClass::None: return "none";
  }
  return "?";
}

ClassVerdict is_semimonotone(const RationalMatrix& a) {
  const int n = a.n();
  if (n == 1) {
    if (a.at(0, 0) >= 0) return ClassVerdict::yes();
    return {false, RationalVector{Rational(1)}, IndexSet({0}), 0,
            "1x1 case: negative diagonal entry"};
  }
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) continue;
    const int k = alpha.size();
    LpProblem p = LpProblem::with_vars(k);
    for (int j = 0; j < k; ++j) p.lower[j] = Rational(1);
    RationalMatrix sub = principal_submatrix(a, alpha);
    for (int i = 0; i < k; ++i) {
      RationalVector row(k);
      for (int j = 0; j < k; ++j) row[j] = sub.at(i, j);
      p.add_row(std::move(row), Rel::LE, Rational(-1));
    }
    if (auto xa = lp_feasible(p)) {
      ClassVerdict v;
      v.witness = embed(*xa, alpha, n);
      v.support = alpha;
      v.detail = "x > 0 on " + set_str(alpha) + " with (Ax)_i < 0 there";
      return v;
    }
  }
  return ClassVerdict::yes();
}

ClassVerdict is_strictly_semimonotone(const RationalMatrix& a) {
  const int n = a.n();
  if (n == 1) {
    if (a.at(0, 0) > 0) return ClassVerdict::yes();
    return {false, RationalVector{Rational(1)}, IndexSet({0}), 0,
            "1x1 case: nonpositive diagonal entry"};
  }
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) continue;
    const int k = alpha.size();
    LpProblem p = LpProblem::with_vars(k);
    for (int j = 0; j < k; ++j) p.lower[j] = Rational(1);
    RationalMatrix sub = principal_submatrix(a, alpha);
    for (int i = 0; i < k; ++i) {
      RationalVector row(k);
      for (int j = 0; j < k; ++j) row[j] = sub.at(i, j);
      p.add_row(std::move(row), Rel::LE, Rational(0));
    }
    if (auto xa = lp_feasible(p)) {
      ClassVerdict v;
      v.witness = embed(*xa, alpha, n);
      v.support = alpha;
      v.detail = "x > 0 on " + set_str(alpha) + " with (Ax)_i <= 0 there";
      return v;
    }
  }
  return ClassVerdict::yes();
}

ClassVerdict star_property(const RationalMatrix& a) {
  const int n = a.n();
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) continue;
    LpProblem cone = cone_lp(a, alpha);
    if (!lp_feasible(cone)) continue;
    for (int i = 0; i < n; ++i) {
      LpProblem p = cone;
      p.maximize = true;
      p.objective = transpose_row_objective(a, alpha, i);
      LpOutcome out = lp_solve(p);
      if (out.status != LpStatus::Optimal)
        throw std::logic_error("solution cone LP must be bounded");
      if (out.value > 0) {
        ClassVerdict v;
        v.witness = embed(out.point, alpha, n);
        v.support = alpha;
        v.index = i;
        v.detail = "x in SOL(0,A) with (A^T x)_" + std::to_string(i + 1) +
                   " = " + to_string(out.value) + " > 0";
        return v;
      }
    }
  }
  return ClassVerdict::yes();
}

ClassVerdict is_E0s(const RationalMatrix& a) {
  ClassVerdict e0 = is_semimonotone(a);
  if (!e0.member) {
    e0.detail = "semimonotonicity fails: " + e0.detail;
    return e0;
  }
  ClassVerdict st = star_property(a);
  if (!st.member) {
    st.detail = "star property fails: " + st.detail;
    return st;
  }
  return ClassVerdict::yes();
}

ClassVerdict is_E0s_tilde(const RationalMatrix& a) {
  ClassVerdict base = is_E0s(a);
  if (!base.member) {
    base.detail = "E0s fails: " + base.detail;
    return base;
  }
  const int n = a.n();
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) continue;
    LpProblem cone = cone_lp(a, alpha);
    if (!lp_feasible(cone)) continue;
    for (int i = 0; i < n; ++i) {
      LpProblem sliced = cone;
      if (!alpha.contains(i)) {
        // restrict to the part of the cone where (Ax)_i = 0
        RationalVector row(alpha.size());
        for (int j = 0; j < alpha.size(); ++j) row[j] = a.at(i, alpha.idx[j]);
        sliced.add_row(std::move(row), Rel::EQ, Rational(0));
        if (!lp_feasible(sliced)) continue;
      }
      for (bool maximize : {true, false}) {
        LpProblem p = sliced;
        p.maximize = maximize;
        p.objective = transpose_row_objective(a, alpha, i);
        LpOutcome out = lp_solve(p);
        if (out.status != LpStatus::Optimal)
          throw std::logic_error("solution cone LP must be bounded");
        if (out.value != 0) {
          ClassVerdict v;
          v.witness = embed(out.point, alpha, n);
          v.support = alpha;
          v.index = i;
          v.detail = "x in SOL(0,A) with (Ax)_" + std::to_string(i + 1) +
                     " = 0 but (A^T x)_" + std::to_string(i + 1) + " = " +
                     to_string(out.value);
          return v;
        }
      }
    }
  }
  return ClassVerdict::yes();
}

ClassVerdict is_completely_E0s(const RationalMatrix& a) {
  for (const auto& beta : subsets_lex(a.n())) {
    if (beta.empty()) continue;
    ClassVerdict inner = is_E0s(principal_submatrix(a, beta));
    if (inner.member) continue;
    ClassVerdict v;
    v.support = beta;
    if (inner.witness) v.witness = embed(*inner.witness, beta, a.n());
    if (inner.index) v.index = beta.idx[*inner.index];
    v.detail =
        "principal submatrix " + set_str(beta) + " fails E0s: " + inner.detail;
    return v;
  }
  return ClassVerdict::yes();
}

MinorClassResult principal_minor_class(const RationalMatrix& a) {
  const int n = a.n();
  MinorClassResult res;
  bool allpos = true, allnonneg = true, allneg = true, allnonpos = true;
  bool proper_nonneg = true;
  Rational det_full(0);
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) continue;
    Rational d = determinant(principal_submatrix(a, alpha));
    bool proper = alpha.size() < n;
    if (d <= 0) allpos = false;
    if (d < 0) {
      allnonneg = false;
      if (proper) proper_nonneg = false;
    }
    if (d >= 0) allneg = false;
    if (d > 0) allnonpos = false;
    if (!proper) det_full = d;
    res.minors.emplace_back(alpha, std::move(d));
  }
  if (allpos)
    res.label = MinorClass::P;
  else if (allnonneg)
    res.label = MinorClass::P0;
  else if (allneg)
    res.label = MinorClass::N;
  else if (allnonpos)
    res.label = MinorClass::N0;
  else if (proper_nonneg && det_full < 0)
    res.label = MinorClass::AlmostP0;
  else
    res.label = MinorClass::None;
  return res;
}

ClassVerdict is_p0(const RationalMatrix& a) {
  for (const auto& [alpha, d] : principal_minor_class(a).minors)
    if (d < 0) {
      ClassVerdict v;
      v.support = alpha;
      v.detail = "det A" + set_str(alpha) + " = " + to_string(d) + " < 0";
      return v;
    }
  return ClassVerdict::yes();
}

ClassVerdict is_p(const RationalMatrix& a) {
  for (const auto& [alpha, d] : principal_minor_class(a).minors)
    if (d <= 0) {
      ClassVerdict v;
      v.support = alpha;
      v.detail = "det A" + set_str(alpha) + " = " + to_string(d) + " <= 0";
      return v;
    }
  return ClassVerdict::yes();
}

ClassVerdict is_psd(const RationalMatrix& a) {
  const int n = a.n();
  std::vector<RationalVector> s(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s[i][j] = (a.at(i, j) + a.at(j, i)) / 2;

  std::vector<int> active;
  for (int i = 0; i < n; ++i) active.push_back(i);
  std::vector<int> pivots;  // elimination order; rows freeze once eliminated
  std::optional<RationalVector> wit;

  while (!wit) {
    int neg = -1, pos = -1;
    for (int i : active) {
      if (s[i][i] < 0) {
        neg = i;
        break;
      }
      if (pos < 0 && s[i][i] > 0) pos = i;
    }
    if (neg >= 0) {
      RationalVector x(n, Rational(0));
      x[neg] = 1;
      wit = x;
      break;
    }
    if (pos < 0) {
      // all remaining diagonal entries are zero
      int oi = -1, oj = -1;
      for (size_t u = 0; u < active.size() && oi < 0; ++u)
        for (size_t v = u + 1; v < active.size(); ++v)
          if (s[active[u]][active[v]] != 0) {
            oi = active[u];
            oj = active[v];
            break;
          }
      if (oi < 0) break;  // zero block: PSD
      RationalVector x(n, Rational(0));
      x[oi] = 1;
      x[oj] = -s[oi][oj];  // x^T S x = -2 s_ij^2 < 0
      wit = x;
      break;
    }
    // Schur complement step on the positive pivot.
    active.erase(std::find(active.begin(), active.end(), pos));
    for (int i : active)
      for (int j : active) s[i][j] -= s[i][pos] * s[pos][j] / s[pos][pos];
    pivots.push_back(pos);
  }

  if (!wit) return ClassVerdict::yes();
  // Lift the witness back through the eliminations (completing the square
  // keeps the quadratic value unchanged).
  RationalVector& x = *wit;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    int p = *it;
    Rational acc(0);
    for (int j = 0; j < n; ++j)
      if (j != p && x[j] != 0) acc += s[p][j] * x[j];
    x[p] = -acc / s[p][p];
  }
  Rational val = dot(x, a.apply(x));
  if (val >= 0)
    throw std::logic_error("PSD witness construction failed to certify");
  ClassVerdict v;
  v.witness = x;
  v.detail = "x^T A x = " + to_string(val) + " < 0";
  return v;
}

ClassVerdict is_z_matrix(const RationalMatrix& a) {
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      if (i == j) continue;
      if (a.at(i, j) > 0) {
        ClassVerdict v;
        v.support = IndexSet({i, j});
        v.index = i;
        v.detail = "off-diagonal entry a(" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + ") = " + to_string(a.at(i, j)) +
                   " > 0";
        return v;
      }
    }
  return ClassVerdict::yes();
}

ClassVerdict is_copositive(const RationalMatrix& a) {
  const int n = a.n();
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) continue;
    const int k = alpha.size();
    LpProblem p = LpProblem::with_vars(k + 1);  // x_a, lambda
    p.lower[k] = std::nullopt;
    p.objective[k] = 1;  // minimize lambda
    for (int r = 0; r < k; ++r) {
      RationalVector row(k + 1, Rational(0));
      for (int j = 0; j < k; ++j)
        row[j] = a.at(alpha.idx[r], alpha.idx[j]) + a.at(alpha.idx[j], alpha.idx[r]);
      row[k] = -1;
      p.add_row(std::move(row), Rel::EQ, Rational(0));
    }
    RationalVector ones(k + 1, Rational(1));
    ones[k] = 0;
    p.add_row(std::move(ones), Rel::EQ, Rational(1));
    LpOutcome out = lp_solve(p);
    if (out.status == LpStatus::Infeasible) continue;
    if (out.status != LpStatus::Optimal)
      throw std::logic_error("copositivity face LP must be bounded");
    if (out.value < 0) {
      RationalVector xa(out.point.begin(), out.point.begin() + k);
      RationalVector x = embed(xa, alpha, n);
      Rational val = dot(x, a.apply(x));
      if (val * 2 != out.value)
        throw std::logic_error("copositivity witness value mismatch");
      ClassVerdict v;
      v.witness = x;
      v.support = alpha;
      v.detail = "x >= 0 with x^T A x = " + to_string(val) + " < 0";
      return v;
    }
  }
  return ClassVerdict::yes();
}

ClassVerdict is_copositive_star(const RationalMatrix& a) {
  ClassVerdict cop = is_copositive(a);
  if (!cop.member) {
    cop.detail = "copositivity fails: " + cop.detail;
    return cop;
  }
  ClassVerdict st = star_property(a);
  if (!st.member) {
    st.detail = "star property fails: " + st.detail;
    return st;
  }
  return ClassVerdict::yes();
}

ClassVerdict is_r0(const RationalMatrix& a) {
  for (const auto& alpha : subsets_lex(a.n())) {
    if (alpha.empty()) continue;
    if (auto xa = lp_feasible(cone_lp(a, alpha))) {
      ClassVerdict v;
      v.witness = embed(*xa, alpha, a.n());
      v.support = alpha;
      v.detail = "nonzero x in SOL(0,A) supported on " + set_str(alpha);
      return v;
    }
  }
  return ClassVerdict::yes();
}

std::vector<std::pair<IndexSet, RationalVector>> sol0_representatives(
    const RationalMatrix& a) {
  std::vector<std::pair<IndexSet, RationalVector>> out;
  for (const auto& alpha : subsets_lex(a.n())) {
    if (alpha.empty()) continue;
    if (auto xa = lp_feasible(cone_lp(a, alpha)))
      out.emplace_back(alpha, embed(*xa, alpha, a.n()));
  }
  return out;
}

std::pair<bool, std::optional<RationalVector>> column_sufficient_2x2(
    const RationalMatrix& m) {
  if (m.n() != 2) throw std::invalid_argument("column_sufficient_2x2 wants 2x2");
  const Rational a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0),
                 d = m.at(1, 1);
  auto no = [](Rational x1, Rational x2) {
    return std::make_pair(false, std::optional<RationalVector>(
                                     RationalVector{std::move(x1),
                                                    std::move(x2)}));
  };
  Rational det = a * d - b * c;
  // Column sufficiency implies P0; each failure has a closed-form violator.
  if (a < 0) return no(Rational(1), Rational(0));
  if (d < 0) return no(Rational(0), Rational(1));
  if (det < 0) {
    if (a > 0) return no(b, -a);        // products (0, a*det)
    if (d > 0) return no(-d, c);        // products (d*det, 0)
    return no(Rational(1), Rational(-sgn(b)));  // a=d=0, bc>0
  }
  if (a > 0 && d > 0) return {true, std::nullopt};  // P0, positive diagonal
  if (a == 0) {
    if (b == 0) {
      if (c == 0) return {true, std::nullopt};
      return no(-(d + 1) / c, Rational(1));  // products (0, -1)
    }
    if (c != 0 || d > 0) return {true, std::nullopt};
    return no(Rational(-sgn(b)), Rational(1));  // products (-|b|, 0)
  }
  // d == 0, a > 0
  if (c == 0) {
    if (b == 0) return {true, std::nullopt};
    return no(Rational(1), -(a + 1) / b);  // products (-1, 0)
  }
  return {true, std::nullopt};
}

namespace {

std::pair<bool, std::optional<RationalVector>> column_sufficient_small(
    const RationalMatrix& m) {
  if (m.n() == 1) {
    if (m.at(0, 0) >= 0) return {true, std::nullopt};
    return {false, RationalVector{Rational(1)}};
  }
  return column_sufficient_2x2(m);
}

bool violates_column_sufficiency(const RationalMatrix& a,
                                 const RationalVector& x) {
  RationalVector ax = a.apply(x);
  bool strict = false;
  for (size_t i = 0; i < x.size(); ++i) {
    Rational prod = x[i] * ax[i];
    if (prod > 0) return false;
    if (prod < 0) strict = true;
  }
  return strict;
}

}  // namespace

ClassVerdict is_sufficient(const RationalMatrix& a) {
  const int n = a.n();
  for (const auto& alpha : enumerate_legitimate(a)) {
    auto m = ppt_transform(a, alpha);
    if (!m) throw std::logic_error("legitimate pivot failed to transform");
    for (const auto& beta : subsets_lex(n)) {
      if (beta.size() < 1 || beta.size() > 2) continue;
      RationalMatrix sub = principal_submatrix(*m, beta);
      const int sides = sub.n() == 1 ? 1 : 2;  // 1x1 is side-symmetric
      for (int side = 0; side < sides; ++side) {
        auto [ok, wit] = column_sufficient_small(
            side == 0 ? sub : sub.transpose());
        if (ok) continue;
        // Zero-extension keeps the violation; the pivot exchange
        // x_a = (M y)_a, x_abar = y_abar preserves the products
        // x_i (A x)_i = y_i (M y)_i, so the violation maps back to A.
        RationalVector y = embed(*wit, beta, n);
        RationalVector x(n, Rational(0));
        ClassVerdict v;
        if (side == 0) {
          RationalVector my = m->apply(y);
          for (int i = 0; i < n; ++i)
            x[i] = alpha.contains(i) ? my[i] : y[i];
          if (!violates_column_sufficiency(a, x))
            throw std::logic_error("column sufficiency witness map failed");
          v.detail = "column side";
        } else {
          RationalVector mty = m->apply_transpose(y);
          for (int i = 0; i < n; ++i)
            x[i] = alpha.contains(i) ? -mty[i] : y[i];
          if (!violates_column_sufficiency(a.transpose(), x))
            throw std::logic_error("row sufficiency witness map failed");
          v.detail = "row side";
        }
        v.witness = x;
        v.detail += " (pivot " + set_str(alpha) + ", block " + set_str(beta) +
                    " of the transform)";
        return v;
      }
    }
  }
  return ClassVerdict::yes();
}

L2Result l2_certificate(const RationalMatrix& a, const RationalVector& x) {
  const int n = a.n();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("l2_certificate: dimension mismatch");
  if (!in_sol0(a, x)) return {L2Status::NotInSol0, std::nullopt,
                              "x is not in SOL(0,A)"};
  RationalVector ax = a.apply(x);
  RationalVector atx = a.apply_transpose(x);
  L2Certificate cert;
  cert.d1.assign(n, Rational(0));
  cert.d2.assign(n, Rational(1));
  for (int i = 0; i < n; ++i)
    if (ax[i] != 0) cert.d1[i] = -atx[i] / ax[i];
  for (int i = 0; i < n; ++i) {
    if (cert.d1[i] < 0)
      return {L2Status::VerifyFailed, std::nullopt,
              "D1 has a negative entry at " + std::to_string(i + 1)};
    if (cert.d1[i] * ax[i] + atx[i] != 0)
      return {L2Status::VerifyFailed, std::nullopt,
              "(D1 A + A^T D2) x is nonzero at " + std::to_string(i + 1)};
  }
  return {L2Status::Ok, cert, ""};
}

std::vector<std::pair<MatrixClass, const ClassVerdict*>> report_entries(
    const ClassReport& r) {
  return {
      {MatrixClass::E0, &r.e0},
      {MatrixClass::E, &r.e},
      {MatrixClass::Star, &r.star},
      {MatrixClass::E0s, &r.e0s},
      {MatrixClass::E0sTilde, &r.e0s_tilde},
      {MatrixClass::CompletelyE0s, &r.completely_e0s},
      {MatrixClass::P0, &r.p0},
      {MatrixClass::P, &r.p},
      {MatrixClass::Psd, &r.psd},
      {MatrixClass::Z, &r.z},
      {MatrixClass::Copositive, &r.copositive},
      {MatrixClass::CopositiveStar, &r.copositive_star},
      {MatrixClass::R0, &r.r0},
      {MatrixClass::Sufficient, &r.sufficient},
  };
}

ClassReport classify_full(const RationalMatrix& a) {
  ClassReport r;
  r.n = a.n();
  r.e0 = is_semimonotone(a);
  r.e = is_strictly_semimonotone(a);
  r.star = star_property(a);
  r.e0s = is_E0s(a);
  r.e0s_tilde = is_E0s_tilde(a);
  r.completely_e0s = is_completely_E0s(a);
  r.minor_class = principal_minor_class(a);
  r.p0 = is_p0(a);
  r.p = is_p(a);
  r.psd = is_psd(a);
  r.z = is_z_matrix(a);
  r.copositive = is_copositive(a);
  r.copositive_star = is_copositive_star(a);
  r.r0 = is_r0(a);
  r.sufficient = is_sufficient(a);
  r.game = game_value(a);

  if (r.e0.member && r.r0.member) {
    r.q.holds = true;
    r.q.premises.push_back("E0 and R0 together give Q");
  }
  if (r.q.holds && r.r0.member)
    r.q_b.premises.push_back("Q and R0 together give Q_b");
  if (r.e0s_tilde.member && r.game.value > 0)
    r.q_b.premises.push_back(
        "E0s~ with v(A) = " + to_string(r.game.value) +
        " > 0 gives compact nonempty solution sets, hence Q_b");
  r.q_b.holds = !r.q_b.premises.empty();

  if (r.e0s_tilde.member) {
    bool certified = true;
    for (const auto& [alpha, x] : sol0_representatives(a))
      if (l2_certificate(a, x).status != L2Status::Ok) {
        certified = false;
        break;
      }
    if (certified) {
      r.q0_via_l.holds = true;
      r.q0_via_l.premises.push_back(
          "E0s~ gives the scaling pair D1 = diag(-(A^T x)_i/(Ax)_i), D2 = I "
          "on SOL(0,A), so A is in E0 cap L2 = L and hence Q0 "
          "(partial: only this route is checked)");
    }
  }

  auto require = [](bool cond, const char* what) {
    if (!cond)
      throw std::logic_error(std::string("class lattice violated: ") + what);
  };
  require(!r.e0s_tilde.member || r.e0s.member, "E0s~ => E0s");
  require(!r.e0s.member || (r.e0.member && r.star.member),
          "E0s => E0 and star");
  require(r.e0s.member || !(r.e0.member && r.star.member),
          "E0 and star => E0s");
  require(!r.e.member || r.e0.member, "E => E0");
  require(!r.completely_e0s.member || r.e0s.member, "completely-E0s => E0s");
  require(!r.copositive_star.member ||
              (r.copositive.member && r.star.member),
          "C0* => copositive and star");
  require(!r.copositive.member || r.e0.member, "copositive => E0");
  require(!r.copositive_star.member || r.e0s.member, "C0* => E0s");
  require(!r.psd.member || r.copositive.member, "PSD => copositive");
  require(!r.psd.member || r.sufficient.member, "PSD => sufficient");
  require(!r.p.member || r.p0.member, "P => P0");
  require(!r.p.member || (r.sufficient.member && r.e.member),
          "P => sufficient and E");
  require(!r.sufficient.member || r.p0.member, "sufficient => P0");
  require((r.minor_class.label == MinorClass::P) == r.p.member,
          "minor label P agrees with is_p");
  return r;
}

bool reverify_violation(MatrixClass cls, const RationalMatrix& a,
                        const ClassVerdict& v) {
  if (v.member) return false;
  auto witness_support_products = [&](const RationalMatrix& m,
                                      bool strict) -> bool {
    // x >= 0, x != 0, and (Mx)_i < 0 (<= 0 when !strict) on supp(x).
    if (!v.witness) return false;
    const RationalVector& x = *v.witness;
    if (!is_nonneg(x) || is_zero(x)) return false;
    RationalVector mx = m.apply(x);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      if (strict ? mx[i] >= 0 : mx[i] > 0) return false;
    }
    return true;
  };
  auto star_violation = [&](const RationalMatrix& m) -> bool {
    if (!v.witness) return false;
    const RationalVector& x = *v.witness;
    if (!in_sol0(m, x)) return false;
    for (const Rational& t : m.apply_transpose(x))
      if (t > 0) return true;
    return false;
  };
  switch (cls) {
    case MatrixClass::E0:
      return witness_support_products(a, /*strict=*/true);
    case MatrixClass::E:
      return witness_support_products(a, /*strict=*/false);
    case MatrixClass::Star:
      return star_violation(a);
    case MatrixClass::E0s:
      return witness_support_products(a, true) || star_violation(a);
    case MatrixClass::E0sTilde: {
      if (witness_support_products(a, true) || star_violation(a)) return true;
      if (!v.witness || !v.index) return false;
      const RationalVector& x = *v.witness;
      if (!in_sol0(a, x)) return false;
      int i = *v.index;
      return a.apply(x)[i] == 0 && a.apply_transpose(x)[i] != 0;
    }
    case MatrixClass::CompletelyE0s: {
      if (!v.witness || !v.support) return false;
      RationalMatrix sub = principal_submatrix(a, *v.support);
      ClassVerdict inner;
      inner.member = false;
      inner.witness = restrict_to(*v.witness, *v.support);
      return reverify_violation(MatrixClass::E0s, sub, inner);
    }
    case MatrixClass::P0: {
      if (!v.support) return false;
      return determinant(principal_submatrix(a, *v.support)) < 0;
    }
    case MatrixClass::P: {
      if (!v.support) return false;
      return determinant(principal_submatrix(a, *v.support)) <= 0;
    }
    case MatrixClass::Psd:
      return v.witness && dot(*v.witness, a.apply(*v.witness)) < 0;
    case MatrixClass::Z: {
      if (!v.support || !v.index || v.support->size() != 2) return false;
      int i = *v.index;
      int j = v.support->idx[0] == i ? v.support->idx[1] : v.support->idx[0];
      return i != j && a.at(i, j) > 0;
    }
    case MatrixClass::Copositive:
      return v.witness && is_nonneg(*v.witness) &&
             dot(*v.witness, a.apply(*v.witness)) < 0;
    case MatrixClass::CopositiveStar:
      return reverify_violation(MatrixClass::Copositive, a, v) ||
             star_violation(a);
    case MatrixClass::R0:
      return v.witness && !is_zero(*v.witness) && in_sol0(a, *v.witness);
    case MatrixClass::Sufficient: {
      if (!v.witness) return false;
      return violates_column_sufficiency(a, *v.witness) ||
             violates_column_sufficiency(a.transpose(), *v.witness);
    }
  }
  return false;
}

}  // namespace lcplab
