#include "lcplab/lcp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcplab {

LcpInstance::LcpInstance(RationalMatrix a_, RationalVector q_)
    : a(std::move(a_)), q(std::move(q_)) {
  if (static_cast<int>(q.size()) != a.n())
    throw std::invalid_argument("LcpInstance: q dimension mismatch");
}

namespace {

Rational min_entry(const RationalVector& v) {
  Rational m = v.at(0);
  for (const Rational& x : v)
    if (x < m) m = x;
  return m;
}

}  // namespace

LcpSolution LcpSolution::from_z(const LcpInstance& inst, RationalVector z) {
  LcpSolution s;
  s.w = inst.q + inst.a.apply(z);
  s.z = std::move(z);
  std::vector<int> supp;
  for (int i = 0; i < inst.n(); ++i)
    if (s.z[i] > 0) supp.push_back(i);
  s.support = IndexSet(std::move(supp));
  s.min_z = min_entry(s.z);
  s.min_w = min_entry(s.w);
  s.complementarity = dot(s.z, s.w);
  return s;
}

CheckResult check_solution(const LcpInstance& inst, const RationalVector& z,
                           const Rational& tol) {
  if (static_cast<int>(z.size()) != inst.n())
    throw std::invalid_argument("check_solution: dimension mismatch");
  CheckResult r;
  RationalVector w = inst.q + inst.a.apply(z);
  r.min_z = min_entry(z);
  r.min_w = min_entry(w);
  r.complementarity = dot(z, w);
  r.valid = r.min_z >= -tol && r.min_w >= -tol &&
            r.complementarity <= tol && r.complementarity >= -tol;
  return r;
}

CheckResultF check_solution(const LcpInstance& inst,
                            const std::vector<double>& z, double tol) {
  const int n = inst.n();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("check_solution: dimension mismatch");
  CheckResultF r;
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    double acc = to_double(inst.q[i]);
    for (int j = 0; j < n; ++j) acc += to_double(inst.a.at(i, j)) * z[j];
    w[i] = acc;
  }
  r.min_z = *std::min_element(z.begin(), z.end());
  r.min_w = *std::min_element(w.begin(), w.end());
  r.complementarity = 0;
  for (int i = 0; i < n; ++i) r.complementarity += z[i] * w[i];
  r.valid = r.min_z >= -tol && r.min_w >= -tol &&
            r.complementarity <= tol && r.complementarity >= -tol;
  return r;
}

EnumerateResult solve_enumerate(const LcpInstance& inst) {
  const int n = inst.n();
  if (n > 20)
    throw std::invalid_argument("solve_enumerate: n > 20 support enumeration");
  EnumerateResult res;
  auto push_unique = [&](RationalVector z) {
    for (const auto& s : res.solutions)
      if (s.z == z) return;
    res.solutions.push_back(LcpSolution::from_z(inst, std::move(z)));
  };
  for (const auto& alpha : subsets_lex(n)) {
    if (alpha.empty()) {
      if (is_nonneg(inst.q)) push_unique(RationalVector(n, Rational(0)));
      continue;
    }
    const int k = alpha.size();
    RationalVector z(n, Rational(0));
    RationalMatrix sub = principal_submatrix(inst.a, alpha);
    RationalVector rhs(k);
    for (int i = 0; i < k; ++i) rhs[i] = -inst.q[alpha.idx[i]];
    if (auto za = linear_solve(sub, rhs)) {
      if (!is_nonneg(*za)) continue;
      for (int i = 0; i < k; ++i) z[alpha.idx[i]] = (*za)[i];
      if (!is_nonneg(inst.q + inst.a.apply(z))) continue;
      push_unique(std::move(z));
    } else {
      // Singular block. The support can still carry solutions; probe the
      // closed system exactly.
      LpProblem p = LpProblem::with_vars(k);
      for (int i = 0; i < n; ++i) {
        RationalVector row(k);
        for (int j = 0; j < k; ++j) row[j] = inst.a.at(i, alpha.idx[j]);
        p.add_row(std::move(row), alpha.contains(i) ? Rel::EQ : Rel::GE,
                  -inst.q[i]);
      }
      if (auto za = lp_feasible(p)) {
        for (int i = 0; i < k; ++i) z[alpha.idx[i]] = (*za)[i];
        push_unique(std::move(z));
      }
    }
  }
  res.solvable = !res.solutions.empty();
  return res;
}

namespace {

class LemkeTableau {
 public:
  LemkeTableau(const LcpInstance& inst, const RationalVector& d)
      : n_(inst.n()), rows_(n_, RationalVector(2 * n_ + 2, Rational(0))),
        basis_(n_) {
    for (int i = 0; i < n_; ++i) {
      rows_[i][i] = 1;
      for (int j = 0; j < n_; ++j) rows_[i][zcol(j)] = -inst.a.at(i, j);
      rows_[i][auxcol()] = -d[i];
      rows_[i][rhscol()] = inst.q[i];
      basis_[i] = i;
    }
  }

  int n() const { return n_; }
  int zcol(int j) const { return n_ + j; }
  int auxcol() const { return 2 * n_; }
  int rhscol() const { return 2 * n_ + 1; }
  const Rational& at(int i, int j) const { return rows_[i][j]; }
  int basic(int i) const { return basis_[i]; }

  std::vector<int> signature() const {
    std::vector<int> sig = basis_;
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  // Lexicographic order of the scaled augmented rows (rhs, w-block)/scale;
  // the w-block is the running basis inverse, so ties always break.
  bool lex_less(int i, int j, const Rational& si, const Rational& sj) const {
    Rational a = rows_[i][rhscol()] / si, b = rows_[j][rhscol()] / sj;
    if (a != b) return a < b;
    for (int c = 0; c < n_; ++c) {
      a = rows_[i][c] / si;
      b = rows_[j][c] / sj;
      if (a != b) return a < b;
    }
    throw std::logic_error("lemke lexicographic tie");
  }

  void pivot(int r, int c) {
    Rational piv = rows_[r][c];
    for (Rational& v : rows_[r]) v /= piv;
    for (int i = 0; i < n_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (int j = 0; j < 2 * n_ + 2; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

 private:
  int n_;
  std::vector<RationalVector> rows_;
  std::vector<int> basis_;
};

}  // namespace

LemkeOutcome solve_lemke(const LcpInstance& inst, RationalVector covering) {
  const int n = inst.n();
  if (covering.empty()) covering.assign(n, Rational(1));
  if (static_cast<int>(covering.size()) != n)
    throw std::invalid_argument("covering vector dimension mismatch");
  for (const Rational& d : covering)
    if (d <= 0) throw std::invalid_argument("covering vector must be positive");

  LemkeTableau t(inst, covering);
  LemkeOutcome out;
  out.basis_history.push_back(t.signature());

  auto extract_solution = [&]() -> LcpSolution {
    RationalVector z(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      int b = t.basic(i);
      if (b >= t.zcol(0) && b < t.auxcol()) z[b - t.zcol(0)] = t.at(i, t.rhscol());
    }
    LcpSolution s = LcpSolution::from_z(inst, std::move(z));
    if (s.min_z < 0 || s.min_w < 0 || s.complementarity != 0)
      throw std::logic_error("lemke terminal basis is not complementary");
    return s;
  };

  if (is_nonneg(inst.q)) {  // w = q, z = 0, no pivot needed
    out.solution = extract_solution();
    return out;
  }

  // Auxiliary variable enters; the lex-least row of (q, I)/d leaves, which
  // makes every augmented row lex-positive afterwards.
  int r = 0;
  for (int i = 1; i < n; ++i)
    if (t.lex_less(i, r, covering[i], covering[r])) r = i;
  int leaving = t.basic(r);
  t.pivot(r, t.auxcol());
  ++out.pivots;
  out.basis_history.push_back(t.signature());

  const int pivot_cap = 200000;
  while (true) {
    // complement of the variable that just left enters next
    int entering = leaving < n ? t.zcol(leaving) : leaving - t.zcol(0);
    r = -1;
    for (int i = 0; i < n; ++i) {
      if (t.at(i, entering) <= 0) continue;
      if (r < 0 || t.lex_less(i, r, t.at(i, entering), t.at(r, entering)))
        r = i;
    }
    if (r < 0) {
      // unblocked entering column: almost-complementary ray
      LemkeRay ray;
      ray.z.assign(n, Rational(0));
      ray.z_dir.assign(n, Rational(0));
      for (int i = 0; i < n; ++i) {
        int b = t.basic(i);
        Rational val = t.at(i, t.rhscol());
        Rational dir = -t.at(i, entering);
        if (b >= t.zcol(0) && b < t.auxcol()) {
          ray.z[b - t.zcol(0)] = val;
          ray.z_dir[b - t.zcol(0)] = dir;
        } else if (b == t.auxcol()) {
          ray.z0 = val;
          ray.z0_dir = dir;
        }
      }
      if (entering >= t.zcol(0) && entering < t.auxcol())
        ray.z_dir[entering - t.zcol(0)] = 1;
      else if (entering == t.auxcol())
        ray.z0_dir = 1;
      out.ray = ray;
      return out;
    }
    leaving = t.basic(r);
    t.pivot(r, entering);
    ++out.pivots;
    out.basis_history.push_back(t.signature());
    if (out.pivots > pivot_cap)
      throw std::logic_error("lemke pivot cap exceeded");
    if (leaving == t.auxcol()) {
      out.solution = extract_solution();
      return out;
    }
  }
}

std::optional<RationalVector> strict_feasible_point(const LcpInstance& inst) {
  const int n = inst.n();
  LpProblem p = LpProblem::with_vars(n + 1);  // z and the margin t
  p.lower[n] = std::nullopt;
  p.maximize = true;
  p.objective[n] = 1;
  for (int i = 0; i < n; ++i) {
    RationalVector row(n + 1, Rational(0));
    row[i] = 1;
    row[n] = -1;
    p.add_row(std::move(row), Rel::GE, Rational(0));
  }
  for (int i = 0; i < n; ++i) {
    RationalVector row(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) row[j] = inst.a.at(i, j);
    row[n] = -1;
    p.add_row(std::move(row), Rel::GE, -inst.q[i]);
  }
  RationalVector cap(n + 1, Rational(0));
  cap[n] = 1;
  p.add_row(std::move(cap), Rel::LE, Rational(1));
  LpOutcome out = lp_solve(p);
  if (out.status != LpStatus::Optimal)
    throw std::logic_error("strict feasibility LP must attain its optimum");
  if (out.value <= 0) return std::nullopt;
  RationalVector z(out.point.begin(), out.point.begin() + n);
  for (const Rational& v : z)
    if (v <= 0) throw std::logic_error("strict feasibility margin violated");
  for (const Rational& v : inst.q + inst.a.apply(z))
    if (v <= 0) throw std::logic_error("strict feasibility margin violated");
  return z;
}

}  // namespace lcplab
