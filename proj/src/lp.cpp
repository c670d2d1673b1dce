#include "lcplab/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcplab {

LpProblem LpProblem::with_vars(int m) {
  LpProblem p;
  p.num_vars = m;
  p.objective.assign(m, Rational(0));
  p.lower.assign(m, Rational(0));
  return p;
}

void LpProblem::add_row(RationalVector coeffs, Rel rel, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("constraint width mismatch");
  rows.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Standard-form program min c.y, T y = b, y >= 0 plus the bookkeeping to map
// vertices and rays back to the caller's variables.
struct Standardized {
  int ncols = 0;                       // structural columns (incl. slacks)
  std::vector<RationalVector> rows;    // equality rows over columns
  RationalVector rhs;
  RationalVector cost;                 // min sense
  // Original var j -> column(s): plus_col always set; minus_col >= 0 only for
  // free variables (x_j = shift_j + y_plus - y_minus).
  std::vector<int> plus_col, minus_col;
  RationalVector shift;
};

Standardized standardize(const LpProblem& p) {
  Standardized s;
  s.plus_col.assign(p.num_vars, -1);
  s.minus_col.assign(p.num_vars, -1);
  s.shift.assign(p.num_vars, Rational(0));
  int col = 0;
  for (int j = 0; j < p.num_vars; ++j) {
    s.plus_col[j] = col++;
    if (p.lower[j]) {
      s.shift[j] = *p.lower[j];
    } else {
      s.minus_col[j] = col++;
    }
  }
  int nslack = 0;
  for (const auto& r : p.rows)
    if (r.rel != Rel::EQ) ++nslack;
  s.ncols = col + nslack;

  s.cost.assign(s.ncols, Rational(0));
  for (int j = 0; j < p.num_vars; ++j) {
    Rational c = p.objective[j];
    if (p.maximize) c = -c;
    s.cost[s.plus_col[j]] = c;
    if (s.minus_col[j] >= 0) s.cost[s.minus_col[j]] = -c;
  }

  int slack = col;
  for (const auto& r : p.rows) {
    RationalVector row(s.ncols, Rational(0));
    Rational b = r.rhs;
    for (int j = 0; j < p.num_vars; ++j) {
      const Rational& a = r.coeffs[j];
      if (a == 0) continue;
      row[s.plus_col[j]] += a;
      if (s.minus_col[j] >= 0) row[s.minus_col[j]] -= a;
      b -= a * s.shift[j];
    }
    if (r.rel == Rel::LE) row[slack++] = 1;
    if (r.rel == Rel::GE) row[slack++] = -1;
    if (b < 0) {
      for (auto& v : row) v = -v;
      b = -b;
    }
    s.rows.push_back(std::move(row));
    s.rhs.push_back(std::move(b));
  }
  return s;
}

struct Tableau {
  int ncols = 0;                     // columns eligible for pivoting
  std::vector<RationalVector> t;     // m x width
  RationalVector rhs;                // m
  std::vector<int> basis;            // m, column index basic in each row

  void pivot(int r, int e) {
    Rational piv = t[r][e];
    int width = static_cast<int>(t[r].size());
    for (int j = 0; j < width; ++j) t[r][j] /= piv;
    rhs[r] /= piv;
    for (size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rational f = t[i][e];
      if (f == 0) continue;
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = e;
  }
};

enum class SimplexEnd { Optimal, Unbounded };

// Minimizes cost over the current basis with Bland's rule. On unboundedness
// reports the entering column.
SimplexEnd run_simplex(Tableau& tb, const RationalVector& cost,
                       int* unbounded_col) {
  const int m = static_cast<int>(tb.t.size());
  while (true) {
    // Reduced costs, rebuilt from scratch: z = c - c_B . T.
    RationalVector z(cost.begin(), cost.begin() + tb.ncols);
    for (int i = 0; i < m; ++i) {
      const Rational& cb = cost[tb.basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j < tb.ncols; ++j) z[j] -= cb * tb.t[i][j];
    }
    int enter = -1;
    for (int j = 0; j < tb.ncols; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return SimplexEnd::Optimal;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (tb.t[i][enter] <= 0) continue;
      Rational ratio = tb.rhs[i] / tb.t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && tb.basis[i] < tb.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      if (unbounded_col) *unbounded_col = enter;
      return SimplexEnd::Unbounded;
    }
    tb.pivot(leave, enter);
  }
}

RationalVector extract_point(const Standardized& s, const Tableau& tb,
                             int num_vars) {
  RationalVector y(tb.t.empty() ? s.ncols : static_cast<int>(tb.t[0].size()),
                   Rational(0));
  for (size_t i = 0; i < tb.basis.size(); ++i) y[tb.basis[i]] = tb.rhs[i];
  RationalVector x(num_vars, Rational(0));
  for (int j = 0; j < num_vars; ++j) {
    x[j] = s.shift[j] + y[s.plus_col[j]];
    if (s.minus_col[j] >= 0) x[j] -= y[s.minus_col[j]];
  }
  return x;
}

}  // namespace

LpOutcome lp_solve(const LpProblem& p) {
  for (const auto& r : p.rows)
    if (static_cast<int>(r.coeffs.size()) != p.num_vars)
      throw std::invalid_argument("constraint width mismatch");
  if (static_cast<int>(p.objective.size()) != p.num_vars ||
      static_cast<int>(p.lower.size()) != p.num_vars)
    throw std::invalid_argument("objective/bounds width mismatch");

  Standardized s = standardize(p);
  const int m = static_cast<int>(s.rows.size());

  // Phase 1: one artificial column per row.
  Tableau tb;
  tb.ncols = s.ncols + m;
  tb.rhs = s.rhs;
  tb.t.assign(m, RationalVector(tb.ncols, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < s.ncols; ++j) tb.t[i][j] = s.rows[i][j];
    tb.t[i][s.ncols + i] = 1;
    tb.basis.push_back(s.ncols + i);
  }
  RationalVector phase1_cost(tb.ncols, Rational(0));
  for (int i = 0; i < m; ++i) phase1_cost[s.ncols + i] = 1;

  if (run_simplex(tb, phase1_cost, nullptr) != SimplexEnd::Optimal)
    throw std::logic_error("phase-1 objective cannot be unbounded");
  Rational infeas(0);
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] >= s.ncols) infeas += tb.rhs[i];
  LpOutcome out;
  if (infeas != 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (int i = static_cast<int>(tb.basis.size()) - 1; i >= 0; --i) {
    if (tb.basis[i] < s.ncols) continue;
    int piv = -1;
    for (int j = 0; j < s.ncols; ++j)
      if (tb.t[i][j] != 0) {
        piv = j;
        break;
      }
    if (piv >= 0) {
      tb.pivot(i, piv);
    } else {
      tb.t.erase(tb.t.begin() + i);
      tb.rhs.erase(tb.rhs.begin() + i);
      tb.basis.erase(tb.basis.begin() + i);
    }
  }

  // Phase 2 pivots only on structural columns.
  tb.ncols = s.ncols;
  RationalVector cost = s.cost;
  cost.resize(s.ncols + m, Rational(0));
  int unbounded_col = -1;
  SimplexEnd end = run_simplex(tb, cost, &unbounded_col);

  out.point = extract_point(s, tb, p.num_vars);
  if (end == SimplexEnd::Unbounded) {
    out.status = LpStatus::Unbounded;
    RationalVector yray(tb.t.empty() ? s.ncols
                                     : static_cast<int>(tb.t[0].size()),
                        Rational(0));
    yray[unbounded_col] = 1;
    for (size_t i = 0; i < tb.basis.size(); ++i)
      yray[tb.basis[i]] = -tb.t[i][unbounded_col];
    out.ray.assign(p.num_vars, Rational(0));
    for (int j = 0; j < p.num_vars; ++j) {
      out.ray[j] = yray[s.plus_col[j]];
      if (s.minus_col[j] >= 0) out.ray[j] -= yray[s.minus_col[j]];
    }
    return out;
  }

  out.status = LpStatus::Optimal;
  out.value = dot(p.objective, out.point);
  return out;
}

std::optional<RationalVector> lp_feasible(const LpProblem& p) {
  LpProblem probe = p;
  probe.maximize = false;
  probe.objective.assign(p.num_vars, Rational(0));
  LpOutcome out = lp_solve(probe);
  if (out.status != LpStatus::Optimal) return std::nullopt;
  return out.point;
}

GameValue game_value(const RationalMatrix& a) {
  const int n = a.n();
  if (n == 0) throw std::invalid_argument("empty game");
  Rational mn = a.at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) < mn) mn = a.at(i, j);
  Rational c = Rational(1) - mn;
  if (c < 1) c = 1;
  RationalMatrix ap(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ap.at(i, j) = a.at(i, j) + c;

  // Row player: min sum(xi) s.t. A' xi >= 1, xi >= 0; value' = 1/sum.
  LpProblem rowlp = LpProblem::with_vars(n);
  for (int j = 0; j < n; ++j) rowlp.objective[j] = 1;
  for (int i = 0; i < n; ++i) {
    RationalVector row(n);
    for (int j = 0; j < n; ++j) row[j] = ap.at(i, j);
    rowlp.add_row(std::move(row), Rel::GE, Rational(1));
  }
  LpOutcome rout = lp_solve(rowlp);
  if (rout.status != LpStatus::Optimal)
    throw std::logic_error("shifted game row LP must have an optimum");

  // Column player: max sum(eta) s.t. A'^T eta <= 1, eta >= 0.
  LpProblem collp = LpProblem::with_vars(n);
  collp.maximize = true;
  for (int i = 0; i < n; ++i) collp.objective[i] = 1;
  for (int j = 0; j < n; ++j) {
    RationalVector row(n);
    for (int i = 0; i < n; ++i) row[i] = ap.at(i, j);
    collp.add_row(std::move(row), Rel::LE, Rational(1));
  }
  LpOutcome cout_ = lp_solve(collp);
  if (cout_.status != LpStatus::Optimal)
    throw std::logic_error("shifted game column LP must have an optimum");

  if (rout.value != cout_.value)
    throw std::logic_error("game LP duality gap must be exactly zero");

  Rational vshift = Rational(1) / rout.value;
  GameValue gv;
  gv.value = vshift - c;
  gv.row_strategy = vshift * rout.point;
  gv.col_strategy = vshift * cout_.point;

  // Both optimality systems, checked exactly.
  RationalVector ax = a.apply(gv.row_strategy);
  RationalVector aty = a.apply_transpose(gv.col_strategy);
  for (int i = 0; i < n; ++i)
    if (ax[i] < gv.value || aty[i] > gv.value)
      throw std::logic_error("game strategies failed exact optimality check");
  return gv;
}

}  // namespace lcplab
