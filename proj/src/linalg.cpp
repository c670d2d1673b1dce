#include "lcplab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcplab {

IndexSet::IndexSet(std::vector<int> v) : idx(std::move(v)) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
}

bool IndexSet::contains(int i) const {
  return std::binary_search(idx.begin(), idx.end(), i);
}

IndexSet IndexSet::complement(int n) const {
  IndexSet out;
  for (int i = 0; i < n; ++i)
    if (!contains(i)) out.idx.push_back(i);
  return out;
}

std::vector<IndexSet> subsets_lex(int n) {
  std::vector<IndexSet> out;
  std::vector<int> cur;
  // Depth-first extension enumerates ascending sequences in lex order.
  auto rec = [&](auto&& self, int next) -> void {
    IndexSet s;
    s.idx = cur;
    out.push_back(std::move(s));
    for (int i = next; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<RationalVector>& rows) {
  int n = static_cast<int>(rows.size());
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("matrix rows must be square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("dimension mismatch in A*x");
  RationalVector y(n_, Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

RationalVector RationalMatrix::apply_transpose(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("dimension mismatch in A^T*x");
  RationalVector y(n_, Rational(0));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) y[j] += at(i, j) * x[i];
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dimension mismatch in A*B");
  RationalMatrix c(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < a.n(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < a.n(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

RationalMatrix principal_submatrix(const RationalMatrix& a,
                                   const IndexSet& alpha) {
  if (alpha.empty())
    throw std::invalid_argument("principal_submatrix: empty index set");
  for (int i : alpha.idx)
    if (i < 0 || i >= a.n())
      throw std::out_of_range("principal_submatrix: index out of range");
  RationalMatrix s(alpha.size());
  for (int i = 0; i < alpha.size(); ++i)
    for (int j = 0; j < alpha.size(); ++j)
      s.at(i, j) = a.at(alpha.idx[i], alpha.idx[j]);
  return s;
}

std::vector<RationalVector> block(const RationalMatrix& a, const IndexSet& rows,
                                  const IndexSet& cols) {
  std::vector<RationalVector> out(rows.size(),
                                  RationalVector(cols.size(), Rational(0)));
  for (int i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols.size(); ++j)
      out[i][j] = a.at(rows.idx[i], cols.idx[j]);
  return out;
}

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the row scales, so det(A) = det(B) / scale.
struct ClearedRows {
  std::vector<std::vector<BigInt>> b;
  BigInt scale = 1;
};

ClearedRows clear_denominators(const RationalMatrix& a,
                               const RationalVector* rhs) {
  int n = a.n();
  ClearedRows out;
  out.b.assign(n, std::vector<BigInt>(rhs ? n + 1 : n));
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        a.at(i, j).get_den().get_mpz_t());
    if (rhs)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              (*rhs)[i].get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      Rational v = a.at(i, j) * Rational(l);
      out.b[i][j] = v.get_num();
    }
    if (rhs) {
      Rational v = (*rhs)[i] * Rational(l);
      out.b[i][n] = v.get_num();
    }
    out.scale *= l;
  }
  return out;
}

// Fraction-free Bareiss forward elimination on an n x m integer table
// (m >= n). Returns the sign of the row permutation and the rank; after the
// call, rows 0..rank-1 are in echelon form with pivots on the diagonal.
struct BareissResult {
  int sign = 1;
  int rank = 0;
};

BareissResult bareiss(std::vector<std::vector<BigInt>>& t, int n, int m) {
  BareissResult res;
  BigInt prev = 1;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (t[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      std::swap(t[piv], t[row]);
      res.sign = -res.sign;
    }
    for (int i = row + 1; i < n; ++i) {
      for (int j = col + 1; j < m; ++j) {
        BigInt v = t[i][j] * t[row][col] - t[i][col] * t[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        t[i][j] = v;
      }
      t[i][col] = 0;
    }
    prev = t[row][col];
    ++row;
  }
  res.rank = row;
  return res;
}

}  // namespace

Rational determinant(const RationalMatrix& a) {
  int n = a.n();
  if (n == 0) return Rational(1);
  ClearedRows cleared = clear_denominators(a, nullptr);
  BareissResult res = bareiss(cleared.b, n, n);
  if (res.rank < n) return Rational(0);
  // After full-rank Bareiss the last pivot equals det of the integer matrix.
  Rational det(cleared.b[n - 1][n - 1] * res.sign, cleared.scale);
  det.canonicalize();
  return det;
}

std::optional<RationalVector> linear_solve(const RationalMatrix& a,
                                           const RationalVector& b) {
  int n = a.n();
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("dimension mismatch in linear_solve");
  if (n == 0) return RationalVector{};
  ClearedRows cleared = clear_denominators(a, &b);
  BareissResult res = bareiss(cleared.b, n, n + 1);
  if (res.rank < n) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (int i = n - 1; i >= 0; --i) {
    Rational s(cleared.b[i][n]);
    for (int j = i + 1; j < n; ++j) s -= Rational(cleared.b[i][j]) * x[j];
    x[i] = s / Rational(cleared.b[i][i]);
  }
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  int n = a.n();
  RationalMatrix inv(n);
  for (int j = 0; j < n; ++j) {
    RationalVector e(n, Rational(0));
    e[j] = 1;
    auto col = linear_solve(a, e);
    if (!col) return std::nullopt;
    for (int i = 0; i < n; ++i) inv.at(i, j) = (*col)[i];
  }
  return inv;
}

RationalVector operator+(const RationalVector& x, const RationalVector& y) {
  RationalVector z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

RationalVector operator-(const RationalVector& x, const RationalVector& y) {
  RationalVector z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

RationalVector operator*(const Rational& c, const RationalVector& x) {
  RationalVector z(x);
  for (auto& v : z) v *= c;
  return z;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
  Rational s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_nonneg(const RationalVector& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  return true;
}

bool is_zero(const RationalVector& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

}  // namespace lcplab
