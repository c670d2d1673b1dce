#include "lcplab/ppt.hpp"

#include <stdexcept>

namespace lcplab {

namespace {

using Table = std::vector<RationalVector>;

Table mul(const Table& x, const Table& y) {
  size_t rows = x.size(), inner = y.size(), cols = inner ? y[0].size() : 0;
  Table z(rows, RationalVector(cols, Rational(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (x[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

Table to_table(const RationalMatrix& m) {
  Table t(m.n(), RationalVector(m.n()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) t[i][j] = m.at(i, j);
  return t;
}

}  // namespace

std::optional<RationalMatrix> ppt_transform(const RationalMatrix& a,
                                            const IndexSet& alpha) {
  const int n = a.n();
  for (int i : alpha.idx)
    if (i < 0 || i >= n) throw std::out_of_range("ppt_transform: bad index");
  if (alpha.empty()) return a;

  IndexSet bar = alpha.complement(n);
  auto inv = inverse(principal_submatrix(a, alpha));
  if (!inv) return std::nullopt;
  Table invt = to_table(*inv);

  Table a_ab = block(a, alpha, bar);
  Table a_ba = block(a, bar, alpha);
  Table a_bb = block(a, bar, bar);

  Table m_aa = invt;
  Table m_ab = mul(invt, a_ab);
  for (auto& row : m_ab)
    for (auto& v : row) v = -v;
  Table m_ba = mul(a_ba, invt);
  Table correction = mul(mul(a_ba, invt), a_ab);
  for (size_t i = 0; i < a_bb.size(); ++i)
    for (size_t j = 0; j < a_bb.size(); ++j) a_bb[i][j] -= correction[i][j];

  RationalMatrix m(n);
  for (int i = 0; i < alpha.size(); ++i)
    for (int j = 0; j < alpha.size(); ++j)
      m.at(alpha.idx[i], alpha.idx[j]) = m_aa[i][j];
  for (int i = 0; i < alpha.size(); ++i)
    for (int j = 0; j < bar.size(); ++j)
      m.at(alpha.idx[i], bar.idx[j]) = m_ab[i][j];
  for (int i = 0; i < bar.size(); ++i)
    for (int j = 0; j < alpha.size(); ++j)
      m.at(bar.idx[i], alpha.idx[j]) = m_ba[i][j];
  for (int i = 0; i < bar.size(); ++i)
    for (int j = 0; j < bar.size(); ++j)
      m.at(bar.idx[i], bar.idx[j]) = a_bb[i][j];
  return m;
}

std::optional<RationalVector> ppt_rhs(const RationalMatrix& a,
                                      const RationalVector& q,
                                      const IndexSet& alpha) {
  const int n = a.n();
  if (static_cast<int>(q.size()) != n)
    throw std::invalid_argument("ppt_rhs: dimension mismatch");
  if (alpha.empty()) return q;

  IndexSet bar = alpha.complement(n);
  auto inv = inverse(principal_submatrix(a, alpha));
  if (!inv) return std::nullopt;

  RationalVector q_a(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) q_a[i] = q[alpha.idx[i]];
  RationalVector t = inv->apply(q_a);  // inv(A_aa) q_a

  RationalVector out(n, Rational(0));
  for (int i = 0; i < alpha.size(); ++i) out[alpha.idx[i]] = -t[i];
  Table a_ba = block(a, bar, alpha);
  for (int i = 0; i < bar.size(); ++i) {
    Rational v = q[bar.idx[i]];
    for (int j = 0; j < alpha.size(); ++j) v -= a_ba[i][j] * t[j];
    out[bar.idx[i]] = v;
  }
  return out;
}

std::vector<IndexSet> enumerate_legitimate(const RationalMatrix& a) {
  std::vector<IndexSet> out;
  for (const auto& alpha : subsets_lex(a.n())) {
    if (alpha.empty()) {
      out.push_back(alpha);
      continue;
    }
    if (determinant(principal_submatrix(a, alpha)) != 0) out.push_back(alpha);
  }
  return out;
}

}  // namespace lcplab
