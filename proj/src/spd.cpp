#include "lcplab/spd.hpp"

#include <cmath>
#include <string>

namespace lcplab {

NumericalBreakdown::NumericalBreakdown(int idx)
    : std::runtime_error("nonpositive pivot at index " + std::to_string(idx) +
                         " in SPD factorization"),
      pivot_index(idx) {}

VectorD spd_solve(const MatrixD& h, const VectorD& r) {
  const int n = static_cast<int>(r.size());
  if (static_cast<int>(h.size()) != n)
    throw std::invalid_argument("spd_solve: dimension mismatch");
  MatrixD l(n, VectorD(n, 0.0));
  for (int j = 0; j < n; ++j) {
    double diag = h[j][j];
    for (int k = 0; k < j; ++k) diag -= l[j][k] * l[j][k];
    if (!(diag > 0)) throw NumericalBreakdown(j);
    l[j][j] = std::sqrt(diag);
    for (int i = j + 1; i < n; ++i) {
      double acc = h[i][j];
      for (int k = 0; k < j; ++k) acc -= l[i][k] * l[j][k];
      l[i][j] = acc / l[j][j];
    }
  }
  VectorD y(n);
  for (int i = 0; i < n; ++i) {
    double acc = r[i];
    for (int k = 0; k < i; ++k) acc -= l[i][k] * y[k];
    y[i] = acc / l[i][i];
  }
  VectorD x(n);
  for (int i = n - 1; i >= 0; --i) {
    double acc = y[i];
    for (int k = i + 1; k < n; ++k) acc -= l[k][i] * x[k];
    x[i] = acc / l[i][i];
  }
  return x;
}

}  // namespace lcplab
