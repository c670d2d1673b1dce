#pragma once

#include <stdexcept>
#include <vector>

namespace lcplab {

using VectorD = std::vector<double>;
using MatrixD = std::vector<VectorD>;

struct NumericalBreakdown : std::runtime_error {
  int pivot_index;
  explicit NumericalBreakdown(int idx);
};

// Solves H x = r for symmetric positive definite H by Cholesky
// factorization. A nonpositive pivot throws NumericalBreakdown carrying the
// 0-based pivot index.
VectorD spd_solve(const MatrixD& h, const VectorD& r);

}  // namespace lcplab
