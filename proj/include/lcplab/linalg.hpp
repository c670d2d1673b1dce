#pragma once

#include <optional>
#include <vector>

#include "lcplab/rational.hpp"

namespace lcplab {

// Sorted 0-based index list. External formats (files, CLI, reports) use
// 1-based indices; conversion happens at the io boundary.
struct IndexSet {
  std::vector<int> idx;

  IndexSet() = default;
  explicit IndexSet(std::vector<int> v);

  int size() const { return static_cast<int>(idx.size()); }
  bool empty() const { return idx.empty(); }
  bool contains(int i) const;
  // Ascending complement within {0..n-1}.
  IndexSet complement(int n) const;

  bool operator==(const IndexSet&) const = default;
};

// All subsets of {0..n-1} in lexicographic order of their ascending index
// sequences: {}, {0}, {0,1}, {0,1,2}, ..., {0,2}, {1}, ...
std::vector<IndexSet> subsets_lex(int n);

// Dense square matrix over Rational, row-major.
class RationalMatrix {
 public:
  RationalMatrix() : n_(0) {}
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  // Row-major init, rows.size() == n, each row size n.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(int n);

  int n() const { return n_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  RationalMatrix transpose() const;
  RationalVector apply(const RationalVector& x) const;           // A x
  RationalVector apply_transpose(const RationalVector& x) const; // A^T x

  bool operator==(const RationalMatrix&) const = default;

 private:
  int n_;
  std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// A[alpha, alpha]. alpha must be nonempty with indices in range.
RationalMatrix principal_submatrix(const RationalMatrix& a,
                                   const IndexSet& alpha);

// Rectangular block A[rows, cols] as a row-major table.
std::vector<RationalVector> block(const RationalMatrix& a, const IndexSet& rows,
                                  const IndexSet& cols);

// Exact determinant: per-row denominator clearing followed by fraction-free
// (Bareiss) integer elimination, so intermediate entries stay integral.
Rational determinant(const RationalMatrix& a);

// Unique solution of A x = b, or nullopt when A is singular (no unique
// solution, whether or not the system is consistent).
std::optional<RationalVector> linear_solve(const RationalMatrix& a,
                                           const RationalVector& b);

// Inverse, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

RationalVector operator+(const RationalVector& x, const RationalVector& y);
RationalVector operator-(const RationalVector& x, const RationalVector& y);
RationalVector operator*(const Rational& c, const RationalVector& x);
Rational dot(const RationalVector& x, const RationalVector& y);
bool is_nonneg(const RationalVector& x);
bool is_zero(const RationalVector& x);

}  // namespace lcplab
