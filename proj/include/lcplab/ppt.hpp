#pragma once

#include <optional>

#include "lcplab/linalg.hpp"

namespace lcplab {

// Principal pivot transform on the index set alpha. Defined only when the
// pivot block A[alpha,alpha] is nonsingular ("legitimate"); nullopt otherwise.
// alpha = {} returns A itself.
//
//   M[a,a] = inv(A[a,a])          M[a,b] = -inv(A[a,a]) A[a,b]
//   M[b,a] = A[b,a] inv(A[a,a])   M[b,b] = A[b,b] - A[b,a] inv(A[a,a]) A[a,b]
std::optional<RationalMatrix> ppt_transform(const RationalMatrix& a,
                                            const IndexSet& alpha);

// Transformed right-hand side of LCP(q, A) under the same pivot:
//   q'[a] = -inv(A[a,a]) q[a],  q'[b] = q[b] - A[b,a] inv(A[a,a]) q[a].
std::optional<RationalVector> ppt_rhs(const RationalMatrix& a,
                                      const RationalVector& q,
                                      const IndexSet& alpha);

// All alpha with nonsingular A[alpha,alpha], in lexicographic order; the
// empty set is always first.
std::vector<IndexSet> enumerate_legitimate(const RationalMatrix& a);

}  // namespace lcplab
