#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lcplab/classes.hpp"
#include "lcplab/linalg.hpp"

namespace lcplab {

// splitmix64: tiny, deterministic across platforms, good enough for test
// instance generation (std:: distributions are not bit-stable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  long range(long lo, long hi);  // uniform-ish in [lo, hi]

 private:
  std::uint64_t state_;
};

// Bordered construction: [[block, col], [row^T, 0]] with block in P0,
// col > 0, row < 0. The resulting matrix always passes the E0s~ detector;
// a detector disagreement throws std::logic_error (loudly, since it would
// mean either the construction or a detector is wrong).
RationalMatrix generate_structured(const RationalMatrix& block,
                                   const RationalVector& col,
                                   const RationalVector& row);

// Random instance of the same shape: integer P0 block with entries in
// [-3,3] (identity fallback if rejection runs long), col in [1,3],
// row in [-3,-1].
RationalMatrix generate_structured(int n, std::uint64_t seed);

enum class ClassFilter {
  None,
  P0,
  P,
  E0,
  E0s,
  E0sTilde,
  R0,
  Sufficient,
  Copositive,
};

std::optional<ClassFilter> class_filter_from_name(const std::string& name);
std::string class_filter_name(ClassFilter f);

struct GenerateOutcome {
  std::optional<RationalMatrix> matrix;  // absent when the budget ran out
  int attempts = 0;
};

// Rejection sampling: draw n x n integer matrices with entries in [-3,3]
// until the requested detector accepts or `budget` draws are used up.
GenerateOutcome generate_random(ClassFilter filter, int n, std::uint64_t seed,
                                int budget = 10000);

}  // namespace lcplab
