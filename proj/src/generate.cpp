#include "lcplab/generate.hpp"

#include <stdexcept>

namespace lcplab {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

long Rng::range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::range: empty interval");
  return lo + static_cast<long>(next() %
                                static_cast<std::uint64_t>(hi - lo + 1));
}

RationalMatrix generate_structured(const RationalMatrix& block,
                                   const RationalVector& col,
                                   const RationalVector& row) {
  const int k = block.n();
  if (static_cast<int>(col.size()) != k || static_cast<int>(row.size()) != k)
    throw std::invalid_argument("generate_structured: border size mismatch");
  for (const Rational& v : col)
    if (v <= 0)
      throw std::invalid_argument("generate_structured: col must be > 0");
  for (const Rational& v : row)
    if (v >= 0)
      throw std::invalid_argument("generate_structured: row must be < 0");
  MinorClass label = principal_minor_class(block).label;
  if (label != MinorClass::P && label != MinorClass::P0)
    throw std::invalid_argument(
        "generate_structured: block is not P0 (minor class " +
        minor_class_name(label) + ")");

  const int n = k + 1;
  std::vector<RationalVector> rows(n, RationalVector(n, Rational(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) rows[i][j] = block.at(i, j);
    rows[i][k] = col[i];
    rows[k][i] = row[i];
  }
  RationalMatrix out = RationalMatrix::from_rows(rows);
  ClassVerdict v = is_E0s_tilde(out);
  if (!v.member)
    throw std::logic_error(
        "generate_structured: construction postcondition failed: " + v.detail);
  return out;
}

RationalMatrix generate_structured(int n, std::uint64_t seed) {
  if (n < 2)
    throw std::invalid_argument("generate_structured: need n >= 2");
  Rng rng(seed);
  const int k = n - 1;
  auto draw_block = [&]() {
    std::vector<RationalVector> rows(k, RationalVector(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) rows[i][j] = Rational(rng.range(-3, 3));
    return RationalMatrix::from_rows(rows);
  };
  RationalMatrix block = RationalMatrix::identity(k);
  for (int tries = 0; tries < 500; ++tries) {
    RationalMatrix cand = draw_block();
    MinorClass label = principal_minor_class(cand).label;
    if (label == MinorClass::P || label == MinorClass::P0) {
      block = cand;
      break;
    }
  }
  RationalVector col(k), row(k);
  for (int i = 0; i < k; ++i) {
    col[i] = Rational(rng.range(1, 3));
    row[i] = Rational(rng.range(-3, -1));
  }
  return generate_structured(block, col, row);
}

std::optional<ClassFilter> class_filter_from_name(const std::string& name) {
  if (name == "none") return ClassFilter::None;
  if (name == "P0") return ClassFilter::P0;
  if (name == "P") return ClassFilter::P;
  if (name == "E0") return ClassFilter::E0;
  if (name == "E0s") return ClassFilter::E0s;
  if (name == "E0s~" || name == "E0s_tilde") return ClassFilter::E0sTilde;
  if (name == "R0") return ClassFilter::R0;
  if (name == "sufficient") return ClassFilter::Sufficient;
  if (name == "copositive") return ClassFilter::Copositive;
  return std::nullopt;
}

std::string class_filter_name(ClassFilter f) {
  switch (f) {
    case ClassFilter::None: return "none";
    case ClassFilter::P0: return "P0";
    case ClassFilter::P: return "P";
    case ClassFilter::E0: return "E0";
    case ClassFilter::E0s: return "E0s";
    case ClassFilter::E0sTilde: return "E0s~";
    case ClassFilter::R0: return "R0";
    case ClassFilter::Sufficient: return "sufficient";
    case ClassFilter::Copositive: return "copositive";
  }
  return "?";
}

GenerateOutcome generate_random(ClassFilter filter, int n, std::uint64_t seed,
                                int budget) {
  if (n < 1) throw std::invalid_argument("generate_random: need n >= 1");
  Rng rng(seed);
  GenerateOutcome out;
  auto accepts = [&](const RationalMatrix& a) {
    switch (filter) {
      case ClassFilter::None: return true;
      case ClassFilter::P0: return is_p0(a).member;
      case ClassFilter::P: return is_p(a).member;
      case ClassFilter::E0: return is_semimonotone(a).member;
      case ClassFilter::E0s: return is_E0s(a).member;
      case ClassFilter::E0sTilde: return is_E0s_tilde(a).member;
      case ClassFilter::R0: return is_r0(a).member;
      case ClassFilter::Sufficient: return is_sufficient(a).member;
      case ClassFilter::Copositive: return is_copositive(a).member;
    }
    return false;
  };
  while (out.attempts < budget) {
    ++out.attempts;
    std::vector<RationalVector> rows(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = Rational(rng.range(-3, 3));
    RationalMatrix cand = RationalMatrix::from_rows(rows);
    if (accepts(cand)) {
      out.matrix = std::move(cand);
      break;
    }
  }
  return out;
}

}  // namespace lcplab
