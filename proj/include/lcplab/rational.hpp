#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lcplab {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator after every arithmetic op, which is the invariant we rely on.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "7", "-4", "3/4", "-3/4", "2.75", "-0.5", optional exponent
// ("1.5e-2"). Decimal forms convert exactly (0.1 -> 1/10).
Rational parse_rational(const std::string& text);

// Canonical form: "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Exact value of the binary64 input (every finite double is rational).
Rational rational_from_double(double x);

using RationalVector = std::vector<Rational>;

std::string to_string(const RationalVector& v);

}  // namespace lcplab
