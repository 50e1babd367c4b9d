#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ruledcone {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses `p/q` or a bare integer. Decimal notation is rejected so no value
// ever passes through binary floating point.
Rational parse_rational(std::string_view text);

// Canonical `p/q` (or `p` when the denominator is 1).
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ruledcone
