#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hofd {

using Rational = mpq_class;

/// Parses "p/q" or an integer literal; decimals are rejected.
Rational parse_rational(std::string_view text);

/// True when the text is a rational literal ("3", "-2/7") rather than a decimal.
bool looks_rational(std::string_view text);

std::string to_string(const Rational& value);

/// num/den in canonical form (mpq_class(num, den) alone is not reduced).
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace hofd
