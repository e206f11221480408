#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ainf {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator as long as it is built through the helpers below.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p", "-p" or "p/q". Throws ainf::Error on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace ainf
