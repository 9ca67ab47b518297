#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crged {

/// Exact arbitrary-precision rational. GMP keeps values canonical (reduced, den > 0)
/// after every arithmetic operation; construct through make_rational/parse_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "num/den" or a bare integer, optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "num/den" in lowest terms, integers included ("0/1", "1/1").
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Decimal rendering for human display only.
std::string to_decimal_string(const Rational& q, int digits = 6);

inline bool in_unit_interval(const Rational& p) { return sgn(p) >= 0 && p <= 1; }

} // namespace crged
