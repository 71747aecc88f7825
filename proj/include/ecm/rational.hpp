#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ecm {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q" or a decimal literal such as "-1.25" or "2.5e-3" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace ecm
