#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gwis {

using Rational = mpq_class;

/// "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Inverse of to_string(); also accepts non-reduced input ("2/4") and a
/// leading '-' or '+'. Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Absolute value without the expression-template wrapper.
inline Rational magnitude(const Rational& q) { return Rational(abs(q)); }

}  // namespace gwis
