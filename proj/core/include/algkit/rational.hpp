#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace algkit {

/// Exact rational number. mpq_class keeps numerator/denominator canonical
/// (denominator > 0, gcd = 1) after every arithmetic operation.
using Rational = mpq_class;

/// "p/q" form, always with an explicit denominator ("3/1", "-1/2", "0/1").
std::string to_pq_string(const Rational& r);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_short_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

}  // namespace algkit
