#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weilptb {

// Arbitrary-precision rational, always kept in canonical (reduced, positive
// denominator) form by the helpers below.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p" or "p/q".
std::string to_string(const Rational &q);

// Accepts "p" or "p/q" with an optional leading sign on p; no whitespace.
// Throws SyntaxError (offset relative to the view) on malformed input and on
// a zero denominator.
Rational parse_rational(std::string_view text);

[[nodiscard]] bool is_integer(const Rational &q);

} // namespace weilptb
