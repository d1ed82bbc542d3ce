#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace orthomat {

// Arbitrary-precision rational kept in lowest terms with a positive
// denominator. Every constructor path in this library canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses `-12`, `7`, or `p/q` (q != 0). Anything else, floats included,
// yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace orthomat
