#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nary {

// Exact rationals; mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as construction goes through parse_scalar.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q". Throws Error(ParseError) on malformed input or a
// zero denominator.
Scalar parse_scalar(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

inline int sign_of(const Scalar& value) { return sgn(value); }

}  // namespace nary
