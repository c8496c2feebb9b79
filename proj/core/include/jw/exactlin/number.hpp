#pragma once

#include <gmpxx.h>

#include <string>

namespace jw {

// Arbitrary-precision scalars used throughout. mpq_class keeps values in
// lowest terms with a positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }
inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace jw
