#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace homakivis {

/// Exact rational scalar. GMP keeps every arithmetic result in canonical
/// form (positive denominator, coprime numerator/denominator).
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0) and
/// returns the reduced value. Throws InputError on anything else.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace homakivis
