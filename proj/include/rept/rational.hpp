#pragma once

#include <gmpxx.h>

#include <string>

namespace rept {

// Exact arbitrary-precision rationals. mpq_class keeps the canonical form we
// rely on (positive denominator, reduced fraction).
using Rational = mpq_class;

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

}  // namespace rept
