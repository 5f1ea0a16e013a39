#pragma once

#include "jetvpa/polynomial.hpp"

namespace jetvpa {

// Exact quotient a / b; throws std::invalid_argument when b does not
// divide a (or b = 0).
Polynomial poly_exact_divide(const Polynomial& a, const Polynomial& b);

// Greatest common divisor over the rationals via primitive
// pseudo-remainder sequences, monic under the default order.
// poly_gcd(0, 0) = 0; nonzero constants are units so any constant input
// gives 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace jetvpa
