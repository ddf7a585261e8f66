#pragma once

#include "icher/multipoly.hpp"

namespace icher {

// The unique polynomial f with f(z) - f(z-1) = r(z) and f(0) = 0.
// r must be a polynomial in zvar (coefficients may involve parameters).
MultiPoly discrete_antiderivative(const MultiPoly& r, const std::string& zvar);

enum class SinhDirection { Forward, Inverse };

// Forward: f(z) = (2 sinh(d/2))^(n-1) [z^(n-1) w(z)], expanded through exact
// half-integer shifts. Inverse: solves the triangular system for w from f;
// throws std::domain_error if no polynomial solution exists.
MultiPoly sinh_transform(const MultiPoly& p, int n, SinhDirection dir, const std::string& zvar);

}  // namespace icher
