#pragma once

#include <vector>

#include "icher/multipoly.hpp"

namespace icher {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

PolyMatrix identity_matrix(const RingPtr& ring, int dim);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
MultiPoly mat_trace(const PolyMatrix& a);

// Coefficients of det(1 - tA) = sum_k Q_k (-t)^k, computed from power traces
// via Newton's identities. Returns [Q_0 = 1, Q_1, ..., Q_dim].
std::vector<MultiPoly> char_coeffs_from_matrix(const PolyMatrix& a);

// Tr S^j A for j = 0..upto from the Q_k, via the series identity
// det(1 - zA)^-1 = sum_j (Tr S^j A) z^j.
std::vector<MultiPoly> trace_sym_powers(const std::vector<MultiPoly>& q, int upto);

// Complete homogeneous symmetric polynomial H_j in the given ring variables.
MultiPoly complete_homogeneous(const RingPtr& ring, int j, const std::vector<int>& vars);

// H_j at rational sample points.
Rational complete_homogeneous_at(int j, const std::vector<Rational>& xs);

}  // namespace icher
