#pragma once

#include "icher/laurent.hpp"
#include "icher/pbw.hpp"
#include "icher/transforms.hpp"

namespace icher {

// The f / g / w data derived from a deformation:
//   f(z) - f(z-1) = d^n(z^n zeta(z)), f(0) = 0;
//   g_m = f_m / ((m+1)...(m+n-1));
//   f = (2 sinh(d/2))^(n-1) z^(n-1) w(z).
// All three are univariate in z with parameter coefficients; the invariants
// are re-verified at construction.
struct DeformationPipeline {
  MultiPoly f, g, w;
};

DeformationPipeline build_pipeline(const GlPtr& d);

enum class CasimirConstruction { Residue, TraceSum };

// The Casimir element t_1' = sum_j x_j y_j + C'.
// Residue: C' = Res_{z=0} g(z^-1) det(1-zA)^-1 dz/z via the Laurent engine.
// TraceSum: C' = sum_j g_j Tr S^j A.
// Both are symmetrized into U(gl_n).
PBWElement casimir_element(const PBWEngine& eng, const DeformationPipeline& pl,
                           CasimirConstruction c);

// The commutative residue integrand result (before symmetrization), exposed
// for the construction-agreement check.
MultiPoly casimir_invariant_part(const GlPtr& d, const DeformationPipeline& pl,
                                 CasimirConstruction c);

// P(lambda) = sum_j w_j H_j(lambda + rho); re-verified against the direct
// Harish-Chandra evaluation of the Casimir element, which is the oracle.
// Throws std::logic_error when the pipeline disagrees with the oracle.
MultiPoly compute_action_polynomial(const PBWEngine& eng, const DeformationPipeline& pl);

// The oracle itself: HC(t_1') as a polynomial in lambda.
MultiPoly hc_action_polynomial(const PBWEngine& eng, const DeformationPipeline& pl);

struct BridgeReport {
  int k = 0;
  bool holds = true;
  std::vector<int> failed_directions;  // indices l with a mismatch
};

// Lemma-style commutative-to-noncommutative bridge:
// [Tr S^{k+1} A, y_l] = { sum_j (-1)^j/(k+n+1) C(k+n+1, j+1) Tr S^{k+1-j} A, y_l }
// with the right side mapped through h (x) y -> Sym(h) y.
BridgeReport bridge_identity_check(const PBWEngine& eng, int k);

}  // namespace icher
