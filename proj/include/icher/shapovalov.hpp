#pragma once

#include <map>
#include <vector>

#include "icher/weights.hpp"

namespace icher {

// The Shapovalov Gram matrix S(f^m, f^m') on U(n^-)_nu, entries symbolic in
// lambda (and in the zeta parameters when the deformation is symbolic).
struct GramMatrix {
  std::vector<int> nu;
  std::vector<PBWMonomial> basis;
  std::vector<std::vector<MultiPoly>> entries;

  long tau() const { return static_cast<long>(basis.size()); }
};

GramMatrix gram_matrix(const PBWEngine& eng, const std::vector<int>& nu);

// Fraction-free Bareiss determinant over the polynomial ring.
MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m);

// Division-free determinant by dynamic programming over column subsets.
// Preferable for matrices whose entries are large symbolic polynomials: every
// product pairs a minor with a single matrix entry, and Bareiss' exact
// divisions are avoided entirely.
MultiPoly laplace_det(const std::vector<std::vector<MultiPoly>>& m);

// The Theorem-style product formula; P is the Casimir action polynomial.
MultiPoly predicted_shapovalov_det(const GlPtr& d, const MultiPoly& P, const std::vector<int>& nu);

struct DetComparison {
  long tau = 0;
  MultiPoly det;
  MultiPoly predicted;
  bool equal = false;     // det == ratio * predicted
  Rational ratio;         // leading-coefficient ratio (0 when both vanish)
};

DetComparison compare_shapovalov(const PBWEngine& eng, const MultiPoly& P,
                                 const std::vector<int>& nu);

// A vector in a Verma weight space: coefficients on the f^m monomials.
using VermaVector = std::map<PBWMonomial, Rational>;

// Applies a generator to u * v_lambda inside M(lambda), lambda numeric.
VermaVector verma_apply(const PBWEngine& eng, const Generator& g, const VermaVector& u,
                        const std::vector<Rational>& lambda);

// True when u * v_lambda is annihilated by e_{i,i+1} (i < n) and all y_i.
bool is_critical_vector(const PBWEngine& eng, const VermaVector& u,
                        const std::vector<Rational>& lambda);

// Kernel basis of an exact rational matrix (rows x cols), via elimination.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m,
                                                   int cols);

struct CriticalReport {
  std::vector<PBWMonomial> basis;
  std::vector<std::vector<Rational>> kernel;  // coefficient vectors on basis
  bool all_critical = true;
};

// Kernel of S_nu(lambda) for numeric lambda and numeric zeta, each kernel
// vector checked to be annihilated by all of n^+.
CriticalReport critical_vectors(const PBWEngine& eng, const std::vector<int>& nu,
                                const std::vector<Rational>& lambda);

}  // namespace icher
