#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icher/casimir.hpp"

namespace icher {

// One gl_n constituent of a finite-dimensional irreducible.
struct BoxWeight {
  std::vector<Rational> highest_weight;
  Rational dimension;  // Weyl dimension formula value (an integer)
};

struct FiniteDimReport {
  bool finite = false;
  std::string reason;                     // set when not finite
  std::vector<std::optional<long>> k;     // k_i; nullopt encodes "infinite"
  std::vector<long> nu;                   // when finite
  std::vector<BoxWeight> decomposition;   // the full box
  Rational dimension;                     // total dimension (an integer)
};

// Smallest integer root mu >= 1 of q (a univariate polynomial in `var`),
// nullopt when none exists. A zero polynomial has every root; returns 1.
std::optional<long> smallest_positive_integer_root(const MultiPoly& q, int var);

// Classification of L(lambda) for numeric rational lambda.
FiniteDimReport classify(const PBWEngine& eng, const DeformationPipeline& pl,
                         const std::vector<Rational>& lambda);

// Character data for the box decomposition with given nu (dominance of every
// box weight is checked). Usable standalone, without a deformation.
std::vector<BoxWeight> character_box(const std::vector<Rational>& lambda,
                                     const std::vector<long>& nu);
Rational weyl_dimension(const std::vector<Rational>& hw);

struct DesignedDeformation {
  std::vector<Rational> w;     // w_0..w_{n+1}
  std::vector<Rational> zeta;  // recovered zeta_0..zeta_m
  bool zeta_recovered = true;
  // The nondegeneracy determinants checked, one per (l, nu_l').
  std::vector<Rational> witness_dets;
};

// Builds a deformation whose classifier output at lambda is exactly nu
// (Theorem-4.3-style linear design on the w coefficients).
DesignedDeformation design_deformation(int n, const std::vector<Rational>& lambda,
                                       const std::vector<long>& nu);

// The (n+1)x(n+1) nondegeneracy determinant for a strictness witness
// (l, nu_l'), together with its closed-form Vandermonde value.
struct DesignWitness {
  Rational det;
  Rational closed_form;
};
DesignWitness design_witness(int n, const std::vector<Rational>& lambda,
                             const std::vector<long>& nu, int l, long nu_l_prime);

}  // namespace icher
