#pragma once

#include <string>
#include <vector>

#include "icher/multipoly.hpp"

namespace icher {

// Truncated Laurent series in one formal variable with MultiPoly coefficients.
// Coefficients are known exactly on [low, order]; below `low` they are zero,
// above `order` they are unknown and asking for them is an error.
class LaurentSeries {
 public:
  LaurentSeries(std::string var, int low, std::vector<MultiPoly> coeffs);

  static LaurentSeries zero(const RingPtr& ring, std::string var, int order);
  // p interpreted via its exponents in `ringvar` (a variable of the ring);
  // remaining variables stay in the coefficients.
  static LaurentSeries from_poly(const MultiPoly& p, const std::string& ringvar, int order);
  // Substitutes z -> z^-1 into a polynomial of `ringvar`: exponent k becomes -k.
  static LaurentSeries from_poly_inverted_var(const MultiPoly& p, const std::string& ringvar,
                                              int order);

  const std::string& var() const { return var_; }
  int low() const { return low_; }
  int order() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const RingPtr& ring() const { return ring_; }

  // Exact coefficient of var^k; zero below `low`, error above `order`.
  MultiPoly coeff(int k) const;

  // Coefficient of var^-1.
  MultiPoly residue() const { return coeff(-1); }

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(const MultiPoly& c) const;
  // Multiplies by var^k.
  LaurentSeries shifted(int k) const;

  // Multiplicative inverse of a series with low == 0 and invertible constant
  // coefficient, truncated at `order`.
  LaurentSeries inverse(int order) const;

 private:
  void normalize();

  std::string var_;
  int low_ = 0;
  std::vector<MultiPoly> coeffs_;
  RingPtr ring_;
};

}  // namespace icher
