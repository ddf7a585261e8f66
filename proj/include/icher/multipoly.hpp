#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icher/rational.hpp"
#include "icher/ring.hpp"

namespace icher {

using Monomial = std::vector<int32_t>;  // exponent vector over a ring

// Graded lexicographic order: total degree first, then lex on exponents.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational with a fixed variable ring.
// No zero coefficients are ever stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MultiPoly(RingPtr ring, const Rational& c);

  static MultiPoly zero(const RingPtr& ring) { return MultiPoly(ring); }
  static MultiPoly constant(const RingPtr& ring, const Rational& c) { return MultiPoly(ring, c); }
  static MultiPoly var(const RingPtr& ring, const std::string& name, int exp = 1);
  static MultiPoly var(const RingPtr& ring, int index, int exp = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the zero monomial).
  Rational constant_term() const;
  // Requires is_constant(); returns the value.
  Rational as_constant() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int e) const;

  // Leading term in grlex order. Polynomial must be nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  // Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coeff_of(int var, int k) const;
  // Substitute a single variable by a polynomial of the same ring.
  MultiPoly subst(int var, const MultiPoly& value) const;
  MultiPoly subst(const std::string& var, const MultiPoly& value) const;
  // Shift one variable: var -> var + c.
  MultiPoly shift_var(int var, const Rational& c) const;
  // Evaluate some variables at rationals (map var index -> value).
  MultiPoly eval_partial(const std::map<int, Rational>& values) const;

  MultiPoly derivative(int var) const;

  // Homogeneous component of the given total degree.
  MultiPoly homogeneous_component(int degree) const;

  // Exact division; throws std::domain_error when the divisor does not divide.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  // Canonical display, terms in descending grlex order, e.g. "3*l1^2*zeta0 - 1/2".
  std::string str() const;

 private:
  void check_same_ring(const MultiPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace icher
