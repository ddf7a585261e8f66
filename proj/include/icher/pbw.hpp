#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icher/gl.hpp"

namespace icher {

enum class GenKind : uint8_t { X, E, Y };

// A generator of H_zeta(gl_n): X(i) = x_i, Y(i) = y_i, E(i, j) = e_ij.
struct Generator {
  GenKind kind;
  int i = 0;
  int j = 0;

  static Generator X(int i) { return {GenKind::X, i, 0}; }
  static Generator Y(int i) { return {GenKind::Y, i, 0}; }
  static Generator E(int i, int j) { return {GenKind::E, i, j}; }
};

// Canonical generator order for rank n (this is the PBW normal order):
//   x_1..x_n < e_ij (i>j, lex) < e_ii < e_ij (i<j, lex) < y_1..y_n.
// Lower-triangular entries precede diagonal precede upper-triangular so that
// both the Harish-Chandra projection and the Verma action read off normal
// monomials directly.
class GenOrder {
 public:
  explicit GenOrder(int n);

  int count() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int idx) const { return gens_.at(idx); }
  int index(const Generator& g) const;
  // h-weight of the generator as a length-n integer vector.
  const std::vector<int>& weight(int idx) const { return weights_.at(idx); }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> weights_;
};

// Exponent vector over the canonical generator order; represents the
// normal-ordered product x^a e^b y^c.
struct PBWMonomial {
  std::vector<int16_t> exp;

  int degree() const;
  bool operator==(const PBWMonomial& o) const { return exp == o.exp; }
  bool operator<(const PBWMonomial& o) const;  // grlex
};

// Finite linear combination of PBW monomials with MultiPoly coefficients.
class PBWElement {
 public:
  PBWElement() = default;
  explicit PBWElement(GlPtr d) : d_(std::move(d)) {}

  static PBWElement zero(const GlPtr& d) { return PBWElement(d); }
  static PBWElement one(const GlPtr& d);
  static PBWElement generator(const GlPtr& d, const Generator& g);
  static PBWElement monomial(const GlPtr& d, const PBWMonomial& m, const MultiPoly& coeff);

  const GlPtr& context() const { return d_; }
  const std::map<PBWMonomial, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PBWMonomial& m, const MultiPoly& c);

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  PBWElement operator-() const;
  PBWElement scaled(const MultiPoly& c) const;
  PBWElement scaled(const Rational& c) const;

  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

  std::string str() const;

 private:
  GlPtr d_;
  std::map<PBWMonomial, MultiPoly> terms_;
};

// Shared per-deformation engine state: generator order, the zeta pairing
// cache and a monomial product cache. Read-mostly, safe for concurrent use.
class PBWEngine {
 public:
  explicit PBWEngine(GlPtr d);

  const GlPtr& context() const { return d_; }
  const GenOrder& order() const { return order_; }

  // Normal-orders an arbitrary word of generators (times a coefficient).
  PBWElement normal_order(const std::vector<Generator>& word, const MultiPoly& coeff) const;
  PBWElement normal_order(const std::vector<Generator>& word) const;

  PBWElement mul(const PBWElement& a, const PBWElement& b) const;
  PBWElement commutator(const PBWElement& a, const PBWElement& b) const;

  // zeta(y_i, x_j) as an element of U(gl_n), cached per (i, j).
  const PBWElement& zeta_pair(int i, int j) const;

  // Symmetrization map S(gl_n) -> U(gl_n); p may involve only e-variables and
  // parameters (zeta symbols), never x/y or series variables.
  PBWElement symmetrize(const MultiPoly& p) const;

  // The anti-involution sigma: y_i <-> x_i, e_ij <-> e_ji, product reversed.
  PBWElement sigma(const PBWElement& a) const;

  // Harish-Chandra projection onto S(h), evaluated as a polynomial in lambda.
  MultiPoly hc_project(const PBWElement& a) const;

  // h-weight of a monomial.
  std::vector<int> weight(const PBWMonomial& m) const;
  // True when every term of a has the given weight.
  bool is_weight_homogeneous(const PBWElement& a, const std::vector<int>& w) const;

  std::vector<Generator> letters(const PBWMonomial& m) const;

 private:
  // Normal form of (normal monomial) * (single generator); memoized. All
  // other products fold over this.
  PBWElement mul_letter(const PBWMonomial& a, int gidx) const;
  PBWElement mul_letter_uncached(const PBWMonomial& a, int gidx) const;
  // Expansion terms of [g1, g2] for adjacent out-of-order g1 g2 (rank g1 > rank g2),
  // as words with coefficients.
  void bracket_terms(int g1, int g2,
                     std::vector<std::pair<std::vector<int>, MultiPoly>>& out) const;

  GlPtr d_;
  GenOrder order_;
  mutable std::mutex pair_mutex_;
  mutable std::map<std::pair<int, int>, PBWElement> pair_cache_;
  mutable std::mutex letter_mutex_;
  mutable std::map<std::pair<PBWMonomial, int>, PBWElement> letter_cache_;
};

}  // namespace icher
