#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "icher/gl.hpp"
#include "icher/poisson_gl.hpp"

namespace icher {

using RatMatrix = std::vector<std::vector<Rational>>;

// The Poisson algebra of sp_2n semidirect its vector representation.
// Polynomials live in coordinates g_1..g_D along the fixed basis B of sp_2n
// (D = n(2n+1)) and vector coordinates v_1..v_2n. Bracket rules come from the
// trace-form transport of the Lie-Poisson structure; operationally every
// basis element acts through ehat(b) = (trace-dual of b)^T, the convention
// pinned by the two tau constructions agreeing and by the appendix identity.
class SpAlgebra {
 public:
  static std::shared_ptr<const SpAlgebra> make(int n, const std::vector<ZetaEntry>& zeta_even);
  static std::shared_ptr<const SpAlgebra> make_numeric(int n, const std::vector<Rational>& zeta);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int m2() const { return static_cast<int>(zeta_.size()) - 1; }  // zeta_{2 m2} is the top term
  const RingPtr& ring() const { return ring_; }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  const RatMatrix& form() const { return J_; }
  const std::vector<MultiPoly>& zeta() const { return zeta_; }

  int g_var(int b) const { return gvars_.at(b); }          // 0-based basis index
  int v_var(int j) const { return vvars_.at(j - 1); }      // 1-based
  int z_var() const { return z_; }
  int t_var() const { return t_; }
  int s_var() const { return s_; }

  // omega(v_i, v_j^*) = delta: returns (sign, index) with v_j^* = sign * v_index.
  std::pair<int, int> vstar(int j) const;

  // The action matrix of the coordinate g_b on V.
  const RatMatrix& ehat(int b) const { return ehat_.at(b); }

  // Tautological matrix A = sum_b g_b * basis_b.
  const PolyMatrix& taut() const { return taut_; }
  // Q_0..Q_n with det(1 - zA) = sum_i Q_i z^{2i}; odd coefficients vanish
  // identically and are checked at construction.
  const std::vector<MultiPoly>& q_even() const { return q_even_; }

  // {v_i, v_j} for the deformation.
  MultiPoly pair_poly(int i, int j) const;
  // Coefficient of z^{2l} in omega(v_i, (1-z^2 A^2)^-1 v_j) det(1-zA)^-1.
  MultiPoly basis_pairing(int l, int i, int j) const;

  MultiPoly bracket(const MultiPoly& a, const MultiPoly& b) const;

  const std::vector<int>& generator_vars() const { return gen_vars_; }

 private:
  SpAlgebra() = default;
  void build();

  int n_ = 0;
  RingPtr ring_;
  std::vector<RatMatrix> basis_;
  RatMatrix J_;
  std::vector<RatMatrix> ehat_;
  std::vector<int> gvars_, vvars_, gen_vars_;
  int z_ = -1, t_ = -1, s_ = -1;
  std::vector<MultiPoly> zeta_;
  PolyMatrix taut_;
  std::vector<MultiPoly> q_even_;
  std::vector<MultiPoly> detinv_even_;               // det(1-zA)^-1 even coefficients
  std::vector<PolyMatrix> even_powers_;              // A^0, A^2, A^4, ...
  std::map<std::pair<int, int>, MultiPoly> table_;   // generator brackets, u < v
};

using SpPtr = std::shared_ptr<const SpAlgebra>;

enum class TauConstruction { Bracket, ClosedForm };

// tau_i by either construction; the two must agree.
MultiPoly tau_sp(const SpAlgebra& sp, int i, TauConstruction c);

// c_1..c_n with (-1)^{i-1} c_i the coefficient of t^{2i} in
// c(t) = 2 Res_z zeta(z^-1) det(1-tA)/det(1-zA) z^-1/(1 - z^2/t^2) dz.
std::vector<MultiPoly> poisson_c_series_sp(const SpAlgebra& sp);

CenterCertificate verify_center_sp(const SpAlgebra& sp);

struct SliceReport {
  bool matches = true;
  std::vector<int> signs;  // per i: tau_i|_M = sign_i * f_i
};

// Restriction of the tau_i to the Prop-7.2 slice; supported for n <= 2 (the
// displayed slice lies inside sp_2n only at these ranks).
SliceReport slice_check(const SpAlgebra& sp);

struct AppendixReport {
  bool ok = true;
  // Residual per starting vector v_s (all zero on success).
  std::vector<MultiPoly> residuals;
  bool h_restriction_ok = true;
};

// The appendix cancellation: sum_j sum_b {dQ_i/dg_b, v} ehat_b(v_j) v_j^* = 0,
// checked for every basis vector v.
AppendixReport appendix_identity_check(const SpAlgebra& sp, int i);

}  // namespace icher
