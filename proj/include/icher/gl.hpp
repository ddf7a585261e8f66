#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "icher/multipoly.hpp"
#include "icher/symfunc.hpp"

namespace icher {

// One zeta coefficient as given on a command line or API call: either an
// exact rational or the name of a formal parameter.
struct ZetaEntry {
  std::optional<Rational> value;  // engaged for numeric entries
  std::string symbol;             // used when value is empty

  static ZetaEntry numeric(Rational v) { return {std::move(v), {}}; }
  static ZetaEntry symbolic(std::string name) { return {std::nullopt, std::move(name)}; }
};

// The deformation data for H_zeta(gl_n) together with the ambient commutative
// ring used by every gl-side computation: parameters (zeta, lambda), matrix
// entry variables e_ij, vector variables x_i/y_i and series variables z, t, s.
class GlDeformation {
 public:
  static std::shared_ptr<const GlDeformation> make(int n, const std::vector<ZetaEntry>& zeta);
  static std::shared_ptr<const GlDeformation> make_numeric(int n,
                                                           const std::vector<Rational>& zeta);
  // zeta_0..zeta_m all formal.
  static std::shared_ptr<const GlDeformation> make_symbolic(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }  // degree of zeta(z); -1 for the zero pairing
  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& zeta() const { return zeta_; }

  int lambda_var(int i) const { return lambda_.at(i - 1); }        // 1-based
  int e_var(int i, int j) const { return e_.at(i - 1).at(j - 1); }  // 1-based
  int x_var(int i) const { return x_.at(i - 1); }
  int y_var(int i) const { return y_.at(i - 1); }
  int z_var() const { return z_; }
  int t_var() const { return t_; }
  int s_var() const { return s_; }

  MultiPoly constant(const Rational& c) const { return MultiPoly::constant(ring_, c); }

  // The matrix of entry variables E with E[i][j] = e_{i+1,j+1}.
  const PolyMatrix& entry_matrix() const { return entry_matrix_; }
  // Q_0..Q_n with det(1 - tE) = sum Q_k (-t)^k.
  const std::vector<MultiPoly>& char_coeffs() const { return char_coeffs_; }
  // Tr S^j E for j = 0..upto (extends the cached list on demand is not needed:
  // computed to a fixed bound at construction).
  const std::vector<MultiPoly>& sym_traces() const { return sym_traces_; }

  // rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
  Rational rho(int i) const { return Rational(n_ + 1 - 2 * i, 2); }  // 1-based

  // The commutative pairing polynomial zeta(y_i, x_j) in S(gl_n), i.e. the
  // series coefficient combination; used directly by the Poisson bracket and,
  // after symmetrization, by the PBW engine.
  MultiPoly pair_poly(int i, int j) const;

  // r_l(y_i, x_j) for a single l (coefficient of tau^l in the pairing series).
  MultiPoly basis_pairing(int l, int i, int j) const;

 private:
  GlDeformation() = default;

  int n_ = 0;
  int m_ = -1;
  RingPtr ring_;
  std::vector<int> lambda_, x_, y_;
  std::vector<std::vector<int>> e_;
  int z_ = -1, t_ = -1, s_ = -1;
  std::vector<MultiPoly> zeta_;

  PolyMatrix entry_matrix_;
  std::vector<PolyMatrix> entry_powers_;  // E^0..E^max
  std::vector<MultiPoly> char_coeffs_;
  std::vector<MultiPoly> sym_traces_;
};

using GlPtr = std::shared_ptr<const GlDeformation>;

}  // namespace icher
