#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "icher/gl.hpp"

namespace icher {

struct CenterResidual {
  int k = 0;                // generator index of the central candidate
  std::string generator;    // display name of the generator bracketed against
  MultiPoly residual;
};

struct CenterCertificate {
  bool ok = true;
  std::vector<CenterResidual> failures;
};

// Poisson bracket engine on S(gl_n) (x) S(V + V*), realized as polynomials in
// the shared gl ring. Generator-pair brackets are tabulated once; general
// brackets extend by the biderivation rule.
class GlPoisson {
 public:
  // Custom pairing hook for negative tests: (i, j) -> {y_i, x_j}.
  using PairFn = std::function<MultiPoly(int, int)>;

  explicit GlPoisson(GlPtr d);
  GlPoisson(GlPtr d, const PairFn& pair);

  const GlPtr& context() const { return d_; }

  MultiPoly bracket(const MultiPoly& a, const MultiPoly& b) const;

  // tau_k = sum_i x_i {Q_k, y_i} (the pairing never enters this bracket).
  MultiPoly tau(int k) const;

  // c_1..c_n from the residue series
  //   c(t) = Res_z zeta(z^-1) det(1-tA)/det(1-zA) 1/(1 - z/t) dz/z,
  // with (-1)^i c_i the coefficient of t^i.
  std::vector<MultiPoly> c_series() const;

  // Residuals {tau_k + c_k, g} over every generator g.
  CenterCertificate verify_center() const;

  // Generating-function pairing vs the trace derivative:
  // r_l(y_i, x_j) == d Tr S^{l+1} A / d e_ji for all l <= m and all i, j.
  CenterCertificate pair_vs_trace_derivative() const;

  // All generator variables (e, then x, then y), for tests and iteration.
  const std::vector<int>& generator_vars() const { return gen_vars_; }
  std::string generator_name(int var) const { return d_->ring()->name(var); }

 private:
  void build_table(const PairFn& pair);

  GlPtr d_;
  std::vector<int> gen_vars_;
  std::map<std::pair<int, int>, MultiPoly> table_;  // keyed with u < v
};

}  // namespace icher
