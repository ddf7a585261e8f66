#include "icher/casimir.hpp"

#include <stdexcept>

#include "icher/symfunc.hpp"

namespace icher {

DeformationPipeline build_pipeline(const GlPtr& d) {
  const RingPtr& R = d->ring();
  const int n = d->n();
  const int z = d->z_var();
  DeformationPipeline pl{MultiPoly::zero(R), MultiPoly::zero(R), MultiPoly::zero(R)};
  if (d->m() < 0) return pl;

  MultiPoly zeta_z(R);
  for (int l = 0; l <= d->m(); ++l) zeta_z += d->zeta()[l] * MultiPoly::var(R, z, l);
  MultiPoly r = zeta_z * MultiPoly::var(R, z, n);
  for (int k = 0; k < n; ++k) r = r.derivative(z);
  pl.f = discrete_antiderivative(r, "z");
  if (pl.f - pl.f.shift_var(z, Rational(-1)) != r)
    throw std::logic_error("build_pipeline: difference equation failed");

  for (int mdeg = 0; mdeg <= pl.f.degree_in(z); ++mdeg) {
    MultiPoly fm = pl.f.coeff_of(z, mdeg);
    if (fm.is_zero()) continue;
    Rational denom(1);
    for (int i = 1; i <= n - 1; ++i) denom *= Rational(mdeg + i);
    pl.g += fm * (Rational(1) / denom) * MultiPoly::var(R, z, mdeg);
  }

  pl.w = sinh_transform(pl.f, n, SinhDirection::Inverse, "z");
  if (sinh_transform(pl.w, n, SinhDirection::Forward, "z") != pl.f)
    throw std::logic_error("build_pipeline: sinh transform round trip failed");
  return pl;
}

MultiPoly casimir_invariant_part(const GlPtr& d, const DeformationPipeline& pl,
                                 CasimirConstruction c) {
  const RingPtr& R = d->ring();
  const int z = d->z_var();
  if (pl.g.is_zero()) return MultiPoly::zero(R);
  const int gdeg = pl.g.degree_in(z);

  if (c == CasimirConstruction::TraceSum) {
    MultiPoly acc(R);
    for (int j = 1; j <= gdeg; ++j) acc += pl.g.coeff_of(z, j) * d->sym_traces().at(j);
    return acc;
  }

  // Residue route. Sufficient truncation: deg zeta + n + 2.
  const int order = d->m() + d->n() + 2;
  MultiPoly detp(R);
  Rational sign(1);
  for (size_t k = 0; k < d->char_coeffs().size(); ++k) {
    detp += d->char_coeffs()[k] * sign * MultiPoly::var(R, z, static_cast<int>(k));
    sign = -sign;
  }
  LaurentSeries detinv = LaurentSeries::from_poly(detp, "z", order).inverse(order);
  LaurentSeries ginv = LaurentSeries::from_poly_inverted_var(pl.g, "z", order);
  LaurentSeries integrand = (ginv * detinv).shifted(-1);
  return integrand.residue();
}

PBWElement casimir_element(const PBWEngine& eng, const DeformationPipeline& pl,
                           CasimirConstruction c) {
  const GlPtr& d = eng.context();
  PBWElement t1(d);
  for (int j = 1; j <= d->n(); ++j)
    t1 += eng.normal_order({Generator::X(j), Generator::Y(j)});
  return t1 + eng.symmetrize(casimir_invariant_part(d, pl, c));
}

MultiPoly hc_action_polynomial(const PBWEngine& eng, const DeformationPipeline& pl) {
  return eng.hc_project(casimir_element(eng, pl, CasimirConstruction::TraceSum));
}

MultiPoly compute_action_polynomial(const PBWEngine& eng, const DeformationPipeline& pl) {
  const GlPtr& d = eng.context();
  const RingPtr& R = d->ring();
  std::vector<int> lam;
  for (int i = 1; i <= d->n(); ++i) lam.push_back(d->lambda_var(i));
  MultiPoly P(R);
  const int wdeg = pl.w.is_zero() ? -1 : pl.w.degree_in(d->z_var());
  for (int j = 0; j <= wdeg; ++j) {
    MultiPoly wj = pl.w.coeff_of(d->z_var(), j);
    if (wj.is_zero()) continue;
    MultiPoly hj = complete_homogeneous(R, j, lam);
    for (int i = 1; i <= d->n(); ++i) hj = hj.shift_var(d->lambda_var(i), d->rho(i));
    P += wj * hj;
  }
  if (P != hc_action_polynomial(eng, pl))
    throw std::logic_error("compute_action_polynomial: pipeline disagrees with the HC oracle");
  return P;
}

BridgeReport bridge_identity_check(const PBWEngine& eng, int k) {
  const GlPtr& d = eng.context();
  const int n = d->n();
  BridgeReport rep;
  rep.k = k;
  if (k + 1 >= static_cast<int>(d->sym_traces().size()))
    throw std::invalid_argument("bridge_identity_check: k beyond the configured trace bound");

  PBWElement lhs_base = eng.symmetrize(d->sym_traces()[k + 1]);
  for (int l = 1; l <= n; ++l) {
    PBWElement yl = PBWElement::generator(d, Generator::Y(l));
    PBWElement lhs = eng.commutator(lhs_base, yl);

    PBWElement rhs(d);
    for (int j = 0; j <= k; ++j) {
      Rational coef = Rational::binomial(k + n + 1, j + 1) / Rational(k + n + 1);
      if (j % 2) coef = -coef;
      const MultiPoly& F = d->sym_traces()[k + 1 - j];
      for (int p = 1; p <= n; ++p) {
        MultiPoly dF = F.derivative(d->e_var(p, l));
        if (dF.is_zero()) continue;
        rhs += eng.mul(eng.symmetrize(dF), PBWElement::generator(d, Generator::Y(p)))
                   .scaled(coef);
      }
    }
    if (lhs != rhs) {
      rep.holds = false;
      rep.failed_directions.push_back(l);
    }
  }
  return rep;
}

}  // namespace icher
