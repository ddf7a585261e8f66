#include "icher/findim.hpp"

#include <algorithm>
#include <stdexcept>

#include "icher/shapovalov.hpp"
#include "icher/symfunc.hpp"

namespace icher {

namespace {

bool is_nonneg_integer(const Rational& r) { return r.is_integer() && r.sign() >= 0; }

long to_long(const Rational& r) {
  if (!r.is_integer()) throw std::invalid_argument("expected an integer");
  return r.numerator().get_si();
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    Rational inv = Rational(1) / m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] * inv;
      if (f.is_zero()) continue;
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace

std::optional<long> smallest_positive_integer_root(const MultiPoly& q, int var) {
  if (q.is_zero()) return 1;  // identically zero: every shift works
  const int deg = q.degree_in(var);
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (int k = 0; k <= deg; ++k) {
    MultiPoly ck = q.coeff_of(var, k);
    coeffs[k] = ck.as_constant();
  }
  // Clear denominators.
  mpz_class lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ic(deg + 1);
  for (int k = 0; k <= deg; ++k) ic[k] = coeffs[k].numerator() * (lcm / coeffs[k].denominator());
  // Strip the power of the variable; mu = 0 is not a candidate anyway.
  int low = 0;
  while (ic[low] == 0) ++low;
  if (low == deg) return std::nullopt;  // q = c * mu^deg, only root 0
  // Cauchy bound on integer roots: 1 + max |a_i| / |a_deg|.
  mpz_class alead = abs(ic[deg]);
  mpz_class maxc = 0;
  for (int k = low; k <= deg; ++k) maxc = std::max(maxc, mpz_class(abs(ic[k])));
  mpz_class bound = 1 + maxc / alead + 1;
  if (bound > 2000000) throw std::invalid_argument("integer root bound too large for search");
  const mpz_class trailing = abs(ic[low]);
  for (mpz_class k = 1; k <= bound; ++k) {
    if (!mpz_divisible_p(trailing.get_mpz_t(), k.get_mpz_t())) continue;  // rational root theorem
    mpz_class val = 0;
    for (int d = deg; d >= low; --d) val = val * k + ic[d];
    if (val == 0) return k.get_si();
  }
  return std::nullopt;
}

Rational weyl_dimension(const std::vector<Rational>& hw) {
  const int n = static_cast<int>(hw.size());
  Rational dim(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      dim *= (hw[i - 1] - hw[j - 1] + Rational(j - i)) / Rational(j - i);
  if (!dim.is_integer() || dim.sign() <= 0)
    throw std::invalid_argument("weyl_dimension: weight is not dominant integral");
  return dim;
}

std::vector<BoxWeight> character_box(const std::vector<Rational>& lambda,
                                     const std::vector<long>& nu) {
  const int n = static_cast<int>(lambda.size());
  if (static_cast<int>(nu.size()) != n) throw std::invalid_argument("character_box: size mismatch");
  std::vector<BoxWeight> box;
  std::vector<long> a(n, 0);
  for (;;) {
    BoxWeight bw;
    for (int i = 0; i < n; ++i) bw.highest_weight.push_back(lambda[i] - Rational(a[i]));
    bw.dimension = weyl_dimension(bw.highest_weight);
    box.push_back(std::move(bw));
    int pos = n - 1;
    while (pos >= 0 && a[pos] == nu[pos]) a[pos--] = 0;
    if (pos < 0) break;
    ++a[pos];
  }
  return box;
}

FiniteDimReport classify(const PBWEngine& eng, const DeformationPipeline& pl,
                         const std::vector<Rational>& lambda) {
  const GlPtr& d = eng.context();
  const int n = d->n();
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("classify: bad lambda");
  FiniteDimReport rep;

  for (int i = 1; i < n; ++i) {
    if (!is_nonneg_integer(lambda[i - 1] - lambda[i])) {
      rep.finite = false;
      rep.reason = "lambda is not a dominant gl weight";
      return rep;
    }
  }

  MultiPoly P = compute_action_polynomial(eng, pl);
  const int zaux = d->z_var();
  rep.k.assign(n, std::nullopt);
  for (int i = 1; i <= n; ++i) {
    // q(mu) = P(lambda) - P(lambda - mu e_i), realized in the auxiliary variable.
    std::map<int, Rational> vals;
    for (int tvar = 1; tvar <= n; ++tvar)
      if (tvar != i) vals[d->lambda_var(tvar)] = lambda[tvar - 1];
    MultiPoly Pi = P.eval_partial(vals);
    MultiPoly at_lambda = Pi.eval_partial({{d->lambda_var(i), lambda[i - 1]}});
    MultiPoly shifted = Pi.subst(d->lambda_var(i),
                                 MultiPoly::constant(d->ring(), lambda[i - 1]) -
                                     MultiPoly::var(d->ring(), zaux));
    MultiPoly q = at_lambda - shifted;
    auto root = smallest_positive_integer_root(q, zaux);
    if (root) rep.k[i - 1] = *root - 1;
  }

  if (!rep.k[n - 1]) {
    rep.finite = false;
    rep.reason = "no Casimir-equal shift in the last direction";
    return rep;
  }
  rep.finite = true;
  rep.nu.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    long gap = to_long(lambda[i - 1] - lambda[i]);
    rep.nu[i - 1] = rep.k[i - 1] ? std::min(*rep.k[i - 1], gap) : gap;
  }
  rep.nu[n - 1] = *rep.k[n - 1];

  rep.decomposition = character_box(lambda, rep.nu);
  rep.dimension = Rational(0);
  for (const auto& bw : rep.decomposition) rep.dimension += bw.dimension;
  return rep;
}

namespace {

// R^N_{mj} = H_N(lambda') - H_N(lambda' with the j-th entry lowered by m+1).
Rational design_r(const std::vector<Rational>& lp, int N, long m, int j) {
  std::vector<Rational> shifted = lp;
  shifted[j - 1] -= Rational(m + 1);
  return complete_homogeneous_at(N, lp) - complete_homogeneous_at(N, shifted);
}

std::vector<Rational> lambda_prime(int n, const std::vector<Rational>& lambda) {
  std::vector<Rational> lp = lambda;
  for (int i = 1; i <= n; ++i) lp[i - 1] += Rational(n + 1 - 2 * i, 2);
  return lp;
}

void validate_shape(int n, const std::vector<Rational>& lambda, const std::vector<long>& nu) {
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(nu.size()) != n)
    throw std::invalid_argument("design: size mismatch");
  for (long v : nu)
    if (v < 0) throw std::invalid_argument("design: negative nu");
  for (int i = 1; i < n; ++i) {
    Rational gap = lambda[i - 1] - lambda[i];
    if (!is_nonneg_integer(gap) || nu[i - 1] > to_long(gap))
      throw std::invalid_argument("design: shape constraints violated");
  }
}

}  // namespace

DesignWitness design_witness(int n, const std::vector<Rational>& lambda,
                             const std::vector<long>& nu, int l, long nu_l_prime) {
  validate_shape(n, lambda, nu);
  auto lp = lambda_prime(n, lambda);
  std::vector<std::vector<Rational>> m;
  for (int j = 1; j <= n; ++j) {
    std::vector<Rational> row;
    for (int N = 1; N <= n + 1; ++N) row.push_back(design_r(lp, N, nu[j - 1], j));
    m.push_back(std::move(row));
  }
  std::vector<Rational> row;
  for (int N = 1; N <= n + 1; ++N) row.push_back(design_r(lp, N, nu_l_prime, l));
  m.push_back(std::move(row));

  DesignWitness w;
  w.det = rational_det(std::move(m));
  // Closed form: prod (nu_i + 1) * (nu_l' + 1) times the Vandermonde of
  // a_p = k_p - nu_p - 1 with k_p = lambda'_p - lambda'_n.
  std::vector<Rational> a;
  for (int p = 1; p <= n; ++p) a.push_back(lp[p - 1] - lp[n - 1] - Rational(nu[p - 1] + 1));
  a.push_back(lp[l - 1] - lp[n - 1] - Rational(nu_l_prime + 1));
  Rational cf(1);
  for (long v : nu) cf *= Rational(v + 1);
  cf *= Rational(nu_l_prime + 1);
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t q = p + 1; q < a.size(); ++q) cf *= a[q] - a[p];
  w.closed_form = cf;
  return w;
}

DesignedDeformation design_deformation(int n, const std::vector<Rational>& lambda,
                                       const std::vector<long>& nu) {
  validate_shape(n, lambda, nu);
  auto lp = lambda_prime(n, lambda);

  std::vector<std::vector<Rational>> sys;
  for (int j = 1; j <= n; ++j) {
    std::vector<Rational> row;
    for (int N = 1; N <= n + 1; ++N) row.push_back(design_r(lp, N, nu[j - 1], j));
    sys.push_back(std::move(row));
  }
  auto kernel = rational_kernel(sys, n + 1);
  if (kernel.size() != 1)
    throw std::logic_error("design_deformation: design system is degenerate");
  std::vector<Rational> w1 = kernel.front();  // w_1..w_{n+1}
  // Normalize to a primitive integer vector with positive first nonzero entry.
  mpz_class lcm = 1;
  for (const auto& c : w1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  for (auto& c : w1) c *= Rational(lcm);
  mpz_class gcd = 0;
  for (const auto& c : w1) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.numerator().get_mpz_t());
  if (gcd != 0)
    for (auto& c : w1) c /= Rational(gcd);
  for (const auto& c : w1) {
    if (c.is_zero()) continue;
    if (c.sign() < 0)
      for (auto& x : w1) x = -x;
    break;
  }

  // Strictness: no smaller shift may satisfy the same linear condition.
  for (int j = 1; j <= n; ++j) {
    for (long mp = 0; mp < nu[j - 1]; ++mp) {
      Rational acc(0);
      for (int N = 1; N <= n + 1; ++N) acc += w1[N - 1] * design_r(lp, N, mp, j);
      if (acc.is_zero())
        throw std::logic_error("design_deformation: strictness failed (internal inconsistency)");
    }
  }

  DesignedDeformation out;
  // Pin w_0 by f(0) = 0.
  RingPtr zr = make_ring({"z"});
  MultiPoly wpoly(zr);
  for (int N = 1; N <= n + 1; ++N) wpoly += MultiPoly::constant(zr, w1[N - 1]) * MultiPoly::var(zr, 0, N);
  MultiPoly f0 = sinh_transform(wpoly, n, SinhDirection::Forward, "z");
  Rational w0 = -(f0.constant_term() / Rational::factorial(n - 1));
  out.w.push_back(w0);
  for (const auto& c : w1) out.w.push_back(c);

  // Recover zeta by inverting f(z) - f(z-1) = d^n(z^n zeta(z)); the map is
  // diagonal on coefficients: r_j = zeta_j (n+j)!/j!.
  MultiPoly wfull = wpoly + MultiPoly::constant(zr, w0);
  MultiPoly f = sinh_transform(wfull, n, SinhDirection::Forward, "z");
  if (!f.constant_term().is_zero())
    throw std::logic_error("design_deformation: f(0) != 0 after pinning w_0");
  MultiPoly r = f - f.shift_var(0, Rational(-1));
  const int deg = r.is_zero() ? -1 : r.degree_in(0);
  for (int j = 0; j <= deg; ++j) {
    Rational rj = r.coeff_of(0, j).as_constant();
    Rational fac(1);
    for (int i = 1; i <= n; ++i) fac *= Rational(j + i);  // (n+j)!/j!
    out.zeta.push_back(rj / fac);
  }
  out.zeta_recovered = true;

  for (int l = 1; l <= n; ++l)
    for (long np = 1; np < nu[l - 1]; ++np)
      out.witness_dets.push_back(design_witness(n, lambda, nu, l, np).det);
  return out;
}

}  // namespace icher
