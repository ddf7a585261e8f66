#include "icher/poisson_gl.hpp"

#include <stdexcept>

#include "icher/laurent.hpp"

namespace icher {

GlPoisson::GlPoisson(GlPtr d) : d_(std::move(d)) {
  build_table([this](int i, int j) { return d_->pair_poly(i, j); });
}

GlPoisson::GlPoisson(GlPtr d, const PairFn& pair) : d_(std::move(d)) { build_table(pair); }

void GlPoisson::build_table(const PairFn& pair) {
  const int n = d_->n();
  const RingPtr& R = d_->ring();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gen_vars_.push_back(d_->e_var(i, j));
  for (int i = 1; i <= n; ++i) gen_vars_.push_back(d_->x_var(i));
  for (int i = 1; i <= n; ++i) gen_vars_.push_back(d_->y_var(i));

  auto kind = [&](int var, int& a, int& b) -> char {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (d_->e_var(i, j) == var) {
          a = i;
          b = j;
          return 'e';
        }
    for (int i = 1; i <= n; ++i)
      if (d_->x_var(i) == var) {
        a = i;
        return 'x';
      }
    for (int i = 1; i <= n; ++i)
      if (d_->y_var(i) == var) {
        a = i;
        return 'y';
      }
    throw std::logic_error("GlPoisson: unknown generator variable");
  };

  auto evar = [&](int i, int j) { return MultiPoly::var(R, d_->e_var(i, j)); };
  auto xvar = [&](int i) { return MultiPoly::var(R, d_->x_var(i)); };
  auto yvar = [&](int i) { return MultiPoly::var(R, d_->y_var(i)); };

  for (size_t ui = 0; ui < gen_vars_.size(); ++ui) {
    for (size_t vi = ui + 1; vi < gen_vars_.size(); ++vi) {
      int u = gen_vars_[ui], v = gen_vars_[vi];
      int a = 0, b = 0, c = 0, e = 0;
      char ku = kind(u, a, b), kv = kind(v, c, e);
      MultiPoly br(R);
      if (ku == 'e' && kv == 'e') {
        // {e_ab, e_ce} = d_bc e_ae - d_ea e_cb
        if (b == c) br += evar(a, e);
        if (e == a) br -= evar(c, b);
      } else if (ku == 'e' && kv == 'x') {
        if (a == c) br -= xvar(b);  // {e_ab, x_c} = -d_ac x_b
      } else if (ku == 'e' && kv == 'y') {
        if (b == c) br += yvar(a);  // {e_ab, y_c} = d_bc y_a
      } else if (ku == 'x' && kv == 'y') {
        br = -pair(c, a);  // {x_a, y_c} = -{y_c, x_a}
      }
      // x-x and y-y commute.
      if (!br.is_zero()) table_.emplace(std::make_pair(u, v), std::move(br));
    }
  }
}

MultiPoly GlPoisson::bracket(const MultiPoly& a, const MultiPoly& b) const {
  const RingPtr& R = d_->ring();
  MultiPoly acc(R);
  for (int u : gen_vars_) {
    MultiPoly da = a.derivative(u);
    if (da.is_zero()) continue;
    for (int v : gen_vars_) {
      if (u == v) continue;
      MultiPoly db = b.derivative(v);
      if (db.is_zero()) continue;
      auto it = table_.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
      if (it == table_.end()) continue;
      MultiPoly term = da * db * it->second;
      if (u < v)
        acc += term;
      else
        acc -= term;
    }
  }
  return acc;
}

MultiPoly GlPoisson::tau(int k) const {
  if (k < 1 || k > d_->n()) throw std::invalid_argument("tau: k out of range");
  const RingPtr& R = d_->ring();
  MultiPoly acc(R);
  for (int i = 1; i <= d_->n(); ++i)
    acc += MultiPoly::var(R, d_->x_var(i)) *
           bracket(d_->char_coeffs()[k], MultiPoly::var(R, d_->y_var(i)));
  return acc;
}

std::vector<MultiPoly> GlPoisson::c_series() const {
  const RingPtr& R = d_->ring();
  const int n = d_->n();
  const int m = d_->m();
  std::vector<MultiPoly> out(n, MultiPoly::zero(R));
  if (m < 0) return out;

  const int order = m + n + 2;
  // zeta(z^-1) as a Laurent polynomial in z.
  MultiPoly zpoly(R);
  for (int l = 0; l <= m; ++l) zpoly += d_->zeta()[l] * MultiPoly::var(R, d_->z_var(), l);
  LaurentSeries zinv = LaurentSeries::from_poly_inverted_var(zpoly, "z", order);
  // det(1-zA)^-1.
  MultiPoly detp(R);
  Rational sign(1);
  for (size_t k = 0; k < d_->char_coeffs().size(); ++k) {
    detp += d_->char_coeffs()[k] * sign * MultiPoly::var(R, d_->z_var(), static_cast<int>(k));
    sign = -sign;
  }
  LaurentSeries detinv = LaurentSeries::from_poly(detp, "z", order).inverse(order);
  // 1/(1 - z/t) = sum_r z^r t^-r, encoded with s = t^-1.
  MultiPoly geo(R);
  for (int r = 0; r <= order; ++r)
    geo += MultiPoly::var(R, d_->s_var(), r) * MultiPoly::var(R, d_->z_var(), r);
  LaurentSeries geos = LaurentSeries::from_poly(geo, "z", order);

  MultiPoly core = (zinv * detinv * geos).coeff(0);
  // Multiply by det(1-tA) and flatten t^a s^b -> t^(a-b).
  MultiPoly dett(R);
  sign = Rational(1);
  for (size_t k = 0; k < d_->char_coeffs().size(); ++k) {
    dett += d_->char_coeffs()[k] * sign * MultiPoly::var(R, d_->t_var(), static_cast<int>(k));
    sign = -sign;
  }
  MultiPoly full = core * dett;
  std::map<int, MultiPoly> by_t;
  const int tv = d_->t_var(), sv = d_->s_var();
  for (const auto& [mono, c] : full.terms()) {
    int key = mono[tv] - mono[sv];
    Monomial m2 = mono;
    m2[tv] = 0;
    m2[sv] = 0;
    auto it = by_t.emplace(key, MultiPoly::zero(R)).first;
    it->second.add_term(m2, c);
  }
  for (int i = 1; i <= n; ++i) {
    auto it = by_t.find(i);
    if (it == by_t.end()) continue;
    out[i - 1] = (i % 2) ? -it->second : it->second;  // (-1)^i c_i = [t^i]
  }
  return out;
}

CenterCertificate GlPoisson::verify_center() const {
  CenterCertificate cert;
  auto cs = c_series();
  for (int k = 1; k <= d_->n(); ++k) {
    MultiPoly central = tau(k) + cs[k - 1];
    for (int g : gen_vars_) {
      MultiPoly res = bracket(central, MultiPoly::var(d_->ring(), g));
      if (!res.is_zero()) {
        cert.ok = false;
        cert.failures.push_back({k, generator_name(g), res});
      }
    }
  }
  return cert;
}

CenterCertificate GlPoisson::pair_vs_trace_derivative() const {
  CenterCertificate cert;
  for (int l = 0; l <= std::max(d_->m(), 0); ++l) {
    if (l + 1 >= static_cast<int>(d_->sym_traces().size())) break;
    for (int i = 1; i <= d_->n(); ++i) {
      for (int j = 1; j <= d_->n(); ++j) {
        MultiPoly lhs = d_->basis_pairing(l, i, j);
        MultiPoly rhs = d_->sym_traces()[l + 1].derivative(d_->e_var(j, i));
        if (lhs != rhs) {
          cert.ok = false;
          cert.failures.push_back(
              {l, "r" + std::to_string(l) + "(y" + std::to_string(i) + ",x" + std::to_string(j) + ")",
               lhs - rhs});
        }
      }
    }
  }
  return cert;
}

}  // namespace icher
