#include "icher/shapovalov.hpp"

#include <stdexcept>

#include "icher/parallel.hpp"

namespace icher {

GramMatrix gram_matrix(const PBWEngine& eng, const std::vector<int>& nu) {
  const GlPtr& d = eng.context();
  GramMatrix gm;
  gm.nu = nu;
  gm.basis = weight_space_basis(eng.order(), nu, d->n());
  const size_t k = gm.basis.size();
  gm.entries.assign(k, std::vector<MultiPoly>(k, MultiPoly::zero(d->ring())));

  std::vector<PBWElement> sig(k);
  for (size_t i = 0; i < k; ++i)
    sig[i] = eng.sigma(PBWElement::monomial(d, gm.basis[i], d->constant(Rational(1))));

  // Upper triangle in parallel; the form is symmetric.
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) cells.emplace_back(i, j);
  parallel_for(cells.size(), [&](size_t c) {
    auto [i, j] = cells[c];
    PBWElement fj = PBWElement::monomial(d, gm.basis[j], d->constant(Rational(1)));
    gm.entries[i][j] = eng.hc_project(eng.mul(sig[i], fj));
  });
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < i; ++j) gm.entries[i][j] = gm.entries[j][i];
  return gm;
}

MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("bareiss_det: empty matrix");
  const RingPtr& R = m.front().front().ring();
  if (n == 1) return m[0][0];
  Rational sign(1);
  MultiPoly prev = MultiPoly::constant(R, Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly::zero(R);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = MultiPoly::zero(R);
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * sign;
}

MultiPoly laplace_det(const std::vector<std::vector<MultiPoly>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("laplace_det: empty matrix");
  const RingPtr& R = m.front().front().ring();
  // minors[mask] = det of rows 0..popcount(mask)-1, columns in mask.
  std::map<uint32_t, MultiPoly> cur;
  cur.emplace(0u, MultiPoly::constant(R, Rational(1)));
  for (size_t r = 0; r < n; ++r) {
    std::map<uint32_t, MultiPoly> next;
    for (const auto& [mask, minor] : cur) {
      if (minor.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        uint32_t bit = 1u << j;
        if (mask & bit) continue;
        if (m[r][j].is_zero()) continue;
        // Sign: parity of the number of chosen columns above j.
        int above = __builtin_popcount(mask >> (j + 1));
        MultiPoly term = m[r][j] * minor;
        if (above % 2) term = -term;
        auto [it, inserted] = next.try_emplace(mask | bit, MultiPoly::zero(R));
        it->second += term;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find((1u << n) - 1);
  return it == cur.end() ? MultiPoly::zero(R) : it->second;
}

MultiPoly predicted_shapovalov_det(const GlPtr& d, const MultiPoly& P,
                                   const std::vector<int>& nu) {
  const RingPtr& R = d->ring();
  const int n = d->n();
  MultiPoly det = MultiPoly::constant(R, Rational(1));
  // V-weight factors (P(lambda) - P(lambda - k alpha))^tau(nu - k alpha).
  for (int a = 1; a <= n; ++a) {
    for (int k = 1;; ++k) {
      std::vector<int> shifted = nu;
      shifted[a - 1] -= k;
      long t = kostant_tau(shifted, n);
      if (t == 0) break;
      MultiPoly pk = P.shift_var(d->lambda_var(a), Rational(-k));
      det *= (P - pk).pow(static_cast<int>(t));
    }
  }
  // gl root factors ((lambda + rho, alpha) - k)^tau(nu - k alpha).
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1;; ++k) {
        std::vector<int> shifted = nu;
        shifted[i - 1] -= k;
        shifted[j - 1] += k;
        long t = kostant_tau(shifted, n);
        if (t == 0) break;
        MultiPoly lin = MultiPoly::var(R, d->lambda_var(i)) - MultiPoly::var(R, d->lambda_var(j)) +
                        MultiPoly::constant(R, Rational(j - i) - Rational(k));
        det *= lin.pow(static_cast<int>(t));
      }
    }
  }
  return det;
}

DetComparison compare_shapovalov(const PBWEngine& eng, const MultiPoly& P,
                                 const std::vector<int>& nu) {
  DetComparison out;
  GramMatrix gm = gram_matrix(eng, nu);
  out.tau = gm.tau();
  out.det = gm.tau() == 0 ? MultiPoly::constant(eng.context()->ring(), Rational(1))
                          : laplace_det(gm.entries);
  out.predicted = predicted_shapovalov_det(eng.context(), P, nu);
  if (out.det.is_zero() && out.predicted.is_zero()) {
    out.ratio = Rational(0);
    out.equal = true;
    return out;
  }
  if (out.det.is_zero() || out.predicted.is_zero()) {
    out.ratio = Rational(0);
    out.equal = false;
    return out;
  }
  out.ratio = out.det.leading_coeff() / out.predicted.leading_coeff();
  out.equal = (out.det == out.predicted * out.ratio);
  return out;
}

VermaVector verma_apply(const PBWEngine& eng, const Generator& g, const VermaVector& u,
                        const std::vector<Rational>& lambda) {
  const GenOrder& ord = eng.order();
  VermaVector out;
  for (const auto& [mono, c] : u) {
    std::vector<Generator> word;
    word.push_back(g);
    for (const auto& l : eng.letters(mono)) word.push_back(l);
    PBWElement el = eng.normal_order(word);
    for (const auto& [m, coeff] : el.terms()) {
      Rational val = c * coeff.as_constant();
      PBWMonomial rep{std::vector<int16_t>(ord.count(), 0)};
      bool kill = false;
      for (int idx = 0; idx < ord.count() && !kill; ++idx) {
        int e = m.exp[idx];
        if (e == 0) continue;
        const Generator& gen = ord.gen(idx);
        if (gen.kind == GenKind::Y || (gen.kind == GenKind::E && gen.i < gen.j)) {
          kill = true;  // annihilates the highest-weight vector
        } else if (gen.kind == GenKind::E && gen.i == gen.j) {
          for (int r = 0; r < e; ++r) val *= lambda[gen.i - 1];
        } else {
          rep.exp[idx] = static_cast<int16_t>(e);
        }
      }
      if (kill || val.is_zero()) continue;
      auto [it, inserted] = out.emplace(rep, val);
      if (!inserted) {
        it->second += val;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

bool is_critical_vector(const PBWEngine& eng, const VermaVector& u,
                        const std::vector<Rational>& lambda) {
  const int n = eng.context()->n();
  for (int i = 1; i < n; ++i)
    if (!verma_apply(eng, Generator::E(i, i + 1), u, lambda).empty()) return false;
  for (int i = 1; i <= n; ++i)
    if (!verma_apply(eng, Generator::Y(i), u, lambda).empty()) return false;
  return true;
}

std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m,
                                                   int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = Rational(1);
    for (size_t pr = 0; pr < pivot_col.size(); ++pr) v[pivot_col[pr]] = -m[pr][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

CriticalReport critical_vectors(const PBWEngine& eng, const std::vector<int>& nu,
                                const std::vector<Rational>& lambda) {
  const GlPtr& d = eng.context();
  GramMatrix gm = gram_matrix(eng, nu);
  CriticalReport rep;
  rep.basis = gm.basis;
  const size_t k = gm.basis.size();
  std::map<int, Rational> lam;
  for (int i = 1; i <= d->n(); ++i) lam[d->lambda_var(i)] = lambda[i - 1];
  std::vector<std::vector<Rational>> numeric(k, std::vector<Rational>(k, Rational(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      numeric[i][j] = gm.entries[i][j].eval_partial(lam).as_constant();
  rep.kernel = rational_kernel(std::move(numeric), static_cast<int>(k));
  for (const auto& v : rep.kernel) {
    VermaVector u;
    for (size_t j = 0; j < k; ++j)
      if (!v[j].is_zero()) u.emplace(gm.basis[j], v[j]);
    if (!is_critical_vector(eng, u, lambda)) rep.all_critical = false;
  }
  return rep;
}

}  // namespace icher
