#include "icher/symfunc.hpp"

#include <stdexcept>

namespace icher {

PolyMatrix identity_matrix(const RingPtr& ring, int dim) {
  PolyMatrix m(dim, std::vector<MultiPoly>(dim, MultiPoly::zero(ring)));
  for (int i = 0; i < dim; ++i) m[i][i] = MultiPoly::constant(ring, Rational(1));
  return m;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.front().size();
  if (a.front().size() != k) throw std::invalid_argument("matmul: shape mismatch");
  const RingPtr& ring = a.front().front().ring();
  PolyMatrix r(n, std::vector<MultiPoly>(m, MultiPoly::zero(ring)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

MultiPoly mat_trace(const PolyMatrix& a) {
  MultiPoly t(a.front().front().ring());
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

std::vector<MultiPoly> char_coeffs_from_matrix(const PolyMatrix& a) {
  const int dim = static_cast<int>(a.size());
  const RingPtr& ring = a.front().front().ring();
  // Power traces p_1..p_dim.
  std::vector<MultiPoly> p(dim + 1, MultiPoly::zero(ring));
  PolyMatrix pw = a;
  for (int k = 1; k <= dim; ++k) {
    p[k] = mat_trace(pw);
    if (k < dim) pw = matmul(pw, a);
  }
  // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<MultiPoly> e(dim + 1, MultiPoly::zero(ring));
  e[0] = MultiPoly::constant(ring, Rational(1));
  for (int k = 1; k <= dim; ++k) {
    MultiPoly acc(ring);
    Rational sign(1);
    for (int i = 1; i <= k; ++i) {
      acc += sign * (e[k - i] * p[i]);
      sign = -sign;
    }
    e[k] = acc * Rational(1, k);
  }
  return e;
}

std::vector<MultiPoly> trace_sym_powers(const std::vector<MultiPoly>& q, int upto) {
  const RingPtr& ring = q.front().ring();
  const int dim = static_cast<int>(q.size()) - 1;
  std::vector<MultiPoly> h(upto + 1, MultiPoly::zero(ring));
  h[0] = MultiPoly::constant(ring, Rational(1));
  for (int j = 1; j <= upto; ++j) {
    MultiPoly acc(ring);
    Rational sign(1);
    for (int i = 1; i <= std::min(j, dim); ++i) {
      acc += sign * (q[i] * h[j - i]);
      sign = -sign;
    }
    h[j] = acc;
  }
  return h;
}

namespace {
void compositions(int j, size_t pos, const std::vector<int>& vars, Monomial& m, MultiPoly& out) {
  if (pos + 1 == vars.size()) {
    m[vars[pos]] = j;
    out.add_term(m, Rational(1));
    m[vars[pos]] = 0;
    return;
  }
  for (int e = 0; e <= j; ++e) {
    m[vars[pos]] = e;
    compositions(j - e, pos + 1, vars, m, out);
  }
  m[vars[pos]] = 0;
}
}  // namespace

MultiPoly complete_homogeneous(const RingPtr& ring, int j, const std::vector<int>& vars) {
  if (j < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
  if (vars.empty()) throw std::invalid_argument("complete_homogeneous: empty variable list");
  MultiPoly out(ring);
  Monomial m(ring->size(), 0);
  compositions(j, 0, vars, m, out);
  return out;
}

Rational complete_homogeneous_at(int j, const std::vector<Rational>& xs) {
  if (j < 0) return Rational(0);
  // h_j via dynamic programming over variables.
  std::vector<Rational> h(j + 1, Rational(0));
  h[0] = Rational(1);
  for (const Rational& x : xs) {
    for (int d = 1; d <= j; ++d) h[d] += x * h[d - 1];
  }
  return h[j];
}

}  // namespace icher
