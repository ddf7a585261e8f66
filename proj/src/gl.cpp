#include "icher/gl.hpp"

#include <stdexcept>

namespace icher {

std::shared_ptr<const GlDeformation> GlDeformation::make(int n,
                                                         const std::vector<ZetaEntry>& zeta) {
  if (n < 1) throw std::invalid_argument("GlDeformation: rank must be >= 1");
  auto d = std::shared_ptr<GlDeformation>(new GlDeformation());
  d->n_ = n;

  std::vector<std::string> names;
  std::vector<std::string> symbols;
  for (const auto& ze : zeta) {
    if (!ze.value) symbols.push_back(ze.symbol);
  }
  for (const auto& s : symbols) names.push_back(s);
  for (int i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  names.push_back("t");
  names.push_back("s");
  d->ring_ = make_ring(names);

  const RingPtr& R = d->ring_;
  for (int i = 1; i <= n; ++i) d->lambda_.push_back(R->index("l" + std::to_string(i)));
  d->e_.assign(n, std::vector<int>(n, -1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      d->e_[i - 1][j - 1] = R->index("e" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= n; ++i) d->x_.push_back(R->index("x" + std::to_string(i)));
  for (int i = 1; i <= n; ++i) d->y_.push_back(R->index("y" + std::to_string(i)));
  d->z_ = R->index("z");
  d->t_ = R->index("t");
  d->s_ = R->index("s");

  for (const auto& ze : zeta) {
    if (ze.value)
      d->zeta_.push_back(MultiPoly::constant(R, *ze.value));
    else
      d->zeta_.push_back(MultiPoly::var(R, ze.symbol));
  }
  // Trim trailing zero coefficients so m_ is the honest degree.
  while (!d->zeta_.empty() && d->zeta_.back().is_zero()) d->zeta_.pop_back();
  d->m_ = static_cast<int>(d->zeta_.size()) - 1;

  d->entry_matrix_.assign(n, std::vector<MultiPoly>(n, MultiPoly::zero(R)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d->entry_matrix_[i - 1][j - 1] = MultiPoly::var(R, d->e_var(i, j));

  const int maxpow = std::max(d->m_, 0);
  d->entry_powers_.push_back(identity_matrix(R, n));
  for (int k = 1; k <= maxpow; ++k)
    d->entry_powers_.push_back(matmul(d->entry_powers_.back(), d->entry_matrix_));

  d->char_coeffs_ = char_coeffs_from_matrix(d->entry_matrix_);
  // Enough symmetric traces for the pairing series, the Casimir (degree m+1)
  // and the bridge identity at small k.
  d->sym_traces_ = trace_sym_powers(d->char_coeffs_, std::max(d->m_ + 2, n + 4));
  return d;
}

std::shared_ptr<const GlDeformation> GlDeformation::make_numeric(
    int n, const std::vector<Rational>& zeta) {
  std::vector<ZetaEntry> zs;
  for (const auto& v : zeta) zs.push_back(ZetaEntry::numeric(v));
  return make(n, zs);
}

std::shared_ptr<const GlDeformation> GlDeformation::make_symbolic(int n, int m) {
  std::vector<ZetaEntry> zs;
  for (int j = 0; j <= m; ++j) zs.push_back(ZetaEntry::symbolic("zeta" + std::to_string(j)));
  return make(n, zs);
}

MultiPoly GlDeformation::basis_pairing(int l, int i, int j) const {
  // Coefficient of tau^l in the resolvent-times-inverse-determinant series,
  // read at entry (i, j); the entry choice encodes the trace-form
  // identification of functions on gl_n with S(gl_n).
  if (l >= static_cast<int>(sym_traces_.size()) || l >= static_cast<int>(entry_powers_.size()))
    throw std::invalid_argument("basis_pairing: order too large");
  MultiPoly r(ring_);
  for (int k = 0; k <= l; ++k) r += entry_powers_[k][i - 1][j - 1] * sym_traces_[l - k];
  return r;
}

MultiPoly GlDeformation::pair_poly(int i, int j) const {
  MultiPoly acc(ring_);
  for (int l = 0; l <= m_; ++l) acc += zeta_[l] * basis_pairing(l, i, j);
  return acc;
}

}  // namespace icher
