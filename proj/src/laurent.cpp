#include "icher/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace icher {

LaurentSeries::LaurentSeries(std::string var, int low, std::vector<MultiPoly> coeffs)
    : var_(std::move(var)), low_(low), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("LaurentSeries: empty coefficient window");
  ring_ = coeffs_.front().ring();
  for (const auto& c : coeffs_) {
    if (c.ring() != ring_) throw std::invalid_argument("LaurentSeries: mixed rings");
    if (c.depends_on(ring_->index(var_)))
      throw std::invalid_argument("LaurentSeries: coefficient depends on the series variable");
  }
  normalize();
}

void LaurentSeries::normalize() {
  // Drop leading zero coefficients so `low` is informative; keep at least one.
  while (coeffs_.size() > 1 && coeffs_.front().is_zero()) {
    coeffs_.erase(coeffs_.begin());
    ++low_;
  }
}

LaurentSeries LaurentSeries::zero(const RingPtr& ring, std::string var, int order) {
  return LaurentSeries(std::move(var), order, {MultiPoly::zero(ring)});
}

LaurentSeries LaurentSeries::from_poly(const MultiPoly& p, const std::string& ringvar, int order) {
  const RingPtr& ring = p.ring();
  int zi = ring->index(ringvar);
  int deg = p.degree_in(zi);
  if (deg > order) throw std::invalid_argument("LaurentSeries: polynomial degree beyond order");
  std::vector<MultiPoly> cs;
  cs.reserve(order + 1);
  for (int k = 0; k <= order; ++k) cs.push_back(p.coeff_of(zi, k));
  return LaurentSeries(ringvar, 0, std::move(cs));
}

LaurentSeries LaurentSeries::from_poly_inverted_var(const MultiPoly& p, const std::string& ringvar,
                                                    int order) {
  const RingPtr& ring = p.ring();
  int zi = ring->index(ringvar);
  int deg = std::max(p.degree_in(zi), 0);
  std::vector<MultiPoly> cs;
  for (int k = -deg; k <= order; ++k)
    cs.push_back(k <= 0 ? p.coeff_of(zi, -k) : MultiPoly::zero(ring));
  return LaurentSeries(ringvar, -deg, std::move(cs));
}

MultiPoly LaurentSeries::coeff(int k) const {
  if (k > order())
    throw std::domain_error("LaurentSeries: coefficient " + std::to_string(k) +
                            " beyond truncation order " + std::to_string(order()));
  if (k < low_) return MultiPoly::zero(ring_);
  return coeffs_[k - low_];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (var_ != o.var_) throw std::invalid_argument("LaurentSeries: mixed variables");
  int lo = std::min(low_, o.low_);
  int hi = std::min(order(), o.order());
  if (hi < lo) throw std::domain_error("LaurentSeries: empty window after addition");
  std::vector<MultiPoly> cs;
  for (int k = lo; k <= hi; ++k) cs.push_back(coeff(k) + o.coeff(k));
  return LaurentSeries(var_, lo, std::move(cs));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (var_ != o.var_) throw std::invalid_argument("LaurentSeries: mixed variables");
  int lo = low_ + o.low_;
  // Coefficient k of the product needs all pairs (i, k-i) with i in [low, N1]
  // and k-i in [o.low, N2]; it is fully known iff k <= min(N1 + o.low, N2 + low).
  int hi = std::min(order() + o.low_, o.order() + low_);
  if (hi < lo) throw std::domain_error("LaurentSeries: empty window after multiplication");
  std::vector<MultiPoly> cs(hi - lo + 1, MultiPoly::zero(ring_));
  for (int i = low_; i <= order(); ++i) {
    if (coeffs_[i - low_].is_zero()) continue;
    for (int j = o.low_; j <= o.order(); ++j) {
      int k = i + j;
      if (k < lo || k > hi) continue;
      cs[k - lo] += coeffs_[i - low_] * o.coeffs_[j - o.low_];
    }
  }
  return LaurentSeries(var_, lo, std::move(cs));
}

LaurentSeries LaurentSeries::scaled(const MultiPoly& c) const {
  std::vector<MultiPoly> cs = coeffs_;
  for (auto& x : cs) x = x * c;
  return LaurentSeries(var_, low_, std::move(cs));
}

LaurentSeries LaurentSeries::shifted(int k) const {
  return LaurentSeries(var_, low_ + k, coeffs_);
}

LaurentSeries LaurentSeries::inverse(int order) const {
  if (low_ != 0 || !coeffs_.front().is_constant() || coeffs_.front().is_zero())
    throw std::domain_error("LaurentSeries: inverse needs a unit constant term at exponent 0");
  if (order > this->order())
    throw std::domain_error("LaurentSeries: insufficient truncation for inverse");
  Rational c0 = coeffs_.front().as_constant();
  Rational c0inv = Rational(1) / c0;
  std::vector<MultiPoly> inv(order + 1, MultiPoly::zero(ring_));
  inv[0] = MultiPoly::constant(ring_, c0inv);
  for (int k = 1; k <= order; ++k) {
    MultiPoly acc(ring_);
    for (int i = 1; i <= k; ++i) acc += coeff(i) * inv[k - i];
    inv[k] = -(acc * c0inv);
  }
  return LaurentSeries(var_, 0, std::move(inv));
}

}  // namespace icher
