#include "icher/transforms.hpp"

#include <stdexcept>

namespace icher {

MultiPoly discrete_antiderivative(const MultiPoly& r, const std::string& zvar) {
  const RingPtr& ring = r.ring();
  const int z = ring->index(zvar);
  MultiPoly rem = r;
  MultiPoly f(ring);
  while (!rem.is_zero()) {
    int d = rem.degree_in(z);
    MultiPoly lead = rem.coeff_of(z, d);
    // Candidate term c z^(d+1) with Delta(z^(d+1)) having leading coeff d+1.
    MultiPoly term = lead * Rational(1, d + 1) * MultiPoly::var(ring, z, d + 1);
    f += term;
    MultiPoly delta = term - term.shift_var(z, Rational(-1));
    rem -= delta;
    if (!rem.is_zero() && rem.degree_in(z) >= d && rem.coeff_of(z, d) == lead)
      throw std::logic_error("discrete_antiderivative: no progress");
  }
  return f;
}

namespace {

MultiPoly sinh_forward(const MultiPoly& w, int n, int z) {
  const RingPtr& ring = w.ring();
  // (e^{d/2} - e^{-d/2})^(n-1) applied to p(z) = z^(n-1) w(z):
  // sum_r (-1)^r C(n-1, r) p(z + (n-1-2r)/2).
  MultiPoly p = w * MultiPoly::var(ring, z).pow(n - 1);
  MultiPoly f(ring);
  for (int r = 0; r <= n - 1; ++r) {
    Rational c = Rational::binomial(n - 1, r);
    if (r % 2) c = -c;
    f += c * p.shift_var(z, Rational(n - 1 - 2 * r, 2));
  }
  return f;
}

}  // namespace

MultiPoly sinh_transform(const MultiPoly& p, int n, SinhDirection dir, const std::string& zvar) {
  if (n < 1) throw std::invalid_argument("sinh_transform: rank must be positive");
  const RingPtr& ring = p.ring();
  const int z = ring->index(zvar);
  if (dir == SinhDirection::Forward) return sinh_forward(p, n, z);

  // Inverse: the operator maps z^d (times parameters) to a degree-d polynomial
  // with leading coefficient (d+1)(d+2)...(d+n-1) > 0, so solve top-down.
  MultiPoly rem = p;
  MultiPoly w(ring);
  while (!rem.is_zero()) {
    int d = rem.degree_in(z);
    Rational lead(1);
    for (int i = 1; i <= n - 1; ++i) lead *= Rational(d + i);
    MultiPoly term = rem.coeff_of(z, d) * (Rational(1) / lead) * MultiPoly::var(ring, z, d);
    w += term;
    rem -= sinh_forward(term, n, z);
    if (!rem.is_zero() && rem.degree_in(z) >= d && !rem.coeff_of(z, d).is_zero())
      throw std::domain_error("sinh_transform: no polynomial solution");
  }
  return w;
}

}  // namespace icher
