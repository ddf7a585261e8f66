#include "icher/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace icher {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  // Same degree: lex, earlier variable with higher exponent is larger.
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly::MultiPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_.emplace(Monomial(ring_->size(), 0), c);
}

MultiPoly MultiPoly::var(const RingPtr& ring, const std::string& name, int exp) {
  return var(ring, ring->index(name), exp);
}

MultiPoly MultiPoly::var(const RingPtr& ring, int index, int exp) {
  MultiPoly p(ring);
  Monomial m(ring->size(), 0);
  m.at(index) = exp;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int32_t e) { return e == 0; });
}

Rational MultiPoly::constant_term() const {
  Monomial z(ring_->size(), 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::as_constant() const {
  if (!is_constant()) throw std::domain_error("MultiPoly: not a constant: " + str());
  return constant_term();
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& m = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(m.begin(), m.end(), 0L));
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.at(var)));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("MultiPoly: mixed rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

// Packs monomials of up to 7 active variables (exponents < 256, total degree
// < 256) into a uint64 whose numeric order coincides with grlex.
struct MonoPacker {
  std::vector<int> vars;  // active variable indices, ring order
  int nv_total = 0;
  bool ok = false;

  static MonoPacker for_pair(const MultiPoly& a, const MultiPoly& b) {
    MonoPacker p;
    const int nv = a.ring()->size();
    p.nv_total = nv;
    std::vector<int> maxa(nv, 0), maxb(nv, 0);
    for (const auto& [m, c] : a.terms())
      for (int i = 0; i < nv; ++i) maxa[i] = std::max(maxa[i], static_cast<int>(m[i]));
    for (const auto& [m, c] : b.terms())
      for (int i = 0; i < nv; ++i) maxb[i] = std::max(maxb[i], static_cast<int>(m[i]));
    long total = 0;
    for (int i = 0; i < nv; ++i) {
      int cap = maxa[i] + maxb[i];
      if (cap > 0) p.vars.push_back(i);
      if (cap > 255) return p;
      total += cap;
    }
    if (p.vars.size() > 7 || total > 255) return p;
    p.ok = true;
    return p;
  }

  uint64_t pack(const Monomial& m) const {
    uint64_t key = 0;
    uint64_t tot = 0;
    for (size_t k = 0; k < vars.size(); ++k) {
      uint64_t e = static_cast<uint64_t>(m[vars[k]]);
      tot += e;
      key |= e << (8 * (6 - k));
    }
    return key | (tot << 56);
  }

  Monomial unpack(uint64_t key) const {
    Monomial m(nv_total, 0);
    for (size_t k = 0; k < vars.size(); ++k)
      m[vars[k]] = static_cast<int32_t>((key >> (8 * (6 - k))) & 0xff);
    return m;
  }
};

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly r(a.ring_);
  const int nv = a.ring_->size();
  const size_t work = a.terms_.size() * b.terms_.size();
  if (work > 4096) {
    MonoPacker packer = MonoPacker::for_pair(a, b);
    if (packer.ok) {
      std::unordered_map<uint64_t, Rational> acc;
      acc.reserve(work / 4 + 16);
      std::vector<std::pair<uint64_t, const Rational*>> bt;
      bt.reserve(b.terms_.size());
      for (const auto& [mb, cb] : b.terms_) bt.emplace_back(packer.pack(mb), &cb);
      for (const auto& [ma, ca] : a.terms_) {
        uint64_t ka = packer.pack(ma);
        for (const auto& [kb, cb] : bt) {
          Rational& slot = acc.try_emplace(ka + kb, Rational(0)).first->second;
          slot += ca * (*cb);
        }
      }
      for (const auto& [key, c] : acc) {
        if (!c.is_zero()) r.terms_.emplace(packer.unpack(key), c);
      }
      return r;
    }
  }
  Monomial prod(nv, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < nv; ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly acc = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) == k) {
      Monomial m2 = m;
      m2[var] = 0;
      r.add_term(m2, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::subst(int var, const MultiPoly& value) const {
  check_same_ring(value);
  MultiPoly r(ring_);
  // Memoized powers of the replacement.
  std::vector<MultiPoly> powers{constant(ring_, Rational(1))};
  for (const auto& [m, c] : terms_) {
    int e = m.at(var);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial m2 = m;
    m2[var] = 0;
    MultiPoly base(ring_);
    base.add_term(m2, c);
    r += base * powers[e];
  }
  return r;
}

MultiPoly MultiPoly::subst(const std::string& var, const MultiPoly& value) const {
  return subst(ring_->index(var), value);
}

MultiPoly MultiPoly::shift_var(int var, const Rational& c) const {
  if (c.is_zero()) return *this;
  return subst(var, MultiPoly::var(ring_, var) + constant(ring_, c));
}

MultiPoly MultiPoly::eval_partial(const std::map<int, Rational>& values) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial m2 = m;
    for (const auto& [var, val] : values) {
      int e = m.at(var);
      for (int i = 0; i < e; ++i) coeff *= val;
      m2[var] = 0;
    }
    r.add_term(m2, coeff);
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m.at(var);
    if (e == 0) continue;
    Monomial m2 = m;
    m2[var] = e - 1;
    r.add_term(m2, c * Rational(e));
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_component(int degree) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (std::accumulate(m.begin(), m.end(), 0L) == degree) r.add_term(m, c);
  }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_same_ring(divisor);
  if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  if (is_zero()) return MultiPoly(ring_);
  const int nv = ring_->size();

  if (terms_.size() > 256) {
    MonoPacker packer = MonoPacker::for_pair(*this, divisor);
    if (packer.ok) {
      std::map<uint64_t, Rational, std::greater<>> rem;
      for (const auto& [m, c] : terms_) rem.emplace(packer.pack(m), c);
      std::vector<std::pair<uint64_t, Rational>> div;
      for (auto it = divisor.terms_.rbegin(); it != divisor.terms_.rend(); ++it)
        div.emplace_back(packer.pack(it->first), it->second);
      const uint64_t kd = div.front().first;
      MultiPoly quot(ring_);
      while (!rem.empty()) {
        auto lead = rem.begin();
        const uint64_t kr = lead->first;
        for (size_t k = 0; k < packer.vars.size(); ++k) {
          int shift = 8 * (6 - static_cast<int>(k));
          if (((kr >> shift) & 0xff) < ((kd >> shift) & 0xff))
            throw std::domain_error("MultiPoly: not divisible");
        }
        const uint64_t kq = kr - kd;
        Rational qc = lead->second / div.front().second;
        quot.terms_.emplace(packer.unpack(kq), qc);
        for (const auto& [kt, ct] : div) {
          auto [it, inserted] = rem.try_emplace(kq + kt, Rational(0));
          it->second -= qc * ct;
          if (it->second.is_zero()) rem.erase(it);
        }
      }
      return quot;
    }
  }

  MultiPoly rem = *this;
  MultiPoly quot(ring_);
  const Monomial& dm = divisor.leading_monomial();
  const Rational& dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    Monomial q(nv, 0);
    for (int i = 0; i < nv; ++i) {
      q[i] = rm[i] - dm[i];
      if (q[i] < 0) throw std::domain_error("MultiPoly: not divisible");
    }
    MultiPoly t(ring_);
    t.add_term(q, rem.leading_coeff() / dc);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending grlex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::string f = ring_->name(static_cast<int>(i));
      if (m[i] > 1) f += "^" + std::to_string(m[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace icher
