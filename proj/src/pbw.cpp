#include "icher/pbw.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icher {

GenOrder::GenOrder(int n) : n_(n) {
  for (int i = 1; i <= n; ++i) gens_.push_back(Generator::X(i));
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) gens_.push_back(Generator::E(i, j));
  for (int i = 1; i <= n; ++i) gens_.push_back(Generator::E(i, i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens_.push_back(Generator::E(i, j));
  for (int i = 1; i <= n; ++i) gens_.push_back(Generator::Y(i));

  for (const auto& g : gens_) {
    std::vector<int> w(n, 0);
    switch (g.kind) {
      case GenKind::X: w[g.i - 1] = -1; break;
      case GenKind::Y: w[g.i - 1] = 1; break;
      case GenKind::E:
        w[g.i - 1] += 1;
        w[g.j - 1] -= 1;
        break;
    }
    weights_.push_back(std::move(w));
  }
}

int GenOrder::index(const Generator& g) const {
  switch (g.kind) {
    case GenKind::X: return g.i - 1;
    case GenKind::Y: return count() - n_ + (g.i - 1);
    case GenKind::E: {
      if (g.i > g.j) {
        // Lower block starts at n; pairs (i, j), i > j in lex order.
        int off = 0;
        for (int i = 2; i < g.i; ++i) off += i - 1;
        return n_ + off + (g.j - 1);
      }
      int lower = n_ * (n_ - 1) / 2;
      if (g.i == g.j) return n_ + lower + (g.i - 1);
      int off = 0;
      for (int i = 1; i < g.i; ++i) off += n_ - i;
      return n_ + lower + n_ + off + (g.j - g.i - 1);
    }
  }
  throw std::logic_error("GenOrder::index: bad generator");
}

int PBWMonomial::degree() const {
  return static_cast<int>(std::accumulate(exp.begin(), exp.end(), 0L));
}

bool PBWMonomial::operator<(const PBWMonomial& o) const {
  long da = degree(), db = o.degree();
  if (da != db) return da < db;
  return exp < o.exp;
}

PBWElement PBWElement::one(const GlPtr& d) {
  PBWElement e(d);
  // Determined lazily: the empty monomial needs the generator count.
  GenOrder ord(d->n());
  PBWMonomial m{std::vector<int16_t>(ord.count(), 0)};
  e.terms_.emplace(std::move(m), MultiPoly::constant(d->ring(), Rational(1)));
  return e;
}

PBWElement PBWElement::generator(const GlPtr& d, const Generator& g) {
  PBWElement e(d);
  GenOrder ord(d->n());
  PBWMonomial m{std::vector<int16_t>(ord.count(), 0)};
  m.exp[ord.index(g)] = 1;
  e.terms_.emplace(std::move(m), MultiPoly::constant(d->ring(), Rational(1)));
  return e;
}

PBWElement PBWElement::monomial(const GlPtr& d, const PBWMonomial& m, const MultiPoly& coeff) {
  PBWElement e(d);
  e.add_term(m, coeff);
  return e;
}

void PBWElement::add_term(const PBWMonomial& m, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PBWElement PBWElement::operator-() const {
  PBWElement r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PBWElement PBWElement::scaled(const MultiPoly& c) const {
  PBWElement r(d_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

PBWElement PBWElement::scaled(const Rational& c) const {
  PBWElement r(d_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

std::string PBWElement::str() const {
  if (terms_.empty()) return "0";
  GenOrder ord(d_->n());
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int idx = 0; idx < ord.count(); ++idx) {
      int e = it->first.exp[idx];
      if (e == 0) continue;
      const Generator& g = ord.gen(idx);
      os << " ";
      switch (g.kind) {
        case GenKind::X: os << "x" << g.i; break;
        case GenKind::Y: os << "y" << g.i; break;
        case GenKind::E: os << "e" << g.i << g.j; break;
      }
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

PBWEngine::PBWEngine(GlPtr d) : d_(std::move(d)), order_(d_->n()) {}

std::vector<Generator> PBWEngine::letters(const PBWMonomial& m) const {
  std::vector<Generator> out;
  for (int idx = 0; idx < order_.count(); ++idx)
    for (int k = 0; k < m.exp[idx]; ++k) out.push_back(order_.gen(idx));
  return out;
}

void PBWEngine::bracket_terms(
    int g1, int g2, std::vector<std::pair<std::vector<int>, MultiPoly>>& out) const {
  const Generator& a = order_.gen(g1);
  const Generator& b = order_.gen(g2);
  const RingPtr& R = d_->ring();
  auto unit = [&](const Rational& c) { return MultiPoly::constant(R, c); };

  if (a.kind == GenKind::X && b.kind == GenKind::X) return;
  if (a.kind == GenKind::Y && b.kind == GenKind::Y) return;

  if (a.kind == GenKind::E && b.kind == GenKind::E) {
    // [e_ab, e_cd] = d_bc e_ad - d_da e_cb
    if (a.j == b.i) out.push_back({{order_.index(Generator::E(a.i, b.j))}, unit(Rational(1))});
    if (b.j == a.i) out.push_back({{order_.index(Generator::E(b.i, a.j))}, unit(Rational(-1))});
    return;
  }
  if (a.kind == GenKind::E && b.kind == GenKind::X) {
    // [e_ij, x_k] = -d_ik x_j
    if (a.i == b.i) out.push_back({{order_.index(Generator::X(a.j))}, unit(Rational(-1))});
    return;
  }
  if (a.kind == GenKind::Y && b.kind == GenKind::E) {
    // y e = e y - [e, y];  [e_ij, y_k] = d_jk y_i
    if (b.j == a.i) out.push_back({{order_.index(Generator::Y(b.i))}, unit(Rational(-1))});
    return;
  }
  if (a.kind == GenKind::Y && b.kind == GenKind::X) {
    // y_i x_j = x_j y_i + zeta(y_i, x_j)
    const PBWElement& zp = zeta_pair(a.i, b.i);
    for (const auto& [m, c] : zp.terms()) {
      std::vector<int> ws;
      for (int idx = 0; idx < order_.count(); ++idx)
        for (int k = 0; k < m.exp[idx]; ++k) ws.push_back(idx);
      out.push_back({std::move(ws), c});
    }
    return;
  }
  throw std::logic_error("bracket_terms: pair cannot be out of order");
}

PBWElement PBWEngine::mul_letter_uncached(const PBWMonomial& a, int gidx) const {
  // Worklist rewriting of the word letters(a) ++ [g]. Every derived word is
  // strictly smaller in the (xy-degree, length, inversions) measure, and the
  // cascade from a single appended letter stays small.
  std::vector<int> start;
  for (int idx = 0; idx < order_.count(); ++idx)
    for (int k = 0; k < a.exp[idx]; ++k) start.push_back(idx);
  start.push_back(gidx);

  PBWElement result(d_);
  std::vector<std::pair<std::vector<int>, MultiPoly>> stack;
  stack.emplace_back(std::move(start), MultiPoly::constant(d_->ring(), Rational(1)));
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    if (c.is_zero()) continue;
    size_t p = 0;
    bool sorted = true;
    for (; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        sorted = false;
        break;
      }
    }
    if (sorted) {
      PBWMonomial m{std::vector<int16_t>(order_.count(), 0)};
      for (int idx : w) ++m.exp[idx];
      result.add_term(m, c);
      continue;
    }
    std::vector<std::pair<std::vector<int>, MultiPoly>> br;
    bracket_terms(w[p], w[p + 1], br);
    for (auto& [mid, bc] : br) {
      std::vector<int> nw;
      nw.reserve(w.size() - 2 + mid.size());
      nw.insert(nw.end(), w.begin(), w.begin() + p);
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), w.begin() + p + 2, w.end());
      stack.emplace_back(std::move(nw), c * bc);
    }
    std::swap(w[p], w[p + 1]);
    stack.emplace_back(std::move(w), std::move(c));
  }
  return result;
}

PBWElement PBWEngine::mul_letter(const PBWMonomial& a, int gidx) const {
  {
    std::lock_guard<std::mutex> lk(letter_mutex_);
    auto it = letter_cache_.find({a, gidx});
    if (it != letter_cache_.end()) return it->second;
  }
  // Computed outside the lock: the rewrite may recurse into zeta_pair and
  // back into mul_letter for shorter words. Racing duplicates are identical.
  PBWElement r = mul_letter_uncached(a, gidx);
  std::lock_guard<std::mutex> lk(letter_mutex_);
  return letter_cache_.emplace(std::make_pair(a, gidx), std::move(r)).first->second;
}

PBWElement PBWEngine::normal_order(const std::vector<Generator>& word,
                                   const MultiPoly& coeff) const {
  PBWMonomial empty{std::vector<int16_t>(order_.count(), 0)};
  PBWElement acc = PBWElement::monomial(d_, empty, coeff);
  for (const auto& g : word) {
    int gidx = order_.index(g);
    PBWElement next(d_);
    for (const auto& [m, c] : acc.terms()) next += mul_letter(m, gidx).scaled(c);
    acc = std::move(next);
  }
  return acc;
}

PBWElement PBWEngine::normal_order(const std::vector<Generator>& word) const {
  return normal_order(word, MultiPoly::constant(d_->ring(), Rational(1)));
}

PBWElement PBWEngine::mul(const PBWElement& a, const PBWElement& b) const {
  PBWElement r(d_);
  for (const auto& [mb, cb] : b.terms()) {
    PBWElement acc(d_);
    for (const auto& [ma, ca] : a.terms()) acc.add_term(ma, ca * cb);
    for (int idx = 0; idx < order_.count(); ++idx) {
      for (int k = 0; k < mb.exp[idx]; ++k) {
        PBWElement next(d_);
        for (const auto& [m, c] : acc.terms()) next += mul_letter(m, idx).scaled(c);
        acc = std::move(next);
      }
    }
    r += acc;
  }
  return r;
}

PBWElement PBWEngine::commutator(const PBWElement& a, const PBWElement& b) const {
  return mul(a, b) - mul(b, a);
}

const PBWElement& PBWEngine::zeta_pair(int i, int j) const {
  {
    std::lock_guard<std::mutex> lk(pair_mutex_);
    auto it = pair_cache_.find({i, j});
    if (it != pair_cache_.end()) return it->second;
  }
  PBWElement acc(d_);
  for (int l = 0; l <= d_->m(); ++l)
    acc += symmetrize(d_->basis_pairing(l, i, j)).scaled(d_->zeta()[l]);
  std::lock_guard<std::mutex> lk(pair_mutex_);
  return pair_cache_.emplace(std::make_pair(i, j), std::move(acc)).first->second;
}

PBWElement PBWEngine::symmetrize(const MultiPoly& p) const {
  const RingPtr& R = d_->ring();
  const int n = d_->n();
  PBWElement out(d_);
  for (const auto& [mono, coeff] : p.terms()) {
    // Split the monomial into e-letters and a parameter part.
    std::vector<int> eletters;  // generator indices, repeated per exponent
    Monomial param(mono.size(), 0);
    for (size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      bool is_e = false;
      for (int i = 1; i <= n && !is_e; ++i)
        for (int j = 1; j <= n; ++j)
          if (d_->e_var(i, j) == static_cast<int>(v)) {
            for (int k = 0; k < mono[v]; ++k) eletters.push_back(order_.index(Generator::E(i, j)));
            is_e = true;
            break;
          }
      if (!is_e) {
        if (v == static_cast<size_t>(d_->z_var()) || v == static_cast<size_t>(d_->t_var()) ||
            v == static_cast<size_t>(d_->s_var()))
          throw std::invalid_argument("symmetrize: series variable in input");
        for (int i = 1; i <= n; ++i)
          if (static_cast<int>(v) == d_->x_var(i) || static_cast<int>(v) == d_->y_var(i))
            throw std::invalid_argument("symmetrize: x/y variable in input");
        param[v] = mono[v];
      }
    }
    MultiPoly pcoeff(R);
    pcoeff.add_term(param, coeff);
    if (eletters.empty()) {
      out += PBWElement::one(d_).scaled(pcoeff);
      continue;
    }
    std::sort(eletters.begin(), eletters.end());
    // Average over all orderings: distinct permutations weighted by
    // (prod of multiplicities!)/d!.
    Rational mult(1);
    {
      int run = 1;
      for (size_t k = 1; k < eletters.size(); ++k) {
        if (eletters[k] == eletters[k - 1])
          ++run;
        else {
          mult *= Rational::factorial(run);
          run = 1;
        }
      }
      mult *= Rational::factorial(run);
    }
    Rational w = mult / Rational::factorial(eletters.size());
    PBWElement sym(d_);
    std::vector<int> perm = eletters;
    do {
      std::vector<Generator> word;
      word.reserve(perm.size());
      for (int idx : perm) word.push_back(order_.gen(idx));
      sym += normal_order(word, pcoeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += sym.scaled(w);
  }
  return out;
}

PBWElement PBWEngine::sigma(const PBWElement& a) const {
  PBWElement out(d_);
  for (const auto& [m, c] : a.terms()) {
    std::vector<Generator> ls = letters(m);
    std::reverse(ls.begin(), ls.end());
    for (auto& g : ls) {
      switch (g.kind) {
        case GenKind::X: g = Generator::Y(g.i); break;
        case GenKind::Y: g = Generator::X(g.i); break;
        case GenKind::E: g = Generator::E(g.j, g.i); break;
      }
    }
    out += normal_order(ls, c);
  }
  return out;
}

MultiPoly PBWEngine::hc_project(const PBWElement& a) const {
  const RingPtr& R = d_->ring();
  MultiPoly out(R);
  for (const auto& [m, c] : a.terms()) {
    MultiPoly factor = MultiPoly::constant(R, Rational(1));
    bool keep = true;
    for (int idx = 0; idx < order_.count() && keep; ++idx) {
      int e = m.exp[idx];
      if (e == 0) continue;
      const Generator& g = order_.gen(idx);
      if (g.kind != GenKind::E || g.i != g.j)
        keep = false;
      else
        factor *= MultiPoly::var(R, d_->lambda_var(g.i), e);
    }
    if (keep) out += c * factor;
  }
  return out;
}

std::vector<int> PBWEngine::weight(const PBWMonomial& m) const {
  std::vector<int> w(d_->n(), 0);
  for (int idx = 0; idx < order_.count(); ++idx) {
    if (m.exp[idx] == 0) continue;
    const auto& gw = order_.weight(idx);
    for (int i = 0; i < d_->n(); ++i) w[i] += m.exp[idx] * gw[i];
  }
  return w;
}

bool PBWEngine::is_weight_homogeneous(const PBWElement& a, const std::vector<int>& w) const {
  for (const auto& [m, c] : a.terms())
    if (weight(m) != w) return false;
  return true;
}

}  // namespace icher
