#include "icher/serialize.hpp"

#include <sstream>

namespace icher {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  const RingPtr& R = p.ring();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::array();
    for (size_t v = 0; v < it->first.size(); ++v) {
      if (it->first[v] != 0) mono.push_back(Json::array({R->name(static_cast<int>(v)), it->first[v]}));
    }
    terms.push_back(Json::array({mono, it->second.str()}));
  }
  return Json{{"terms", terms}, {"str", p.str()}};
}

Json to_json(const PBWElement& a) {
  Json terms = Json::array();
  if (a.context() == nullptr) return Json{{"terms", terms}};
  GenOrder ord(a.context()->n());
  const int n = a.context()->n();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    Json x = Json::array(), y = Json::array(), e = Json::array();
    for (int i = 1; i <= n; ++i) x.push_back(it->first.exp[ord.index(Generator::X(i))]);
    for (int i = 1; i <= n; ++i) y.push_back(it->first.exp[ord.index(Generator::Y(i))]);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int ex = it->first.exp[ord.index(Generator::E(i, j))];
        if (ex != 0) e.push_back(Json::array({i, j, ex}));
      }
    terms.push_back(Json{{"x", x}, {"e", e}, {"y", y}, {"coeff", it->second.str()}});
  }
  return Json{{"terms", terms}, {"str", a.str()}};
}

Json to_json(const CenterCertificate& c) {
  Json fails = Json::array();
  for (const auto& f : c.failures)
    fails.push_back(Json{{"k", f.k}, {"generator", f.generator}, {"residual", f.residual.str()}});
  return Json{{"ok", c.ok}, {"failures", fails}};
}

Json to_json(const FiniteDimReport& r) {
  Json out;
  out["finite"] = r.finite;
  if (!r.finite) {
    out["reason"] = r.reason;
    return out;
  }
  Json ks = Json::array();
  for (const auto& k : r.k) {
    if (k)
      ks.push_back(*k);
    else
      ks.push_back("infinity");
  }
  out["k"] = ks;
  out["nu"] = r.nu;
  out["dimension"] = r.dimension.str();
  Json dec = Json::array();
  for (const auto& bw : r.decomposition) {
    Json hw = Json::array();
    for (const auto& c : bw.highest_weight) hw.push_back(c.str());
    dec.push_back(Json{{"highest_weight", hw}, {"dim", bw.dimension.str()}});
  }
  out["decomposition"] = dec;
  return out;
}

Json to_json(const DetComparison& c) {
  return Json{{"tau", c.tau},
              {"det", c.det.str()},
              {"predicted", c.predicted.str()},
              {"ratio", c.ratio.str()},
              {"equal", c.equal}};
}

namespace {

std::string latex_var(const std::string& name) {
  auto split = [&](size_t k) {
    return std::make_pair(name.substr(0, k), name.substr(k));
  };
  if (name.rfind("zeta", 0) == 0) return "\\zeta_{" + split(4).second + "}";
  if (name.size() >= 2 && name[0] == 'l' && isdigit(name[1])) return "\\lambda_{" + split(1).second + "}";
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y' || name[0] == 'g' || name[0] == 'v') &&
      isdigit(name[1]))
    return std::string(1, name[0]) + "_{" + split(1).second + "}";
  if (name.size() >= 3 && name[0] == 'e' && isdigit(name[1])) return "e_{" + split(1).second + "}";
  return name;
}

void latex_coeff(std::ostringstream& os, const Rational& c, bool lead, bool with_one) {
  Rational a = c;
  if (lead) {
    if (a.sign() < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a.sign() < 0 ? " - " : " + ");
    if (a.sign() < 0) a = -a;
  }
  if (!a.is_one() || with_one) {
    if (a.is_integer())
      os << a.str();
    else
      os << "\\tfrac{" << a.numerator().get_str() << "}{" << a.denominator().get_str() << "}";
  }
}

}  // namespace

std::string to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool lead = true;
  const RingPtr& R = p.ring();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    bool constant = true;
    for (auto e : it->first)
      if (e != 0) constant = false;
    latex_coeff(os, it->second, lead, constant);
    lead = false;
    for (size_t v = 0; v < it->first.size(); ++v) {
      if (it->first[v] == 0) continue;
      os << latex_var(R->name(static_cast<int>(v)));
      if (it->first[v] > 1) os << "^{" << it->first[v] << "}";
    }
  }
  return os.str();
}

std::string to_latex(const PBWElement& a) {
  if (a.is_zero()) return "0";
  GenOrder ord(a.context()->n());
  std::ostringstream os;
  bool lead = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const MultiPoly& c = it->second;
    bool empty_mono = true;
    for (auto e : it->first.exp)
      if (e != 0) empty_mono = false;
    if (lead) {
      if (c.is_constant())
        latex_coeff(os, c.as_constant(), true, empty_mono);
      else
        os << "\\left(" << to_latex(c) << "\\right)";
    } else {
      if (c.is_constant())
        latex_coeff(os, c.as_constant(), false, empty_mono);
      else
        os << " + \\left(" << to_latex(c) << "\\right)";
    }
    lead = false;
    for (int idx = 0; idx < ord.count(); ++idx) {
      int e = it->first.exp[idx];
      if (e == 0) continue;
      const Generator& g = ord.gen(idx);
      switch (g.kind) {
        case GenKind::X: os << "x_{" << g.i << "}"; break;
        case GenKind::Y: os << "y_{" << g.i << "}"; break;
        case GenKind::E: os << "e_{" << g.i << g.j << "}"; break;
      }
      if (e > 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

}  // namespace icher
