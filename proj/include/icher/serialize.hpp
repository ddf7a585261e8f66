#pragma once

#include <string>

#include <json.hpp>

#include "icher/findim.hpp"
#include "icher/pbw.hpp"
#include "icher/poisson_gl.hpp"
#include "icher/shapovalov.hpp"

namespace icher {

using Json = nlohmann::ordered_json;

// Canonical JSON: rationals as decimal-free strings, polynomials as term
// lists sorted in descending grlex, PBW elements as sorted monomial records.
Json to_json(const Rational& r);
Json to_json(const MultiPoly& p);
Json to_json(const PBWElement& a);
Json to_json(const CenterCertificate& c);
Json to_json(const FiniteDimReport& r);
Json to_json(const DetComparison& c);

// LaTeX emitters; variable names map to subscripted symbols
// (l1 -> \lambda_1, zeta0 -> \zeta_0, e12 -> e_{12}, ...).
std::string to_latex(const MultiPoly& p);
std::string to_latex(const PBWElement& a);

}  // namespace icher
