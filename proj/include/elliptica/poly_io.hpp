#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "elliptica/cohom.hpp"
#include "elliptica/diffpoly.hpp"
#include "elliptica/multipoly.hpp"

namespace elliptica::io {

/// Malformed polynomial document. `where()` is a JSON-pointer-like path to
/// the offending element.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Wire format:
//   {"symbols": ["g2","lambda",...], "terms": [{"coeff": "p/q", "exp": [..]}]}
// Symbols are the ones that occur, in table order; terms follow the
// canonical monomial order, so equal polynomials serialize identically.

nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const DiffPoly& p);

/// Throws SchemaError. `path` prefixes reported locations.
MultiPoly multipoly_from_json(const nlohmann::json& doc, const SymbolTablePtr& table = standard_symbols(),
                              const std::string& path = "");
/// Symbols must be named u0, u1, ...
DiffPoly diffpoly_from_json(const nlohmann::json& doc, const std::string& path = "");

/// Plain-text rendering, e.g. "-4*eta*lambda" or "u1^2 + 2*u0^3".
std::string to_text(const MultiPoly& p);
std::string to_text(const DiffPoly& p);
std::string to_text(const CohomElem& c);

std::string to_latex(const MultiPoly& p);
std::string to_latex(const DiffPoly& p);
/// Rows grouped by the parameter monomial times a basis element, each with
/// a factored lambda-polynomial in brackets, for example
/// `- & g_2 \eta & [\frac{8}{5} \lambda^{2} (3 \lambda - 2)]`.
std::string to_latex(const CohomElem& c);

}  // namespace elliptica::io
