#include "elliptica/poly_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace elliptica::io {

using nlohmann::json;

namespace {

json terms_to_json(const auto& terms, const std::vector<std::size_t>& columns) {
    json out = json::array();
    for (const auto& [e, c] : terms) {
        json exp = json::array();
        for (auto col : columns) exp.push_back(col < e.size() ? e[col] : 0u);
        out.push_back({{"coeff", c.to_string()}, {"exp", exp}});
    }
    return out;
}

struct RawTerm {
    Rational coeff;
    std::vector<std::uint32_t> exp;
};

std::pair<std::vector<std::string>, std::vector<RawTerm>> read_document(const json& doc,
                                                                         const std::string& path) {
    if (!doc.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
    if (!doc.contains("symbols") || !doc["symbols"].is_array())
        throw SchemaError(path + "/symbols", "missing or not an array");
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw SchemaError(path + "/terms", "missing or not an array");

    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < doc["symbols"].size(); ++i) {
        const auto& s = doc["symbols"][i];
        if (!s.is_string()) throw SchemaError(path + "/symbols/" + std::to_string(i), "expected a string");
        const auto name = s.get<std::string>();
        if (std::find(symbols.begin(), symbols.end(), name) != symbols.end())
            throw SchemaError(path + "/symbols/" + std::to_string(i), "duplicate symbol '" + name + "'");
        symbols.push_back(name);
    }

    std::vector<RawTerm> terms;
    for (std::size_t i = 0; i < doc["terms"].size(); ++i) {
        const auto where = path + "/terms/" + std::to_string(i);
        const auto& t = doc["terms"][i];
        if (!t.is_object()) throw SchemaError(where, "expected an object");
        if (!t.contains("coeff") || !t["coeff"].is_string())
            throw SchemaError(where + "/coeff", "missing or not a fraction string");
        if (!t.contains("exp") || !t["exp"].is_array())
            throw SchemaError(where + "/exp", "missing or not an array");
        RawTerm raw;
        try {
            raw.coeff = Rational::parse(t["coeff"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(where + "/coeff", e.what());
        }
        const auto& exp = t["exp"];
        if (exp.size() != symbols.size())
            throw SchemaError(where + "/exp", "length " + std::to_string(exp.size()) + " does not match " +
                                                  std::to_string(symbols.size()) + " symbols");
        for (std::size_t k = 0; k < exp.size(); ++k) {
            if (!exp[k].is_number_unsigned())
                throw SchemaError(where + "/exp/" + std::to_string(k), "expected a nonnegative integer");
            raw.exp.push_back(exp[k].get<std::uint32_t>());
        }
        terms.push_back(std::move(raw));
    }
    return {std::move(symbols), std::move(terms)};
}

std::string power(const std::string& base, std::uint32_t e, bool latex) {
    if (e == 1) return base;
    return base + (latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e));
}

// Renders sum of (coeff, factors) pairs. Factors are already formatted.
std::string join_terms(const std::vector<std::pair<Rational, std::vector<std::string>>>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, factors] : terms) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = a == Rational(1);
        std::string coeff;
        if (!unit || factors.empty()) {
            if (latex && !a.is_integer())
                coeff = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
            else
                coeff = a.to_string();
        }
        const std::string sep = latex ? " " : "*";
        std::string body = coeff;
        for (const auto& f : factors) body += (body.empty() ? "" : sep) + f;
        os << body;
    }
    return os.str();
}

std::string latex_name(const std::string& name) {
    static const std::vector<std::pair<std::string, std::string>> names = {
        {"lambda", "\\lambda"}, {"omega", "\\omega"}, {"eta", "\\eta"},     {"xi", "\\xi"},
        {"pbar", "\\bar{\\wp}"}, {"wp", "\\wp"},       {"dwp", "\\wp'"},     {"g1", "g_1"},
        {"g2", "g_2"},           {"g3", "g_3"},        {"e1", "e_1"},        {"e2", "e_2"},
        {"e3", "e_3"},
    };
    for (const auto& [k, v] : names)
        if (k == name) return v;
    return name;
}

std::string render(const MultiPoly& p, bool latex) {
    std::vector<std::pair<Rational, std::vector<std::string>>> terms;
    const auto& table = *p.table();
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) factors.push_back(power(latex ? latex_name(table[i].name) : table[i].name, e[i], latex));
        terms.emplace_back(c, std::move(factors));
    }
    return join_terms(terms, latex);
}

std::string render(const DiffPoly& p, bool latex) {
    std::vector<std::pair<Rational, std::vector<std::string>>> terms;
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::string> factors;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            const std::string base = latex ? "u_{" + std::to_string(j) + "}" : "u" + std::to_string(j);
            factors.push_back(power(base, e[j], latex));
        }
        terms.emplace_back(c, std::move(factors));
    }
    return join_terms(terms, latex);
}

// Positive rational c with p / c primitive over the integers and a positive
// leading coefficient (the sign is returned separately).
std::pair<Rational, int> content_of(const MultiPoly& p) {
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    const int sign = p.is_zero() ? 1 : p.terms().begin()->second.sign();
    return {Rational(mpq_class(g, l)), sign};
}

}  // namespace

json to_json(const MultiPoly& p) {
    const auto& table = *p.table();
    std::vector<std::size_t> columns;
    json symbols = json::array();
    for (const auto& name : p.used_symbols()) {
        columns.push_back(table.index(name));
        symbols.push_back(name);
    }
    return {{"symbols", symbols}, {"terms", terms_to_json(p.terms(), columns)}};
}

json to_json(const DiffPoly& p) {
    const int k = p.max_index();
    std::vector<std::size_t> columns;
    json symbols = json::array();
    for (int j = 0; j <= k; ++j) {
        columns.push_back(static_cast<std::size_t>(j));
        symbols.push_back("u" + std::to_string(j));
    }
    return {{"symbols", symbols}, {"terms", terms_to_json(p.terms(), columns)}};
}

MultiPoly multipoly_from_json(const json& doc, const SymbolTablePtr& table, const std::string& path) {
    auto [symbols, terms] = read_document(doc, path);
    std::vector<std::size_t> columns;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        auto idx = table->find(symbols[i]);
        if (!idx) throw SchemaError(path + "/symbols/" + std::to_string(i), "unknown symbol '" + symbols[i] + "'");
        columns.push_back(*idx);
    }
    MultiPoly p(table);
    for (const auto& t : terms) {
        Exponents e(table->size(), 0);
        for (std::size_t k = 0; k < columns.size(); ++k) e[columns[k]] = t.exp[k];
        p.add_term(e, t.coeff);
    }
    return p;
}

DiffPoly diffpoly_from_json(const json& doc, const std::string& path) {
    auto [symbols, terms] = read_document(doc, path);
    std::vector<std::size_t> columns;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto& s = symbols[i];
        const bool ok = s.size() > 1 && s[0] == 'u' &&
                        std::all_of(s.begin() + 1, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        if (!ok) throw SchemaError(path + "/symbols/" + std::to_string(i), "expected u<j>, got '" + s + "'");
        columns.push_back(std::stoul(s.substr(1)));
    }
    DiffPoly p;
    for (const auto& t : terms) {
        std::size_t len = 0;
        for (auto c : columns) len = std::max(len, c + 1);
        Exponents e(len, 0);
        for (std::size_t k = 0; k < columns.size(); ++k) e[columns[k]] += t.exp[k];
        p.add_term(std::move(e), t.coeff);
    }
    return p;
}

std::string to_text(const MultiPoly& p) { return render(p, false); }
std::string to_text(const DiffPoly& p) { return render(p, false); }
std::string to_text(const CohomElem& c) { return render(c.to_poly(), false); }
std::string to_latex(const MultiPoly& p) { return render(p, true); }
std::string to_latex(const DiffPoly& p) { return render(p, true); }

std::string to_latex(const CohomElem& c) {
    const auto& table = c.omega_part().table();
    const auto lambda = table->index("lambda");

    // (parameter monomial, basis symbol) -> lambda polynomial
    struct Row {
        Exponents key;
        std::string basis;
        MultiPoly lambda_poly;
    };
    std::vector<Row> rows;
    auto collect = [&](const MultiPoly& part, const std::string& basis) {
        std::map<Exponents, MultiPoly, MonomialOrder> groups;
        for (const auto& [e, coeff] : part.terms()) {
            Exponents key = e;
            key[lambda] = 0;
            Exponents lam(e.size(), 0);
            lam[lambda] = e[lambda];
            auto [it, _] = groups.try_emplace(key, MultiPoly(table));
            it->second.add_term(lam, coeff);
        }
        for (auto& [key, poly] : groups) rows.push_back({key, basis, std::move(poly)});
    };
    collect(c.omega_part(), "omega");
    collect(c.second_part(), std::string(second_symbol(c.basis())));
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return MonomialOrder{}(a.key, b.key); });
    if (rows.empty()) return "0";

    std::ostringstream os;
    os << "\\begin{array}{lll}\n";
    for (const auto& row : rows) {
        auto [content, sign] = content_of(row.lambda_poly);
        const unsigned low = row.lambda_poly.min_degree("lambda");
        MultiPoly primitive = row.lambda_poly / (content * Rational(sign));
        MultiPoly monic_part(table);
        for (const auto& [e, coeff] : primitive.terms()) {
            Exponents shifted = e;
            shifted[lambda] -= low;
            monic_part.add_term(shifted, coeff);
        }
        std::string params = render(MultiPoly::monomial(Rational(1), row.key, table), true);
        params = (params == "1" ? "" : params + " ") + latex_name(row.basis);
        std::string bracket;
        if (content != Rational(1))
            bracket = content.is_integer() ? content.to_string() + " "
                                           : "\\frac{" + content.numerator().get_str() + "}{" +
                                                 content.denominator().get_str() + "} ";
        if (low > 0) bracket += power("\\lambda", low, true);
        if (!monic_part.is_constant()) bracket += (low > 0 ? " (" : "(") + render(monic_part, true) + ")";
        if (bracket.empty()) bracket = "1";
        while (!bracket.empty() && bracket.back() == ' ') bracket.pop_back();
        os << (sign < 0 ? "-" : "+") << " & " << params << " & [" << bracket << "] \\\\\n";
    }
    os << "\\end{array}";
    return os.str();
}

}  // namespace elliptica::io
