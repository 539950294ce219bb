#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elliptica/rational.hpp"
#include "elliptica/symbols.hpp"

namespace elliptica {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, highest monomial first: larger total degree
/// wins, ties are broken lexicographically on the exponent vector.
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Every exponent vector has exactly one entry per symbol of the table.
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Binary operations require both operands to share a symbol table
/// and throw std::invalid_argument otherwise.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, MonomialOrder>;

    MultiPoly();
    explicit MultiPoly(SymbolTablePtr table);
    MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static MultiPoly constant(const Rational& c, SymbolTablePtr table);
    static MultiPoly variable(std::string_view name, SymbolTablePtr table = standard_symbols());
    static MultiPoly monomial(const Rational& c, Exponents exps, SymbolTablePtr table);

    const SymbolTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Exponents& exps) const;

    /// Adds c·x^exps in place.
    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    MultiPoly pow(unsigned exponent) const;

    bool contains(std::string_view symbol) const;
    unsigned degree(std::string_view symbol) const;
    /// Lowest exponent of `symbol` across all terms; 0 for the zero polynomial.
    unsigned min_degree(std::string_view symbol) const;
    /// Coefficient of symbol^power, as a polynomial free of `symbol`.
    MultiPoly coefficient_of(std::string_view symbol, unsigned power) const;
    MultiPoly derivative(std::string_view symbol) const;

    /// Replaces `symbol` by `value` everywhere.
    MultiPoly substitute(std::string_view symbol, const MultiPoly& value) const;
    /// Simultaneous substitution; symbols absent from the map are kept.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;

    /// Numeric evaluation. Throws std::invalid_argument if a symbol occurring
    /// in the polynomial has no value.
    double evaluate(const std::map<std::string, double>& values) const;

    /// Names of the symbols that actually occur, in table order.
    std::vector<std::string> used_symbols() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void require_same_table(const MultiPoly& other) const;

    SymbolTablePtr table_;
    TermMap terms_;
};

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
MultiPoly operator*(MultiPoly lhs, const Rational& c);
MultiPoly operator*(const Rational& c, MultiPoly rhs);
MultiPoly operator/(MultiPoly lhs, const Rational& c);

/// Shorthand for a variable of the standard table.
inline MultiPoly var(std::string_view name) { return MultiPoly::variable(name); }

/// Result of a homogeneity check.
struct WeightReport {
    bool homogeneous = true;
    /// Common weight; empty for the zero polynomial or when inhomogeneous.
    std::optional<int> weight;
    /// Two terms of different weight, when inhomogeneous.
    std::optional<std::pair<Exponents, Exponents>> offending;
};

int monomial_weight(const SymbolTable& table, const Exponents& exps);
WeightReport weight_of(const MultiPoly& p);

/// Exact division of p by (symbol - root), viewed as a univariate polynomial
/// in `symbol`. Returns nothing when the remainder is nonzero.
std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, std::string_view symbol,
                                          const Rational& root);

}  // namespace elliptica
