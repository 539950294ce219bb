#pragma once

#include <map>
#include <optional>
#include <string>

#include "elliptica/multipoly.hpp"
#include "elliptica/rational.hpp"

namespace elliptica {

/// Differential polynomial in u_0, u_1, u_2, ... (u_j = j-th x-derivative of u).
///
/// Exponent vectors are variable length with trailing zeros trimmed, so the
/// alphabet grows on demand. The monomial u_0^{m_0}...u_k^{m_k} has rank
/// sum (2 + j) m_j.
class DiffPoly {
public:
    using TermMap = std::map<Exponents, Rational, MonomialOrder>;

    DiffPoly() = default;
    explicit DiffPoly(const Rational& constant);

    /// The single variable u_j.
    static DiffPoly u(unsigned j);
    static DiffPoly monomial(const Rational& c, Exponents exps);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Exponents exps) const;

    void add_term(Exponents exps, const Rational& c);

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& rhs);
    DiffPoly& operator-=(const DiffPoly& rhs);
    DiffPoly& operator*=(const DiffPoly& rhs);
    DiffPoly& operator*=(const Rational& c);

    /// Common rank of all terms, or nothing if the polynomial mixes ranks
    /// (or is zero).
    std::optional<int> homogeneous_rank() const;
    /// Largest derivative index present (-1 for constants and zero).
    int max_index() const;

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    TermMap terms_;
};

DiffPoly operator+(DiffPoly lhs, const DiffPoly& rhs);
DiffPoly operator-(DiffPoly lhs, const DiffPoly& rhs);
DiffPoly operator*(const DiffPoly& lhs, const DiffPoly& rhs);
DiffPoly operator*(DiffPoly lhs, const Rational& c);
DiffPoly operator*(const Rational& c, DiffPoly rhs);

int rank_of(const Exponents& exps);
/// Index of the highest derivative in the monomial, -1 for the empty monomial.
int highest_index(const Exponents& exps);

/// d/dx with u_j -> u_{j+1}, by the Leibniz rule.
DiffPoly total_x_derivative(const DiffPoly& p);

}  // namespace elliptica
