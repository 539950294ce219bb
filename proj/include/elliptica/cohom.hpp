#pragma once

#include <map>
#include <string>
#include <string_view>

#include "elliptica/multipoly.hpp"

namespace elliptica {

/// Basis of the first cohomology: (omega, xi) for the curve with the quartic
/// parameter g1, (omega, eta) for the Weierstrass form.
enum class Basis { general, reduced };

std::string_view second_symbol(Basis basis);

/// An element A*omega + B*xi (general) or A*omega + B*eta (reduced).
///
/// Neither part may mention omega, xi or eta.
class CohomElem {
public:
    explicit CohomElem(Basis basis = Basis::general);
    CohomElem(MultiPoly omega_part, MultiPoly second_part, Basis basis);

    /// Splits a polynomial that is linear and homogeneous in the basis
    /// symbols. Throws std::invalid_argument otherwise.
    static CohomElem from_poly(const MultiPoly& p, Basis basis);

    const MultiPoly& omega_part() const { return omega_; }
    const MultiPoly& second_part() const { return second_; }
    Basis basis() const { return basis_; }
    bool is_zero() const { return omega_.is_zero() && second_.is_zero(); }

    MultiPoly to_poly() const;

    CohomElem& operator+=(const CohomElem& rhs);
    CohomElem& operator-=(const CohomElem& rhs);
    CohomElem& operator*=(const MultiPoly& scalar);
    CohomElem operator-() const;

    /// Substitutes into both parts; values must be free of basis symbols.
    CohomElem substitute(const std::map<std::string, MultiPoly>& values) const;
    CohomElem substitute(std::string_view symbol, const MultiPoly& value) const;

    /// Same parts, relabelled basis (xi <-> eta).
    CohomElem relabel(Basis basis) const { return CohomElem(omega_, second_, basis); }

    friend bool operator==(const CohomElem&, const CohomElem&) = default;

private:
    MultiPoly omega_;
    MultiPoly second_;
    Basis basis_;
};

CohomElem operator+(CohomElem lhs, const CohomElem& rhs);
CohomElem operator-(CohomElem lhs, const CohomElem& rhs);
CohomElem operator*(CohomElem lhs, const MultiPoly& scalar);
CohomElem operator*(const MultiPoly& scalar, CohomElem rhs);

WeightReport weight_of(const CohomElem& c);

}  // namespace elliptica
