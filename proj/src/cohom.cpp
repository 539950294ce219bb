#include "elliptica/cohom.hpp"

#include <stdexcept>

namespace elliptica {

namespace {

void require_free_of_basis(const MultiPoly& p, const char* what) {
    for (const char* s : {"omega", "xi", "eta"})
        if (p.contains(s))
            throw std::invalid_argument(std::string("CohomElem: ") + what + " contains basis symbol '" + s + "'");
}

}  // namespace

std::string_view second_symbol(Basis basis) { return basis == Basis::general ? "xi" : "eta"; }

CohomElem::CohomElem(Basis basis) : basis_(basis) {}

CohomElem::CohomElem(MultiPoly omega_part, MultiPoly second_part, Basis basis)
    : omega_(std::move(omega_part)), second_(std::move(second_part)), basis_(basis) {
    require_free_of_basis(omega_, "omega part");
    require_free_of_basis(second_, "second part");
}

CohomElem CohomElem::from_poly(const MultiPoly& p, Basis basis) {
    const auto other = basis == Basis::general ? "eta" : "xi";
    if (p.contains(other))
        throw std::invalid_argument(std::string("CohomElem::from_poly: unexpected symbol '") + other + "'");
    const auto second = second_symbol(basis);
    const auto& table = *p.table();
    const auto io = table.index("omega");
    const auto is = table.index(second);
    for (const auto& [e, c] : p.terms())
        if (e[io] + e[is] != 1)
            throw std::invalid_argument("CohomElem::from_poly: polynomial is not linear in omega, " +
                                        std::string(second));
    return CohomElem(p.coefficient_of("omega", 1), p.coefficient_of(second, 1), basis);
}

MultiPoly CohomElem::to_poly() const {
    const auto& table = omega_.table();
    return omega_ * MultiPoly::variable("omega", table) +
           second_ * MultiPoly::variable(second_symbol(basis_), table);
}

CohomElem& CohomElem::operator+=(const CohomElem& rhs) {
    if (basis_ != rhs.basis_) throw std::invalid_argument("CohomElem: basis mismatch");
    omega_ += rhs.omega_;
    second_ += rhs.second_;
    return *this;
}

CohomElem& CohomElem::operator-=(const CohomElem& rhs) {
    if (basis_ != rhs.basis_) throw std::invalid_argument("CohomElem: basis mismatch");
    omega_ -= rhs.omega_;
    second_ -= rhs.second_;
    return *this;
}

CohomElem& CohomElem::operator*=(const MultiPoly& scalar) {
    require_free_of_basis(scalar, "scalar");
    omega_ *= scalar;
    second_ *= scalar;
    return *this;
}

CohomElem CohomElem::operator-() const { return CohomElem(-omega_, -second_, basis_); }

CohomElem CohomElem::substitute(const std::map<std::string, MultiPoly>& values) const {
    for (const auto& [name, v] : values) require_free_of_basis(v, "substituted value");
    return CohomElem(omega_.substitute(values), second_.substitute(values), basis_);
}

CohomElem CohomElem::substitute(std::string_view symbol, const MultiPoly& value) const {
    return substitute(std::map<std::string, MultiPoly>{{std::string(symbol), value}});
}

CohomElem operator+(CohomElem lhs, const CohomElem& rhs) { return lhs += rhs; }
CohomElem operator-(CohomElem lhs, const CohomElem& rhs) { return lhs -= rhs; }
CohomElem operator*(CohomElem lhs, const MultiPoly& scalar) { return lhs *= scalar; }
CohomElem operator*(const MultiPoly& scalar, CohomElem rhs) { return rhs *= scalar; }

WeightReport weight_of(const CohomElem& c) { return weight_of(c.to_poly()); }

}  // namespace elliptica
