#include "elliptica/diffpoly.hpp"

namespace elliptica {

namespace {

void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

DiffPoly::DiffPoly(const Rational& constant) { add_term({}, constant); }

DiffPoly DiffPoly::u(unsigned j) {
    Exponents e(j + 1, 0);
    e[j] = 1;
    return monomial(Rational(1), std::move(e));
}

DiffPoly DiffPoly::monomial(const Rational& c, Exponents exps) {
    DiffPoly p;
    p.add_term(std::move(exps), c);
    return p;
}

Rational DiffPoly::coefficient(Exponents exps) const {
    trim(exps);
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational() : it->second;
}

void DiffPoly::add_term(Exponents exps, const Rational& c) {
    if (c.is_zero()) return;
    trim(exps);
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& rhs) {
    DiffPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::optional<int> DiffPoly::homogeneous_rank() const {
    std::optional<int> rank;
    for (const auto& [e, c] : terms_) {
        const int r = rank_of(e);
        if (rank && *rank != r) return std::nullopt;
        rank = r;
    }
    return rank;
}

int DiffPoly::max_index() const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = std::max(m, highest_index(e));
    return m;
}

DiffPoly operator+(DiffPoly lhs, const DiffPoly& rhs) { return lhs += rhs; }
DiffPoly operator-(DiffPoly lhs, const DiffPoly& rhs) { return lhs -= rhs; }
DiffPoly operator*(const DiffPoly& lhs, const DiffPoly& rhs) {
    DiffPoly r(lhs);
    r *= rhs;
    return r;
}
DiffPoly operator*(DiffPoly lhs, const Rational& c) { return lhs *= c; }
DiffPoly operator*(const Rational& c, DiffPoly rhs) { return rhs *= c; }

int rank_of(const Exponents& exps) {
    int r = 0;
    for (std::size_t j = 0; j < exps.size(); ++j) r += static_cast<int>((2 + j) * exps[j]);
    return r;
}

int highest_index(const Exponents& exps) {
    for (std::size_t j = exps.size(); j-- > 0;)
        if (exps[j] > 0) return static_cast<int>(j);
    return -1;
}

DiffPoly total_x_derivative(const DiffPoly& p) {
    DiffPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            Exponents d = e;
            d[j] -= 1;
            if (d.size() <= j + 1) d.resize(j + 2, 0);
            d[j + 1] += 1;
            out.add_term(std::move(d), c * Rational(static_cast<long>(e[j])));
        }
    }
    return out;
}

}  // namespace elliptica
