#include "elliptica/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace elliptica {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly() : table_(standard_symbols()) {}

MultiPoly::MultiPoly(SymbolTablePtr table) : table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("MultiPoly: null symbol table");
}

MultiPoly::MultiPoly(const Rational& constant) : table_(standard_symbols()) {
    add_term(Exponents(table_->size(), 0), constant);
}

MultiPoly MultiPoly::constant(const Rational& c, SymbolTablePtr table) {
    MultiPoly p(std::move(table));
    p.add_term(Exponents(p.table_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::string_view name, SymbolTablePtr table) {
    MultiPoly p(std::move(table));
    Exponents e(p.table_->size(), 0);
    e[p.table_->index(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents exps, SymbolTablePtr table) {
    MultiPoly p(std::move(table));
    if (exps.size() != p.table_->size())
        throw std::invalid_argument("MultiPoly::monomial: exponent vector length mismatch");
    p.add_term(exps, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(table_->size(), 0)); }

Rational MultiPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational() : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::require_same_table(const MultiPoly& other) const {
    if (!same_table(table_, other.table_))
        throw std::invalid_argument("MultiPoly: operands use mismatched symbol tables");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_table(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_table(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    require_same_table(rhs);
    MultiPoly out(table_);
    Exponents e(table_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    for (auto& [e, v] : terms_) v /= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(Rational(1), table_);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool MultiPoly::contains(std::string_view symbol) const { return degree(symbol) > 0; }

unsigned MultiPoly::degree(std::string_view symbol) const {
    const auto i = table_->index(symbol);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[i]);
    return d;
}

unsigned MultiPoly::min_degree(std::string_view symbol) const {
    if (terms_.empty()) return 0;
    const auto i = table_->index(symbol);
    unsigned d = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) d = std::min<unsigned>(d, e[i]);
    return d;
}

MultiPoly MultiPoly::coefficient_of(std::string_view symbol, unsigned power) const {
    const auto i = table_->index(symbol);
    MultiPoly out(table_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != power) continue;
        Exponents reduced = e;
        reduced[i] = 0;
        out.add_term(reduced, c);
    }
    return out;
}

MultiPoly MultiPoly::derivative(std::string_view symbol) const {
    const auto i = table_->index(symbol);
    MultiPoly out(table_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        out.add_term(d, c * Rational(static_cast<long>(e[i])));
    }
    return out;
}

MultiPoly MultiPoly::substitute(std::string_view symbol, const MultiPoly& value) const {
    return substitute(std::map<std::string, MultiPoly>{{std::string(symbol), value}});
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
    struct Slot {
        std::size_t index;
        const MultiPoly* value;
        std::vector<MultiPoly> powers;  // powers[k] = value^k
    };
    std::vector<Slot> slots;
    for (const auto& [name, value] : values) {
        require_same_table(value);
        slots.push_back({table_->index(name), &value, {constant(Rational(1), table_)}});
    }
    auto power_of = [](Slot& s, unsigned k) -> const MultiPoly& {
        while (s.powers.size() <= k) s.powers.push_back(s.powers.back() * *s.value);
        return s.powers[k];
    };

    MultiPoly out(table_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        bool touched = false;
        for (auto& s : slots) {
            if (e[s.index] == 0) continue;
            rest[s.index] = 0;
            touched = true;
        }
        if (!touched) {
            out.add_term(e, c);
            continue;
        }
        MultiPoly term = monomial(c, rest, table_);
        for (auto& s : slots)
            if (e[s.index] > 0) term *= power_of(s, e[s.index]);
        out += term;
    }
    return out;
}

double MultiPoly::evaluate(const std::map<std::string, double>& values) const {
    std::vector<std::optional<double>> point(table_->size());
    for (const auto& [name, v] : values)
        if (auto i = table_->find(name)) point[*i] = v;
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!point[i])
                throw std::invalid_argument("MultiPoly::evaluate: no value for symbol '" +
                                            (*table_)[i].name + "'");
            t *= std::pow(*point[i], static_cast<double>(e[i]));
        }
        sum += t;
    }
    return sum;
}

std::vector<std::string> MultiPoly::used_symbols() const {
    std::vector<bool> used(table_->size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) names.push_back((*table_)[i].name);
    return names;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
}

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly r(lhs);
    r *= rhs;
    return r;
}
MultiPoly operator*(MultiPoly lhs, const Rational& c) { return lhs *= c; }
MultiPoly operator*(const Rational& c, MultiPoly rhs) { return rhs *= c; }
MultiPoly operator/(MultiPoly lhs, const Rational& c) { return lhs /= c; }

int monomial_weight(const SymbolTable& table, const Exponents& exps) {
    int w = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (table[i].graded) w += table[i].weight * static_cast<int>(exps[i]);
    return w;
}

WeightReport weight_of(const MultiPoly& p) {
    WeightReport report;
    const Exponents* first = nullptr;
    int w0 = 0;
    for (const auto& [e, c] : p.terms()) {
        const int w = monomial_weight(*p.table(), e);
        if (!first) {
            first = &e;
            w0 = w;
            continue;
        }
        if (w != w0) {
            report.homogeneous = false;
            report.offending = std::make_pair(*first, e);
            return report;
        }
    }
    if (first) report.weight = w0;
    return report;
}

std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, std::string_view symbol,
                                          const Rational& root) {
    const unsigned d = p.degree(symbol);
    const auto& table = p.table();
    const MultiPoly s = MultiPoly::variable(symbol, table);
    if (p.is_zero()) return p;
    // Synthetic division on the coefficients of symbol^k.
    std::vector<MultiPoly> quotient(d, MultiPoly(table));
    MultiPoly carry(table);
    for (unsigned k = d; k-- > 0;) {
        carry = p.coefficient_of(symbol, k + 1) + carry * root;
        quotient[k] = carry;
    }
    const MultiPoly remainder = p.coefficient_of(symbol, 0) + carry * root;
    if (d == 0 || !remainder.is_zero()) return std::nullopt;
    MultiPoly q(table);
    MultiPoly power = MultiPoly::constant(Rational(1), table);
    for (unsigned k = 0; k < d; ++k) {
        q += quotient[k] * power;
        power *= s;
    }
    return q;
}

}  // namespace elliptica
