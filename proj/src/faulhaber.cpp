#include "elliptica/faulhaber.hpp"

#include <stdexcept>
#include <vector>

#include "elliptica/kdv.hpp"
#include "elliptica/memo.hpp"
#include "elliptica/poly_io.hpp"
#include "elliptica/weierstrass.hpp"

namespace elliptica::faulhaber {

namespace {

namespace ws = weierstrass;

Rational q(long num, long den = 1) { return Rational(num, den); }

void require_at_least(int v, int lo, const char* what) {
    if (v < lo)
        throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(lo) + ", got " +
                                    std::to_string(v));
}

int half_index(int index, const char* what) {
    if (index < 2 || index % 2 != 0)
        throw std::invalid_argument(std::string(what) + ": index must be even and >= 2, got " +
                                    std::to_string(index));
    return index / 2;
}

MemoSequence<Rational>& bernoulli_table() {
    static MemoSequence<Rational> table([](std::size_t m, const std::vector<Rational>& b) {
        if (m == 0) return Rational(1);
        Rational sum;
        for (std::size_t j = 0; j < m; ++j)
            sum += Rational::binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j)) * b[j];
        return -sum / Rational(static_cast<long>(m + 1));
    });
    return table;
}

// Integrates T_m[2 lambda wp] with the derivative polynomials of the given
// basis (g1 kept for general, set to zero for reduced).
CohomElem integrate_density(int m, Basis basis) {
    const DiffPoly body = kdv::density(m).body;
    const int top = body.max_index();
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(top + 1));
    for (int j = 0; j <= top; ++j) {
        MultiPoly d = ws::wp_derivative(j);
        if (basis == Basis::reduced) d = d.substitute("g1", MultiPoly());
        powers[static_cast<std::size_t>(j)] = {MultiPoly(1), d};
    }
    auto power = [&powers](std::size_t j, unsigned e) -> const MultiPoly& {
        auto& row = powers[j];
        while (row.size() <= e) row.push_back(row.back() * row[1]);
        return row[e];
    };
    const MultiPoly two_lambda = 2 * var("lambda");
    MultiPoly integrand;
    for (const auto& [e, c] : body.terms()) {
        unsigned degree = 0;
        MultiPoly term(c);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            degree += e[j];
            term *= power(j, e[j]);
        }
        integrand += term * two_lambda.pow(degree);
    }
    MultiPoly reduced = ws::eliminate_odd_derivative(integrand);
    if (basis == Basis::reduced) reduced = reduced.substitute("g1", MultiPoly());
    return ws::integrate_wp_powers(reduced, basis);
}

MemoSequence<CohomElem>& general_table() {
    static MemoSequence<CohomElem> table([](std::size_t i, const std::vector<CohomElem>&) {
        return integrate_density(static_cast<int>(i) + 1, Basis::general);
    });
    return table;
}

MemoSequence<CohomElem>& reduced_table() {
    static MemoSequence<CohomElem> table([](std::size_t i, const std::vector<CohomElem>&) {
        return integrate_density(static_cast<int>(i) + 1, Basis::reduced);
    });
    return table;
}

MultiPoly reduced_wp_derivative(int j) { return ws::wp_derivative(j).substitute("g1", MultiPoly()); }

CohomElem bernoulli_direct(int n) {
    const MultiPoly d = reduced_wp_derivative(n - 1);
    const MultiPoly square = ws::eliminate_odd_derivative(d * d).substitute("g1", MultiPoly());
    return q(1, 2) * ws::integrate_wp_powers(square, Basis::reduced);
}

CohomElem bernoulli_period_expansion(int n) {
    const MultiPoly dn = var("wp") * ws::deriv_poly(n - 1).substitute("g1", MultiPoly());
    const Rational sign = (n - 1) % 2 == 0 ? q(1, 2) : q(-1, 2);
    return MultiPoly(sign) * ws::integrate_wp_powers(dn, Basis::reduced);
}

// entry i is the elliptic Bernoulli number of index 2(i+1)
MemoSequence<CohomElem>& halphen_route_table() {
    static MemoSequence<CohomElem> table([](std::size_t i, const std::vector<CohomElem>& prev) {
        const int n = static_cast<int>(i) + 1;
        const Rational f = Rational::factorial(static_cast<unsigned>(2 * n - 1));
        const Rational sign = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
        CohomElem out(sign * f * ws::halphen(n + 1, n + 1),
                      -(sign * f) * (ws::halphen(n + 1, n) - ws::halphen(n, n)), Basis::reduced);
        for (int r = 2; r <= n - 1; ++r) {
            const Rational rs = r % 2 == 0 ? Rational(1) : Rational(-1);
            const Rational w = f * rs / Rational::factorial(static_cast<unsigned>(2 * n - 2 * r - 1));
            out -= (w * ws::halphen(n, r)) * prev[static_cast<std::size_t>(n - r - 1)];
        }
        return out;
    });
    return table;
}

const char* route_name(BernoulliRoute r) {
    switch (r) {
        case BernoulliRoute::direct: return "direct";
        case BernoulliRoute::period_expansion: return "period-expansion";
        case BernoulliRoute::halphen: return "halphen";
    }
    return "?";
}

MultiPoly lambda_coefficient(const MultiPoly& p, unsigned k) { return p.coefficient_of("lambda", k); }

CohomElem lambda_coefficient(const CohomElem& c, unsigned k) {
    return CohomElem(lambda_coefficient(c.omega_part(), k), lambda_coefficient(c.second_part(), k), c.basis());
}

}  // namespace

Rational bernoulli_number(int k) {
    require_at_least(k, 0, "bernoulli_number: k");
    return bernoulli_table().get(static_cast<std::size_t>(k));
}

MultiPoly bernoulli_poly(int k) {
    require_at_least(k, 0, "bernoulli_poly: k");
    const auto uk = static_cast<unsigned>(k);
    const MultiPoly x = var("x");
    MultiPoly out;
    for (unsigned j = 0; j <= uk; ++j) {
        const Rational b = bernoulli_number(static_cast<int>(j));
        if (!b.is_zero()) out += (Rational::binomial(uk, j) * b) * x.pow(uk - j);
    }
    return out;
}

MultiPoly classical_faulhaber(int m) {
    require_at_least(m, 1, "classical_faulhaber: m");
    const int two_m = 2 * m;
    MultiPoly rest = (bernoulli_poly(two_m).substitute("x", var("x") + MultiPoly(1)) -
                      MultiPoly(bernoulli_number(two_m))) /
                     Rational(two_m);
    const MultiPoly x = var("x");
    const MultiPoly lambda_of_x = q(1, 2) * (x * x + x);
    const MultiPoly lambda = var("lambda");
    MultiPoly out;
    // Peel the top x-power: c x^{2d} is the leading term of c 2^d lambda(x)^d.
    while (!rest.is_zero()) {
        const unsigned deg = rest.degree("x");
        if (deg % 2 != 0)
            throw std::logic_error("classical_faulhaber: odd leading power x^" + std::to_string(deg) +
                                   " while rewriting in lambda");
        const Rational c = rest.coefficient_of("x", deg).constant_term() * Rational(2).pow(deg / 2);
        out += c * lambda.pow(deg / 2);
        rest -= c * lambda_of_x.pow(deg / 2);
    }
    return out;
}

CohomElem elliptic_faulhaber(int m) {
    require_at_least(m, 1, "elliptic_faulhaber: m");
    return general_table().get(static_cast<std::size_t>(m - 1));
}

CohomElem reduced_faulhaber_W(int m) {
    require_at_least(m, 1, "reduced_faulhaber_W: m");
    return reduced_table().get(static_cast<std::size_t>(m - 1));
}

CohomElem reduced_faulhaber_J(int m) {
    require_at_least(m, 1, "reduced_faulhaber_J: m");
    return elliptic_faulhaber(m).substitute("g3", MultiPoly());
}

CheckReport soliton_specialization_check(int m) {
    require_at_least(m, 1, "soliton_specialization_check: m");
    CheckReport report;
    const CohomElem f = elliptic_faulhaber(m);
    const MultiPoly fm = classical_faulhaber(m);
    const MultiPoly g1 = var("g1");
    const Rational scale = Rational(-4) / Rational(2 * m - 1);

    const CohomElem soliton = f.substitute({{"g2", MultiPoly()}, {"g3", MultiPoly()}});
    const CohomElem expected(MultiPoly(), scale * g1.pow(static_cast<unsigned>(m - 1)) * fm, Basis::general);
    if (!(soliton == expected)) {
        report.ok = false;
        report.detail = "g2=g3=0: got " + io::to_text(soliton) + ", expected " + io::to_text(expected);
        return report;
    }
    if (m < 2) return report;

    // The g1^{m-2} slice, read off the omega and xi parts.
    const auto slice = [&](const MultiPoly& p) {
        MultiPoly out;
        const auto i = p.table()->index("g1");
        for (const auto& [e, c] : p.terms())
            if (e[i] == static_cast<unsigned>(m - 2)) out.add_term(e, c);
        return out;
    };
    const CohomElem next(slice(f.omega_part()), slice(f.second_part()), Basis::general);
    const CohomElem next_expected(Rational(2, 2 * m - 1) * g1.pow(static_cast<unsigned>(m - 2)) * var("g2") * fm,
                                  MultiPoly(), Basis::general);
    if (!(next == next_expected)) {
        report.ok = false;
        report.detail = "g1^" + std::to_string(m - 2) + " slice: got " + io::to_text(next) + ", expected " +
                        io::to_text(next_expected);
    }
    return report;
}

std::map<Exponents, MultiPoly, MonomialOrder> group_by_parameters(const MultiPoly& part) {
    std::map<Exponents, MultiPoly, MonomialOrder> groups;
    const auto i = part.table()->index("lambda");
    for (const auto& [e, c] : part.terms()) {
        Exponents key = e;
        key[i] = 0;
        Exponents lam(e.size(), 0);
        lam[i] = e[i];
        auto [it, inserted] = groups.try_emplace(key, MultiPoly(part.table()));
        it->second.add_term(lam, c);
    }
    return groups;
}

CheckReport structure_check(int m) {
    require_at_least(m, 1, "structure_check: m");
    CheckReport report;
    const CohomElem f = reduced_faulhaber_W(m);
    const WeightReport w = weight_of(f);
    if (!w.homogeneous || !w.weight || *w.weight != 2 * m - 1) {
        report.ok = false;
        report.detail = "weight is " + (w.weight ? std::to_string(*w.weight) : std::string("inhomogeneous")) +
                        ", expected " + std::to_string(2 * m - 1);
        return report;
    }
    const auto& table = *f.omega_part().table();
    const auto i2 = table.index("g2");
    const auto i3 = table.index("g3");
    const auto check_part = [&](const MultiPoly& part, int target, const char* name) {
        for (const auto& [key, lam] : group_by_parameters(part)) {
            const int kl = 2 * static_cast<int>(key[i2]) + 3 * static_cast<int>(key[i3]);
            std::string where = std::string(name) + " part, g2^" + std::to_string(key[i2]) + " g3^" +
                                std::to_string(key[i3]);
            if (kl != target) {
                report.ok = false;
                report.detail = where + ": 2k+3l = " + std::to_string(kl) + ", expected " + std::to_string(target);
                return;
            }
            if (lam.degree("lambda") != static_cast<unsigned>(m)) {
                report.ok = false;
                report.detail = where + ": lambda-degree " + std::to_string(lam.degree("lambda"));
                return;
            }
            if (m >= 2 && lam.min_degree("lambda") < 2) {
                report.ok = false;
                report.detail = where + ": no double zero at lambda = 0";
                return;
            }
        }
    };
    check_part(f.omega_part(), m, "omega");
    if (report.ok) check_part(f.second_part(), m - 1, "eta");
    return report;
}

CohomElem elliptic_bernoulli(int index, BernoulliRoute route) {
    const int n = half_index(index, "elliptic_bernoulli");
    switch (route) {
        case BernoulliRoute::direct: return bernoulli_direct(n);
        case BernoulliRoute::period_expansion: return bernoulli_period_expansion(n);
        case BernoulliRoute::halphen: return halphen_route_table().get(static_cast<std::size_t>(n - 1));
    }
    throw std::invalid_argument("elliptic_bernoulli: unknown route");
}

CohomElem elliptic_bernoulli(int index) {
    const CohomElem main = elliptic_bernoulli(index, BernoulliRoute::period_expansion);
    for (auto route : {BernoulliRoute::direct, BernoulliRoute::halphen}) {
        const CohomElem other = elliptic_bernoulli(index, route);
        if (!(other == main))
            throw std::logic_error("elliptic_bernoulli(" + std::to_string(index) + "): route " + route_name(route) +
                                   " gives " + io::to_text(other) + ", period-expansion gives " +
                                   io::to_text(main));
    }
    return main;
}

CohomElem to_general_basis(const CohomElem& reduced) {
    if (reduced.basis() != Basis::reduced) throw std::invalid_argument("to_general_basis: expects the reduced basis");
    const ws::CurveParams params;
    const std::map<std::string, MultiPoly> shift{{"g2", params.reduced_g2()}, {"g3", params.reduced_g3()}};
    const MultiPoly a = reduced.omega_part().substitute(shift);
    const MultiPoly b = reduced.second_part().substitute(shift);
    return CohomElem(a + q(1, 12) * var("g1") * b, b, Basis::general);
}

CheckReport discriminant_specialization(int index) {
    const int n = half_index(index, "discriminant_specialization");
    if (n < 2) throw std::invalid_argument("discriminant_specialization: index must be >= 4");
    CheckReport report;
    const MultiPoly g1 = var("g1");
    const CohomElem b = elliptic_bernoulli(index);
    const std::map<std::string, MultiPoly> onto{{"g2", q(1, 12) * g1.pow(2)}, {"g3", q(1, 216) * g1.pow(3)}};
    const MultiPoly a = b.omega_part().substitute(onto);
    const MultiPoly s = b.second_part().substitute(onto);
    const CohomElem got(a + q(1, 12) * g1 * s, s, Basis::general);
    const CohomElem expected(MultiPoly(), -bernoulli_number(index) * g1.pow(static_cast<unsigned>(n)),
                             Basis::general);
    if (!(got == expected)) {
        report.ok = false;
        report.detail = "got " + io::to_text(got) + ", expected " + io::to_text(expected);
    }
    return report;
}

CheckReport faulhaber_lambda2_check(int m) {
    require_at_least(m, 2, "faulhaber_lambda2_check: m");
    CheckReport report;
    const CohomElem got = lambda_coefficient(reduced_faulhaber_W(m), 2);
    const CohomElem expected = MultiPoly(8) * elliptic_bernoulli(2 * m - 2);
    if (!(got == expected)) {
        report.ok = false;
        report.detail = "lambda^2 coefficient " + io::to_text(got) + ", 8 x Bernoulli " + io::to_text(expected);
    }
    return report;
}

CheckReport general_lambda2_check(int m) {
    require_at_least(m, 2, "general_lambda2_check: m");
    CheckReport report;
    const CohomElem got = lambda_coefficient(elliptic_faulhaber(m), 2);
    const CohomElem expected = MultiPoly(8) * to_general_basis(elliptic_bernoulli(2 * m - 2));
    if (!(got == expected)) {
        report.ok = false;
        report.detail = "lambda^2 coefficient " + io::to_text(got) + ", shifted 8 x Bernoulli " +
                        io::to_text(expected);
    }
    return report;
}

CohomElem in_x(const CohomElem& c) {
    const MultiPoly x = var("x");
    const MultiPoly lam = q(1, 2) * (x * x + x);
    return c.substitute("lambda", lam);
}

}  // namespace elliptica::faulhaber
