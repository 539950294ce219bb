#include "elliptica/weierstrass.hpp"

#include <stdexcept>

#include "elliptica/memo.hpp"
#include "elliptica/poly_io.hpp"

namespace elliptica::weierstrass {

namespace {

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

Rational q(long num, long den = 1) { return Rational(num, den); }

MemoSequence<MultiPoly>& deriv_table() {
    static MemoSequence<MultiPoly> table([](std::size_t k, const std::vector<MultiPoly>& prev) {
        const MultiPoly wp = var("wp");
        if (k == 0) return wp;
        const MultiPoly& a = prev[k - 1];
        const MultiPoly second = 6 * wp.pow(2) - var("g1") * wp - q(1, 2) * var("g2");
        return cubic() * a.derivative("wp").derivative("wp") + second * a.derivative("wp");
    });
    return table;
}

MemoSequence<CohomElem>& general_periods() {
    static MemoSequence<CohomElem> table([](std::size_t n, const std::vector<CohomElem>& k) {
        const MultiPoly g1 = var("g1"), g2 = var("g2"), g3 = var("g3");
        switch (n) {
            case 0: return CohomElem(MultiPoly(2), MultiPoly(), Basis::general);
            case 1: return CohomElem(MultiPoly(), MultiPoly(-2), Basis::general);
            case 2: return CohomElem(q(1, 6) * g2, -q(1, 3) * g1, Basis::general);
            default: break;
        }
        const long m = static_cast<long>(n);
        CohomElem sum = q(2 * m - 2) * g1 * k[n - 1] + q(2 * m - 3) * g2 * k[n - 2] + q(2 * m - 4) * g3 * k[n - 3];
        return sum * MultiPoly(q(1, 8 * m - 4));
    });
    return table;
}

MemoSequence<CohomElem>& reduced_periods() {
    static MemoSequence<CohomElem> table([](std::size_t n, const std::vector<CohomElem>& k) {
        const MultiPoly g2 = var("g2"), g3 = var("g3");
        switch (n) {
            case 0: return CohomElem(MultiPoly(2), MultiPoly(), Basis::reduced);
            case 1: return CohomElem(MultiPoly(), MultiPoly(-2), Basis::reduced);
            case 2: return CohomElem(q(1, 6) * g2, MultiPoly(), Basis::reduced);
            default: break;
        }
        const long m = static_cast<long>(n);
        CohomElem sum = q(2 * m - 3) * g2 * k[n - 2] + q(2 * m - 4) * g3 * k[n - 3];
        return sum * MultiPoly(q(1, 8 * m - 4));
    });
    return table;
}

// Row n holds B_0^(n) .. B_n^(n).
MemoSequence<std::vector<MultiPoly>>& halphen_rows() {
    static MemoSequence<std::vector<MultiPoly>> table(
        [](std::size_t un, const std::vector<std::vector<MultiPoly>>& rows) {
            const long n = static_cast<long>(un);
            auto at = [&rows](long row, long r) -> MultiPoly {
                if (row < 0 || r < 0 || r > row) return MultiPoly();
                return rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(r)];
            };
            std::vector<MultiPoly> row(un + 1, MultiPoly());
            row[0] = MultiPoly(1);
            for (long r = 2; r <= n; ++r) {
                MultiPoly b = q((2 * n - 2 * r - 2) * (2 * n - 2 * r - 1), (2 * n - 2) * (2 * n - 1)) * at(n - 1, r);
                b += q(2 * n - 3, 4 * (2 * n - 1)) * at(n - 2, r - 2) * var("g2");
                b += q(n - 2, 2 * (2 * n - 1)) * at(n - 3, r - 3) * var("g3");
                row[static_cast<std::size_t>(r)] = std::move(b);
            }
            return row;
        });
    return table;
}

MemoSequence<MultiPoly>& laurent_table() {
    // entry i is c_{i+2}
    static MemoSequence<MultiPoly> table([](std::size_t i, const std::vector<MultiPoly>& c) {
        const long k = static_cast<long>(i) + 2;
        if (k == 2) return q(1, 20) * var("g2");
        if (k == 3) return q(1, 28) * var("g3");
        MultiPoly sum;
        for (long m = 2; m <= k - 2; ++m) sum += c[static_cast<std::size_t>(m - 2)] * c[static_cast<std::size_t>(k - m - 2)];
        return q(3, (2 * k + 1) * (k - 3)) * sum;
    });
    return table;
}

}  // namespace

MultiPoly CurveParams::reduced_g2() const { return g2 + q(1, 12) * g1.pow(2); }

MultiPoly CurveParams::reduced_g3() const { return g3 + q(1, 12) * g1 * g2 + q(1, 216) * g1.pow(3); }

MultiPoly cubic() {
    const MultiPoly wp = var("wp");
    return 4 * wp.pow(3) - var("g1") * wp.pow(2) - var("g2") * wp - var("g3");
}

MultiPoly deriv_poly(int k) {
    require_nonnegative(k, "deriv_poly: k");
    return deriv_table().get(static_cast<std::size_t>(k));
}

MultiPoly wp_derivative(int j) {
    require_nonnegative(j, "wp_derivative: j");
    const MultiPoly a = deriv_poly(j / 2);
    if (j % 2 == 0) return a;
    return a.derivative("wp") * var("dwp");
}

MultiPoly eliminate_odd_derivative(const MultiPoly& p) {
    const unsigned top = p.degree("dwp");
    if (top == 0) return p;
    const MultiPoly c = cubic();
    MultiPoly out(p.table());
    MultiPoly c_power(1);
    for (unsigned e = 0; e <= top; ++e) {
        const MultiPoly part = p.coefficient_of("dwp", e);
        if (e % 2 == 1) {
            if (!part.is_zero())
                throw std::invalid_argument("eliminate_odd_derivative: odd power dwp^" + std::to_string(e) +
                                            " in " + io::to_text(p));
            continue;
        }
        if (e > 0) c_power *= c;
        out += part * c_power;
    }
    return out;
}

CohomElem period_integral_general(int n) {
    require_nonnegative(n, "period_integral_general: n");
    return general_periods().get(static_cast<std::size_t>(n));
}

CohomElem period_integral_reduced(int n) {
    require_nonnegative(n, "period_integral_reduced: n");
    return reduced_periods().get(static_cast<std::size_t>(n));
}

CohomElem integrate_wp_powers(const MultiPoly& p, Basis basis) {
    if (p.contains("dwp"))
        throw std::invalid_argument("integrate_wp_powers: integrand still contains dwp: " + io::to_text(p));
    CohomElem total(basis);
    const unsigned top = p.degree("wp");
    for (unsigned n = 0; n <= top; ++n) {
        const MultiPoly coeff = p.coefficient_of("wp", n);
        if (coeff.is_zero()) continue;
        const int in = static_cast<int>(n);
        total += coeff * (basis == Basis::general ? period_integral_general(in) : period_integral_reduced(in));
    }
    return total;
}

MultiPoly halphen(int n, int r) {
    require_nonnegative(n, "halphen: n");
    if (r < 0 || r > n) return MultiPoly();
    return halphen_rows().get(static_cast<std::size_t>(n))[static_cast<std::size_t>(r)];
}

CohomElem kn_via_halphen(int n) {
    require_nonnegative(n, "kn_via_halphen: n");
    return CohomElem(2 * halphen(n, n), -2 * halphen(n, n - 1), Basis::reduced);
}

CohomElem kn_lemniscatic(int n) {
    require_nonnegative(n, "kn_lemniscatic: n");
    // The residue r = n mod 2 selects the omega (r = 0) or eta (r = 1) line.
    const int r = n % 2;
    const auto un = static_cast<unsigned>(n);
    Rational c = Rational(2) * Rational::factorial(un) / Rational::factorial(2 * un);
    for (int k = 1; k <= (n - 1) / 2; ++k) c *= Rational(4 * k - 2 * r + 1).pow(2);
    const MultiPoly scale = c * var("g2").pow(static_cast<unsigned>(n / 2));
    return CohomElem(scale * Rational(1 - r), scale * Rational(-2 * r), Basis::reduced);
}

CohomElem kn_equianharmonic(int n) {
    require_nonnegative(n, "kn_equianharmonic: n");
    const int t = n / 3;
    if (n % 3 == 2) return CohomElem(Basis::reduced);
    Rational c = Rational(2) / Rational(2).pow(static_cast<unsigned>(t));
    for (int k = 1; k <= t; ++k) c *= Rational(n - 3 * k + 1, 2 * n - 6 * k + 5);
    const MultiPoly scale = c * var("g3").pow(static_cast<unsigned>(t));
    if (n % 3 == 0) return CohomElem(scale, MultiPoly(), Basis::reduced);
    return CohomElem(MultiPoly(), -scale, Basis::reduced);
}

MultiPoly laurent_c(int k) {
    if (k < 2) throw std::invalid_argument("laurent_c: k must be >= 2, got " + std::to_string(k));
    return laurent_table().get(static_cast<std::size_t>(k - 2));
}

MultiPoly bernoulli_hurwitz(int index) {
    if (index < 4 || index % 2 != 0)
        throw std::invalid_argument("bernoulli_hurwitz: index must be even and >= 4, got " + std::to_string(index));
    const auto k = static_cast<unsigned>(index / 2);
    return Rational(static_cast<long>(2 * k)) * Rational::factorial(2 * k - 2) * laurent_c(static_cast<int>(k));
}

PrincipalPartReport principal_part_check(int n) {
    if (n < 1) throw std::invalid_argument("principal_part_check: n must be >= 1");
    PrincipalPartReport report;
    report.n = n;
    // wp = z^-2 (1 + S(t)), t = z^2, S = sum_k c_k t^k; truncate at t^{n-1}.
    const auto order = static_cast<std::size_t>(n);
    std::vector<MultiPoly> s(order, MultiPoly());
    for (int k = 2; k < n; ++k) s[static_cast<std::size_t>(k)] = laurent_c(k);
    std::vector<MultiPoly> power(order, MultiPoly());
    power[0] = MultiPoly(1);
    for (int step = 0; step < n; ++step) {
        std::vector<MultiPoly> next(power);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 1; i + j < order; ++j)
                if (!power[i].is_zero() && !s[j].is_zero()) next[i + j] += power[i] * s[j];
        power = std::move(next);
    }
    for (int r = 0; r < n; ++r) {
        const MultiPoly series = power[static_cast<std::size_t>(r)];
        const MultiPoly expected = halphen(n, r);
        if (report.ok && series != expected) {
            report.ok = false;
            report.diagnostic = "r=" + std::to_string(r) + ": series gives " + io::to_text(series) +
                                ", Halphen gives " + io::to_text(expected);
        }
        report.series_coefficients.push_back(series);
        report.halphen_coefficients.push_back(expected);
    }
    return report;
}

}  // namespace elliptica::weierstrass
