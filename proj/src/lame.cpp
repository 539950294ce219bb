#include "elliptica/lame.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>

#include "elliptica/faulhaber.hpp"
#include "elliptica/poly_io.hpp"

namespace elliptica::lame {

namespace {

using nlohmann::json;

Rational q(long num, long den = 1) { return Rational(num, den); }

MultiPoly E() { return var("E"); }
MultiPoly n_sym() { return var("n"); }

MultiPoly linear_in_n(long a, long b) { return a * n_sym() + MultiPoly(b); }

void require_concrete(int n, const char* what) {
    if (n < 1 || n > 5)
        throw std::invalid_argument(std::string(what) + ": n must be in 1..5, got " + std::to_string(n));
}

MultiPoly lambda_of(std::optional<int> n) {
    if (n) return MultiPoly(Rational(static_cast<long>(*n) * (*n + 1), 2));
    return q(1, 2) * (n_sym() * n_sym() + n_sym());
}

// c_j = binomial(-1/2, j)
std::vector<Rational> inverse_sqrt_coefficients(int order) {
    std::vector<Rational> c{Rational(1)};
    for (int j = 1; j <= order; ++j) c.push_back(c.back() * Rational(-(2 * j - 1), 2 * j));
    return c;
}

// Leading (e1, e2, e3) exponent triple among terms mentioning a root.
struct RootLead {
    Exponents exps;
    Rational coeff;
    std::array<unsigned, 3> power{};
};

std::optional<RootLead> leading_root_term(const MultiPoly& p, const std::array<std::size_t, 3>& idx) {
    std::optional<RootLead> best;
    for (const auto& [e, c] : p.terms()) {
        const std::array<unsigned, 3> pw{e[idx[0]], e[idx[1]], e[idx[2]]};
        if (pw == std::array<unsigned, 3>{0, 0, 0}) continue;
        if (!best || pw > best->power) best = RootLead{e, c, pw};
    }
    return best;
}

}  // namespace

int SpectralPoly::max_k() const {
    if (n) return std::numeric_limits<int>::max();
    return static_cast<int>(b.size()) - 1;
}

MultiPoly SpectralPoly::coefficient(int k) const {
    if (k < 0) throw std::invalid_argument("SpectralPoly: negative index");
    if (static_cast<std::size_t>(k) < b.size()) return b[static_cast<std::size_t>(k)];
    if (n && k > 2 * *n + 1) return MultiPoly();
    throw std::out_of_range("spectral coefficient b_" + std::to_string(k) + " is not available");
}

MultiPoly DosNumerator::numerator() const {
    if (!n) throw std::logic_error("DosNumerator::numerator: n is symbolic");
    MultiPoly p;
    for (int k = 0; k <= std::min(*n, order()); ++k)
        p += a[static_cast<std::size_t>(k)] * E().pow(static_cast<unsigned>(*n - k));
    return p;
}

MultiPoly builtin_spectral_b(int k) {
    const MultiPoly n = n_sym();
    const MultiPoly g2 = var("g2"), g3 = var("g3");
    switch (k) {
        case 1: return MultiPoly();
        case 2:
            return q(-1, 120) * g2 * n * linear_in_n(1, 1) * linear_in_n(2, -1) * linear_in_n(2, 1) *
                   linear_in_n(2, 3);
        case 3:
            return q(-1, 840) * g3 * n * linear_in_n(1, 1) * linear_in_n(2, -3) * linear_in_n(2, -1) *
                   linear_in_n(2, 1) * linear_in_n(2, 3) * linear_in_n(2, 5);
        case 4: {
            const MultiPoly quartic =
                56 * n.pow(4) + 76 * n.pow(3) - 94 * n.pow(2) + 201 * n + MultiPoly(630);
            return q(1, 201600) * g2.pow(2) * n * linear_in_n(1, -1) * linear_in_n(1, 1) * linear_in_n(2, -1) *
                   linear_in_n(2, 1) * linear_in_n(2, 3) * quartic;
        }
        default: break;
    }
    if (k > 4)
        throw std::out_of_range("builtin_spectral_b: b_" + std::to_string(k) +
                                " is not built in; supply it with load_spectral_table");
    throw std::invalid_argument("builtin_spectral_b: k must be >= 1, got " + std::to_string(k));
}

SpectralPoly builtin_spectral() {
    SpectralPoly s;
    s.b.push_back(MultiPoly(1));
    for (int k = 1; k <= 4; ++k) s.b.push_back(builtin_spectral_b(k));
    return s;
}

SpectralPoly load_spectral_table(const json& doc) {
    if (!doc.is_object()) throw SpectralTableError("/", "expected an object");
    if (!doc.contains("max_k") || !doc["max_k"].is_number_integer() || doc["max_k"].get<long>() < 1)
        throw SpectralTableError("/max_k", "missing or not a positive integer");
    const auto max_k = doc["max_k"].get<int>();
    if (!doc.contains("b") || !doc["b"].is_array())
        throw SpectralTableError("/b", "missing or not an array");
    if (doc["b"].size() != static_cast<std::size_t>(max_k))
        throw SpectralTableError("/b", "has " + std::to_string(doc["b"].size()) + " entries, max_k is " +
                                           std::to_string(max_k));
    SpectralPoly s;
    s.b.push_back(MultiPoly(1));
    for (int k = 1; k <= max_k; ++k) {
        const std::string where = "/b/" + std::to_string(k - 1);
        MultiPoly bk;
        try {
            bk = io::multipoly_from_json(doc["b"][static_cast<std::size_t>(k - 1)], standard_symbols(), where);
        } catch (const io::SchemaError& e) {
            throw SpectralTableError(e.where(), e.what());
        }
        for (const auto& name : bk.used_symbols())
            if (name != "n" && name != "g2" && name != "g3")
                throw SpectralTableError(where, "unexpected symbol '" + name + "'");
        if (k == 1 && !bk.is_zero()) throw SpectralTableError(where, "b_1 must vanish");
        const WeightReport w = weight_of(bk);
        if (!w.homogeneous || (w.weight && *w.weight != 2 * k))
            throw SpectralTableError(where, "b_" + std::to_string(k) + " is not homogeneous of weight " +
                                                std::to_string(2 * k));
        if (bk.degree("n") > static_cast<unsigned>(5 * k / 2))
            throw SpectralTableError(where, "degree in n is " + std::to_string(bk.degree("n")) + ", above " +
                                                std::to_string(5 * k / 2));
        if (k <= 4 && bk != builtin_spectral_b(k))
            throw SpectralTableError(where, "disagrees with the built-in b_" + std::to_string(k));
        s.b.push_back(std::move(bk));
    }
    return s;
}

SpectralPoly load_spectral_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpectralTableError(path, "cannot open file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpectralTableError(path, e.what());
    }
    return load_spectral_table(doc);
}

MultiPoly reduce_symmetric_roots(const MultiPoly& p) {
    const auto& table = *p.table();
    const std::array<std::size_t, 3> idx{table.index("e1"), table.index("e2"), table.index("e3")};
    const MultiPoly e1 = var("e1"), e2 = var("e2"), e3 = var("e3");
    const MultiPoly s1 = e1 + e2 + e3;
    const MultiPoly s2 = e1 * e2 + e1 * e3 + e2 * e3;
    const MultiPoly s3 = e1 * e2 * e3;
    const MultiPoly s2_value = q(-1, 4) * var("g2");
    const MultiPoly s3_value = q(1, 4) * var("g3");

    MultiPoly work = p;
    MultiPoly out(p.table());
    while (auto lead = leading_root_term(work, idx)) {
        const auto [a, b, c] = lead->power;
        if (a < b || b < c)
            throw std::invalid_argument("reduce_symmetric_roots: not symmetric in e1, e2, e3 (leading e1^" +
                                        std::to_string(a) + " e2^" + std::to_string(b) + " e3^" +
                                        std::to_string(c) + ")");
        Exponents rest = lead->exps;
        for (auto i : idx) rest[i] = 0;
        const MultiPoly head = MultiPoly::monomial(lead->coeff, rest, p.table());
        work -= head * s1.pow(a - b) * s2.pow(b - c) * s3.pow(c);
        if (a == b) out += head * s2_value.pow(b - c) * s3_value.pow(c);
    }
    return out + work;
}

MultiPoly printed_radicand(int n) {
    require_concrete(n, "printed_radicand");
    const MultiPoly e = E();
    const MultiPoly g2 = var("g2"), g3 = var("g3");
    const auto root_product = [](auto factor) {
        MultiPoly prod(1);
        for (const char* r : {"e1", "e2", "e3"}) prod *= factor(var(r));
        return prod;
    };
    switch (n) {
        case 1: return e.pow(3) - q(1, 4) * g2 * e + q(1, 4) * g3;
        case 2: return 4 * e.pow(5) - 21 * g2 * e.pow(3) - 27 * g3 * e.pow(2) + 27 * g2.pow(2) * e + 81 * g2 * g3;
        case 3:
            return e.pow(7) - q(63, 2) * g2 * e.pow(5) - q(297, 2) * g3 * e.pow(4) + q(4185, 16) * g2.pow(2) * e.pow(3) +
                   q(18225, 8) * g2 * g3 * e.pow(2) - q(3375, 16) * (g2.pow(3) - 27 * g3.pow(2)) * e;
        case 4:
            return (e.pow(3) - 52 * g2 * e - 560 * g3) * root_product([&](const MultiPoly& ek) {
                       return e.pow(2) - 10 * ek * e - 35 * ek.pow(2) - 7 * g2;
                   });
        default:
            return (e.pow(2) - 27 * g2.pow(2)) * root_product([&](const MultiPoly& ek) {
                       return e.pow(3) + 15 * ek * e.pow(2) + (315 * ek.pow(2) - 132 * g2) * e - 675 * ek.pow(3) -
                              540 * g3;
                   });
    }
}

SpectralPoly spectral_from_radicand(int n) {
    require_concrete(n, "spectral_from_radicand");
    const MultiPoly r = reduce_symmetric_roots(printed_radicand(n));
    const auto degree = static_cast<unsigned>(2 * n + 1);
    if (r.degree("E") != degree)
        throw std::logic_error("spectral_from_radicand: radicand has degree " + std::to_string(r.degree("E")) +
                               " in E, expected " + std::to_string(degree));
    const MultiPoly lead = r.coefficient_of("E", degree);
    if (!lead.is_constant()) throw std::logic_error("spectral_from_radicand: leading coefficient is not a number");
    const Rational scale = lead.constant_term();
    SpectralPoly s;
    s.n = n;
    for (unsigned k = 0; k <= degree; ++k) s.b.push_back(r.coefficient_of("E", degree - k) / scale);
    return s;
}

std::vector<MultiPoly> dos_series_faulhaber_side(std::optional<int> n, int order) {
    if (order < 0) throw std::invalid_argument("dos_series_faulhaber_side: order must be >= 0");
    const MultiPoly lambda = lambda_of(n);
    const MultiPoly pbar = var("pbar");
    std::vector<MultiPoly> r{MultiPoly(1)};
    for (int k = 1; k <= order; ++k) {
        const CohomElem f = faulhaber::reduced_faulhaber_W(k).substitute("lambda", lambda);
        // (A omega + B eta) / (2 omega) = A/2 - (B/2) pbar
        const MultiPoly over_two_omega = q(1, 2) * (f.omega_part() - f.second_part() * pbar);
        r.push_back(Rational(2 * k - 1) / Rational(2).pow(static_cast<unsigned>(2 * k - 1)) * over_two_omega);
    }
    return r;
}

DosNumerator match_numerator(const SpectralPoly& spectral, int order) {
    if (order < 0) throw std::invalid_argument("match_numerator: order must be >= 0");
    if (spectral.max_k() < order)
        throw std::out_of_range("match_numerator: spectral coefficient b_" + std::to_string(spectral.max_k() + 1) +
                                " is missing for order " + std::to_string(order));
    const auto len = static_cast<std::size_t>(order) + 1;

    // t = (1 + sum_k b_k y^k)^{-1/2}, truncated at y^order
    std::vector<MultiPoly> s(len, MultiPoly());
    for (int k = 1; k <= order; ++k) s[static_cast<std::size_t>(k)] = spectral.coefficient(k);
    const auto binom = inverse_sqrt_coefficients(order);
    std::vector<MultiPoly> t(len, MultiPoly());
    std::vector<MultiPoly> power(len, MultiPoly());
    power[0] = MultiPoly(1);
    for (int j = 0; j <= order; ++j) {
        for (std::size_t i = 0; i < len; ++i)
            if (!power[i].is_zero()) t[i] += binom[static_cast<std::size_t>(j)] * power[i];
        std::vector<MultiPoly> next(len, MultiPoly());
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t l = 1; i + l < len; ++l)
                if (!power[i].is_zero() && !s[l].is_zero()) next[i + l] += power[i] * s[l];
        power = std::move(next);
    }

    const auto r = dos_series_faulhaber_side(spectral.n, order);
    DosNumerator out;
    out.n = spectral.n;
    out.a.push_back(MultiPoly(1));
    for (std::size_t k = 1; k < len; ++k) {
        MultiPoly ak = r[k];
        for (std::size_t j = 0; j < k; ++j) ak -= out.a[j] * t[k - j];
        out.a.push_back(std::move(ak));
    }
    return out;
}

DosNumerator numerator_for_integer_n(int n) {
    require_concrete(n, "numerator_for_integer_n");
    return match_numerator(spectral_from_radicand(n), n);
}

MultiPoly falling_factor(int k) {
    if (k < 0) throw std::invalid_argument("falling_factor: k must be >= 0");
    MultiPoly u(1);
    for (long root = -1; root <= k - 1; ++root) u *= linear_in_n(1, -root);
    return u;
}

std::optional<MultiPoly> divide_by_falling_factor(const MultiPoly& a, int k) {
    MultiPoly rest = a;
    for (long root = -1; root <= k - 1; ++root) {
        auto quotient = divide_by_linear(rest, "n", Rational(root));
        if (!quotient) return std::nullopt;
        rest = std::move(*quotient);
    }
    return rest;
}

ReducedCoefficientReport reduced_coefficient_check(int k, const MultiPoly& reduced_coefficient, const SpectralPoly& spectral) {
    ReducedCoefficientReport report;
    report.k = k;
    const MultiPoly got = match_numerator(spectral, k).a[static_cast<std::size_t>(k)];
    const MultiPoly expected = falling_factor(k) * reduced_coefficient;
    if (got != expected) {
        report.ok = false;
        report.detail = "a_" + std::to_string(k) + " = " + io::to_text(got) + ", tabulated U_k a_hat = " +
                        io::to_text(expected);
    }
    return report;
}

ReducedCoefficientReport reduced_coefficient_evaluation_check(int k, const MultiPoly& reduced_coefficient, int n) {
    require_concrete(n, "reduced_coefficient_evaluation_check");
    ReducedCoefficientReport report;
    report.k = k;
    const MultiPoly expected =
        (falling_factor(k) * reduced_coefficient).substitute("n", MultiPoly(Rational(static_cast<long>(n))));
    const DosNumerator num = match_numerator(spectral_from_radicand(n), std::max(k, n));
    const MultiPoly got = num.a[static_cast<std::size_t>(k)];
    if (got != expected) {
        report.ok = false;
        report.detail = "n=" + std::to_string(n) + ": a_" + std::to_string(k) + " = " + io::to_text(got) +
                        ", tabulated U_k a_hat = " + io::to_text(expected);
    }
    return report;
}

}  // namespace elliptica::lame
