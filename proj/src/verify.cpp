#include "elliptica/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "elliptica/faulhaber.hpp"
#include "elliptica/kdv.hpp"
#include "elliptica/lame.hpp"
#include "elliptica/numeval.hpp"
#include "elliptica/poly_io.hpp"
#include "elliptica/weierstrass.hpp"

#ifndef ELLIPTICA_FIXTURE_DIR
#define ELLIPTICA_FIXTURE_DIR "fixtures"
#endif

namespace elliptica::verify {

namespace {

using nlohmann::json;
namespace W = weierstrass;
namespace F = faulhaber;

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    void expect(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) {
            r_.passed = false;
            r_.failures.push_back(what);
        }
    }

    template <class T>
    void expect_equal(const T& got, const T& expected, const std::string& label) {
        expect(got == expected, label + ": got " + io::to_text(got) + ", expected " + io::to_text(expected));
    }

    /// Runs `body`; an exception counts as one failed check.
    void guarded(const std::string& label, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, label + ": " + e.what());
        }
    }

    void note(const std::string& s) { r_.notes.push_back(s); }

private:
    CriterionResult& r_;
};

MultiPoly poly(const json& doc, const std::string& path) { return io::multipoly_from_json(doc, standard_symbols(), path); }

CohomElem cohom(const json& doc, Basis basis, const std::string& path) {
    return CohomElem::from_poly(poly(doc, path), basis);
}

MultiPoly num(long v) { return MultiPoly(Rational(v)); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Akiyama-Tanigawa; yields B_1 = +1/2, which never matters for even indices.
Rational akiyama_tanigawa(int k) {
    std::vector<mpq_class> a(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) {
        a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] =
                j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    return Rational(a[0]);
}

void kdv_densities(Recorder& rec) {
    const json doc = load_fixture("kdv_densities.json");
    for (std::size_t i = 0; i < doc.at("densities").size(); ++i) {
        const json& e = doc["densities"][i];
        const int k = e.at("k").get<int>();
        rec.guarded("T_" + std::to_string(k), [&] {
            rec.expect_equal(kdv::density(k).body,
                             io::diffpoly_from_json(e.at("T"), "/densities/" + std::to_string(i) + "/T"),
                             "T_" + std::to_string(k));
        });
    }
    for (int k = 1; k <= 10; ++k) {
        const std::string label = "T_" + std::to_string(k);
        rec.guarded(label, [&] {
            const DiffPoly t = kdv::density(k).body;
            bool integral = true;
            for (const auto& [exps, c] : t.terms()) integral = integral && c.is_integer();
            rec.expect(integral, label + " has a non-integer coefficient");
            rec.expect(t.homogeneous_rank() == 2 * k, label + " is not of rank " + std::to_string(2 * k));
            rec.expect(kdv::is_irreducible(t), label + " is not irreducible");
            if (k >= 2) {
                Exponents sq(static_cast<std::size_t>(k - 1), 0);
                sq.back() = 2;
                rec.expect(t.coefficient(sq) == Rational(1),
                           label + ": coefficient of u_" + std::to_string(k - 2) + "^2 is " +
                               t.coefficient(sq).to_string());
                const auto uk = static_cast<unsigned>(k);
                const Rational top = Rational(2) * Rational::factorial(2 * uk - 3) /
                                     (Rational::factorial(uk) * Rational::factorial(uk - 2));
                const Rational got = t.coefficient(Exponents{static_cast<std::uint32_t>(k)});
                rec.expect(got == top, label + ": coefficient of u^" + std::to_string(k) + " is " + got.to_string() +
                                           ", closed form gives " + top.to_string());
            }
        });
    }
}

void halphen_table(Recorder& rec) {
    const json doc = load_fixture("halphen_table.json");
    const json& cells = doc.at("cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int n = cells[i].at("n").get<int>();
        const int r = cells[i].at("r").get<int>();
        rec.expect_equal(W::halphen(n, r), poly(cells[i].at("value"), "/cells/" + std::to_string(i) + "/value"),
                         "B_" + std::to_string(r) + "^(" + std::to_string(n) + ")");
    }
    rec.note("Halphen table cells compared: " + std::to_string(cells.size()));
    for (int n = 0; n <= 12; ++n) {
        for (int r = 0; r <= n; ++r) {
            const MultiPoly b = W::halphen(n, r);
            const std::string label = "B_" + std::to_string(r) + "^(" + std::to_string(n) + ")";
            if (r == 1) {
                rec.expect(b.is_zero(), label + " should vanish, got " + io::to_text(b));
                continue;
            }
            bool positive = !b.is_zero();
            for (const auto& [exps, c] : b.terms()) positive = positive && c.sign() > 0;
            rec.expect(positive, label + " is not a nonzero polynomial with positive coefficients: " + io::to_text(b));
        }
    }
}

void period_integrals(Recorder& rec) {
    const json doc = load_fixture("period_integrals.json");
    const json& list = doc.at("general");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const int n = list[i].at("n").get<int>();
        rec.expect_equal(W::period_integral_general(n),
                         cohom(list[i].at("K"), Basis::general, "/general/" + std::to_string(i) + "/K"),
                         "K_" + std::to_string(n) + "*");
    }
    for (int n = 0; n <= 12; ++n) {
        const std::string label = "K_" + std::to_string(n);
        const CohomElem recurrence = W::period_integral_reduced(n);
        const CohomElem via_halphen = W::kn_via_halphen(n);
        const CohomElem specialized =
            W::period_integral_general(n).substitute("g1", MultiPoly()).relabel(Basis::reduced);
        rec.expect_equal(via_halphen, recurrence, label + " Halphen route vs recurrence");
        rec.expect_equal(specialized, recurrence, label + " g1=0 specialization vs recurrence");
        rec.expect_equal(W::kn_lemniscatic(n), recurrence.substitute("g3", MultiPoly()), label + " lemniscatic");
        const CohomElem equi = recurrence.substitute("g2", MultiPoly());
        rec.expect_equal(W::kn_equianharmonic(n), equi, label + " equianharmonic");
        if (n % 3 == 2) rec.expect(equi.is_zero(), label + " should vanish at g2 = 0, got " + io::to_text(equi));
    }
}

void elliptic_faulhaber(Recorder& rec) {
    const auto start = std::chrono::steady_clock::now();
    const json intro = load_fixture("faulhaber_intro.json");
    const json& ell = intro.at("elliptic");
    for (std::size_t i = 0; i < ell.size(); ++i) {
        const int m = ell[i].at("m").get<int>();
        rec.expect_equal(F::elliptic_faulhaber(m),
                         cohom(ell[i].at("F"), Basis::general, "/elliptic/" + std::to_string(i) + "/F"),
                         "F_" + std::to_string(m) + " (general)");
    }
    const json table = load_fixture("reduced_faulhaber.json");
    const json& red = table.at("reduced");
    for (std::size_t i = 0; i < red.size(); ++i) {
        const int m = red[i].at("m").get<int>();
        rec.expect_equal(F::reduced_faulhaber_W(m),
                         cohom(red[i].at("F"), Basis::reduced, "/reduced/" + std::to_string(i) + "/F"),
                         "F_" + std::to_string(m) + "^W");
    }
    for (int m = 1; m <= 8; ++m) {
        const std::string label = "F_" + std::to_string(m);
        for (const auto& [name, value] :
             {std::pair{" (general)", F::elliptic_faulhaber(m)}, std::pair{"^W", F::reduced_faulhaber_W(m)}}) {
            const WeightReport w = weight_of(value);
            rec.expect(w.homogeneous && w.weight == 2 * m - 1,
                       label + name + " is not homogeneous of weight " + std::to_string(2 * m - 1));
        }
        const F::CheckReport sol = F::soliton_specialization_check(m);
        rec.expect(sol.ok, label + " soliton specialization: " + sol.detail);
        const F::CheckReport st = F::structure_check(m);
        rec.expect(st.ok, label + " structure: " + st.detail);
    }
    const MultiPoly x3 = F::in_x(F::elliptic_faulhaber(3)).to_poly().coefficient_of("x", 3);
    const MultiPoly printed = poly(intro.at("x3_probe"), "/x3_probe");
    rec.note("x^3 coefficient of F_3((x^2+x)/2): " + io::to_text(x3) +
             (x3 == printed ? " (matches the remark)" : " (remark prints " + io::to_text(printed) + ")"));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.expect(seconds < 60.0, "runtime " + fmt(seconds) + " s exceeds 60 s");
}

void elliptic_bernoulli(Recorder& rec) {
    const json doc = load_fixture("elliptic_bernoulli.json");
    const json& list = doc.at("numbers");
    const std::pair<F::BernoulliRoute, const char*> routes[] = {
        {F::BernoulliRoute::direct, "direct"},
        {F::BernoulliRoute::period_expansion, "period expansion"},
        {F::BernoulliRoute::halphen, "Halphen"},
    };
    for (std::size_t i = 0; i < list.size(); ++i) {
        const int index = list[i].at("index").get<int>();
        const CohomElem expected = cohom(list[i].at("B"), Basis::reduced, "/numbers/" + std::to_string(i) + "/B");
        for (const auto& [route, name] : routes)
            rec.expect_equal(F::elliptic_bernoulli(index, route), expected,
                             "B_" + std::to_string(index) + " via " + name + " route");
    }
    for (const json& c : doc.at("classical")) {
        const int index = c.at("index").get<int>();
        rec.expect(akiyama_tanigawa(index) == Rational::parse(c.at("value").get<std::string>()),
                   "classical B_" + std::to_string(index) + " transcription disagrees with the oracle");
    }
    const MultiPoly g1 = var("g1");
    const std::map<std::string, MultiPoly> nodal{
        {"g2", g1.pow(2) / Rational(12)},
        {"g3", g1.pow(3) / Rational(216)},
        {"eta", var("xi") + g1 * var("omega") / Rational(12)},
    };
    for (int n = 2; n <= 8; ++n) {
        const MultiPoly got = F::elliptic_bernoulli(2 * n).to_poly().substitute(nodal);
        const MultiPoly expected = -akiyama_tanigawa(2 * n) * g1.pow(static_cast<unsigned>(n)) * var("xi");
        rec.expect_equal(got, expected, "discriminant specialization of B_" + std::to_string(2 * n));
        const F::CheckReport lib = F::discriminant_specialization(2 * n);
        rec.expect(lib.ok, "library discriminant check, index " + std::to_string(2 * n) + ": " + lib.detail);
    }
    for (int m = 2; m <= 9; ++m) {
        const F::CheckReport w = F::faulhaber_lambda2_check(m);
        rec.note("lambda^2 of F_" + std::to_string(m) + "^W = 8 B_" + std::to_string(2 * m - 2) + ": " +
                 (w.ok ? "holds" : w.detail));
    }
    for (int m = 2; m <= 8; ++m) {
        const F::CheckReport g = F::general_lambda2_check(m);
        rec.note("general-basis lambda^2 relation, m=" + std::to_string(m) + ": " + (g.ok ? "holds" : g.detail));
    }
}

void bernoulli_hurwitz(Recorder& rec) {
    for (int n = 1; n <= 8; ++n) {
        const W::PrincipalPartReport p = W::principal_part_check(n);
        rec.expect(p.ok, "principal part of wp^" + std::to_string(n) + ": " + p.diagnostic);
    }
    const json doc = load_fixture("principal_parts.json");
    const json& list = doc.at("coefficients");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json& e = list[i];
        const std::string path = "/coefficients/" + std::to_string(i);
        const int r = e.at("r").get<int>();
        const int k = e.at("k").get<int>();
        const MultiPoly series = poly(e.at("series"), path + "/series");
        const MultiPoly closed = poly(e.at("closed"), path + "/closed");
        const MultiPoly via_bh = poly(e.at("bh_factor"), path + "/bh_factor") * W::bernoulli_hurwitz(2 * k);
        for (int n = r + 1; n <= 8; ++n) {
            const std::string label = "B_" + std::to_string(r) + "^(" + std::to_string(n) + ")";
            const MultiPoly b = W::halphen(n, r);
            rec.expect_equal(series.substitute("n", num(n)), b, label + " from the series coefficient");
            rec.expect_equal(closed.substitute("n", num(n)), b, label + " closed form in c_" + std::to_string(k));
            rec.expect_equal(via_bh.substitute("n", num(n)), b, label + " through BH_" + std::to_string(2 * k));
        }
    }
}

void classical_oracle(Recorder& rec) {
    for (int m = 1; m <= 8; ++m) {
        const MultiPoly f = F::classical_faulhaber(m);
        mpz_class sum = 0;
        for (long n = 0; n <= 20; ++n) {
            if (n > 0) {
                mpz_class term;
                mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * m - 1));
                sum += term;
            }
            const MultiPoly value = f.substitute("lambda", num(n * (n + 1) / 2));
            rec.expect(value == MultiPoly(Rational(sum)), "F_" + std::to_string(m) + " at n=" + std::to_string(n) +
                                                              " gives " + io::to_text(value) +
                                                              ", power sum is " + sum.get_str());
        }
    }
    const json doc = load_fixture("faulhaber_intro.json");
    for (std::size_t i = 0; i < doc.at("classical").size(); ++i) {
        const json& e = doc["classical"][i];
        const int m = e.at("m").get<int>();
        const MultiPoly printed = poly(e.at("F"), "/classical/" + std::to_string(i) + "/F");
        const MultiPoly f = F::classical_faulhaber(m);
        if (f != printed)
            rec.note("printed F_" + std::to_string(m) + " = " + io::to_text(printed) + " differs from " + io::to_text(f));
    }
}

void lame_symbolic(Recorder& rec) {
    const json doc = load_fixture("lame_symbolic.json");
    for (std::size_t i = 0; i < doc.at("b").size(); ++i) {
        const int k = doc["b"][i].at("k").get<int>();
        rec.expect_equal(lame::builtin_spectral_b(k), poly(doc["b"][i].at("b"), "/b/" + std::to_string(i) + "/b"),
                         "b_" + std::to_string(k));
    }
    const lame::DosNumerator dos = lame::match_numerator(lame::builtin_spectral(), 4);
    for (std::size_t i = 0; i < doc.at("a").size(); ++i) {
        const int k = doc["a"][i].at("k").get<int>();
        const MultiPoly a = dos.a[static_cast<std::size_t>(k)];
        const std::string label = "a_" + std::to_string(k);
        rec.expect_equal(a, poly(doc["a"][i].at("a"), "/a/" + std::to_string(i) + "/a"), label);
        rec.expect(lame::divide_by_falling_factor(a, k).has_value(), label + " is not divisible by U_" + std::to_string(k));
        rec.expect(a.degree("n") == static_cast<unsigned>(5 * k / 2),
                   label + " has degree " + std::to_string(a.degree("n")) + " in n");
        const WeightReport w = weight_of(a);
        rec.expect(w.homogeneous && w.weight == 2 * k, label + " is not of weight " + std::to_string(2 * k));
    }
    const json table = load_fixture("lame_reduced.json");
    for (std::size_t i = 0; i < table.at("reduced").size(); ++i) {
        const int k = table["reduced"][i].at("k").get<int>();
        if (k > 4) continue;
        const lame::ReducedCoefficientReport rep =
            lame::reduced_coefficient_check(k, poly(table["reduced"][i].at("a_hat"), "/reduced/" + std::to_string(i)));
        rec.expect(rep.ok, "reduced a_" + std::to_string(k) + ": " + rep.detail);
    }
}

MultiPoly spectral_as_poly(const lame::SpectralPoly& s) {
    const auto degree = static_cast<unsigned>(2 * *s.n + 1);
    MultiPoly out;
    for (unsigned k = 0; k <= degree; ++k) out += s.coefficient(static_cast<int>(k)) * var("E").pow(degree - k);
    return out;
}

void lame_numeric(Recorder& rec) {
    const json doc = load_fixture("lame_numerators.json");
    for (std::size_t i = 0; i < doc.at("radicands").size(); ++i) {
        const int n = doc["radicands"][i].at("n").get<int>();
        rec.expect_equal(spectral_as_poly(lame::spectral_from_radicand(n)),
                         poly(doc["radicands"][i].at("R"), "/radicands/" + std::to_string(i) + "/R"),
                         "monic radicand, n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < doc.at("numerators").size(); ++i) {
        const int n = doc["numerators"][i].at("n").get<int>();
        rec.guarded("P_" + std::to_string(n), [&] {
            rec.expect_equal(lame::numerator_for_integer_n(n).numerator(),
                             poly(doc["numerators"][i].at("P"), "/numerators/" + std::to_string(i) + "/P"),
                             "P_" + std::to_string(n));
        });
    }
    const json table = load_fixture("lame_reduced.json");
    for (std::size_t i = 0; i < table.at("reduced").size(); ++i) {
        const int k = table["reduced"][i].at("k").get<int>();
        const MultiPoly a_hat = poly(table["reduced"][i].at("a_hat"), "/reduced/" + std::to_string(i));
        for (int n = 1; n <= 5; ++n) {
            const lame::ReducedCoefficientReport rep = lame::reduced_coefficient_evaluation_check(k, a_hat, n);
            rec.expect(rep.ok, "reduced a_" + std::to_string(k) + " at " + rep.detail);
        }
    }
}

void numerics(Recorder& rec) {
    using numeval::RealCurve;
    const double pi = std::numbers::pi;
    const RealCurve lemn = RealCurve::from_invariants(4.0, 0.0);
    const numeval::PeriodPair lp = numeval::periods(lemn);
    const double legendre = lp.eta * lp.omega - pi / 4.0;
    rec.expect(std::abs(legendre) < 1e-10, "eta*omega - pi/4 = " + fmt(legendre) + " on g2=4, g3=0");

    for (const auto& [g2, g3] : {std::pair{4.0, 0.0}, std::pair{7.0, 1.3}, std::pair{3.0, -0.4}}) {
        const numeval::PeriodPair base = numeval::periods(RealCurve::from_invariants(g2, g3));
        for (double c : {0.5, 2.0, 3.0}) {
            const numeval::PeriodPair s =
                numeval::periods(RealCurve::from_invariants(std::pow(c, 4) * g2, std::pow(c, 6) * g3));
            const double dw = std::abs(s.omega * c / base.omega - 1.0);
            const double de = std::abs(s.eta / (c * base.eta) - 1.0);
            rec.expect(dw < 1e-9 && de < 1e-9, "scaling c=" + fmt(c) + " on (" + fmt(g2) + ", " + fmt(g3) +
                                                   "): relative errors " + fmt(dw) + ", " + fmt(de));
        }
    }

    const std::vector<double> grid = numeval::linspace(-1.5, 0.5, 101);
    for (int m = 2; m <= 8; ++m) {
        const numeval::PhiEvaluator phi(m, lemn);
        const std::string label = "Phi_" + std::to_string(m);
        rec.expect(std::abs(phi(0.0)) < 1e-10, label + "(0) = " + fmt(phi(0.0)));
        rec.expect(std::abs(phi(-1.0)) < 1e-10, label + "(-1) = " + fmt(phi(-1.0)));
        double worst = 0.0;
        for (double x : grid) worst = std::max(worst, std::abs(phi(x) - phi(-1.0 - x)));
        rec.expect(worst < 1e-10, label + " symmetry defect " + fmt(worst));
        const double x = 1e-8;
        rec.note(label + "(x)/x^2 at x=1e-8: " + fmt(phi(x) / (x * x)));
    }

    std::ostringstream table;
    table << "distance to (1-cos 2 pi x)/(2 pi^2) on [-1.5, 0.5], 101 points: m classical lemniscatic";
    const auto classical = numeval::conjecture3_scan(8, nullptr, grid);
    const auto elliptic = numeval::conjecture3_scan(8, &lemn, grid);
    for (std::size_t i = 0; i < classical.size(); ++i)
        table << " | " << classical[i].m << ' ' << fmt(classical[i].max_distance) << ' '
              << fmt(elliptic[i].max_distance);
    rec.note(table.str());
}

struct Criterion {
    const char* title;
    void (*run)(Recorder&);
};

const Criterion criteria[] = {
    {"KdV densities", kdv_densities},
    {"Halphen coefficients", halphen_table},
    {"period integrals", period_integrals},
    {"elliptic Faulhaber polynomials", elliptic_faulhaber},
    {"elliptic Bernoulli numbers", elliptic_bernoulli},
    {"Bernoulli-Hurwitz bridge", bernoulli_hurwitz},
    {"classical power sums", classical_oracle},
    {"Lame symbolic coefficients", lame_symbolic},
    {"Lame integer-n numerators", lame_numeric},
    {"numerics", numerics},
};

const std::vector<std::pair<std::string, std::vector<int>>>& suites() {
    static const std::vector<std::pair<std::string, std::vector<int>>> s{
        {"kdv", {1}},
        {"table1", {2}},
        {"periods", {3}},
        {"faulhaber", {4}},
        {"bernoulli", {5}},
        {"bh", {6}},
        {"classical", {7}},
        {"lame-symbolic", {8}},
        {"lame-numeric", {9}},
        {"numerics", {10}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
    };
    return s;
}

}  // namespace

std::string fixture_dir() {
    if (const char* env = std::getenv("ELLIPTICA_FIXTURES"); env && *env) return env;
    return ELLIPTICA_FIXTURE_DIR;
}

nlohmann::json load_fixture(const std::string& name) {
    const std::string path = fixture_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("fixture " + path + " is not valid JSON: " + e.what());
    }
}

const std::vector<std::string>& criterion_titles() {
    static const std::vector<std::string> titles = [] {
        std::vector<std::string> t{""};
        for (const Criterion& c : criteria) t.emplace_back(c.title);
        return t;
    }();
    return titles;
}

CriterionResult run_criterion(int id) {
    if (id < 1 || id > static_cast<int>(std::size(criteria)))
        throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    const Criterion& c = criteria[id - 1];
    CriterionResult result;
    result.id = id;
    result.title = c.title;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    rec.guarded(c.title, [&] { c.run(rec); });
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (id == 1) rec.expect(result.seconds < 10.0, "runtime " + fmt(result.seconds) + " s exceeds 10 s");
    return result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, ids] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
    for (const auto& [name, ids] : suites())
        if (name == suite) return ids;
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(suite)) out.push_back(run_criterion(id));
    return out;
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "criterion " << r.id << " (" << r.title << "): " << (r.passed ? "PASS" : "FAIL") << " [" << r.checks
       << " checks, " << r.seconds << " s]";
    if (!r.failures.empty()) {
        os << ' ' << r.failures.front();
        if (r.failures.size() > 1) os << " (+" << r.failures.size() - 1 << " more)";
    }
    return os.str();
}

}  // namespace elliptica::verify
