#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "elliptica/numeval.hpp"
#include "elliptica/weierstrass.hpp"
#include "support.hpp"

using namespace elliptica;
using numeval::RealCurve;

namespace {

constexpr double pi = std::numbers::pi;

double gk(std::function<double(double)> f) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-15);
}

// Real half-period by x = e1 + t^2.
double omega_oracle(const RealCurve& c) {
    const double a = c.e1 - c.e2, b = c.e1 - c.e3;
    return gk([=](double t) { return 1.0 / std::sqrt((t * t + a) * (t * t + b)); });
}

// |omega'| by x = e3 - t^2.
double imag_half_period(const RealCurve& c) {
    const double a = c.e1 - c.e3, b = c.e2 - c.e3;
    return gk([=](double t) { return 1.0 / std::sqrt((t * t + a) * (t * t + b)); });
}

// zeta(omega) from zeta(z) = 1/z - sum_{k>=2} c_k z^{2k-1}/(2k-1).
double eta_oracle(const RealCurve& c, double omega) {
    const std::map<std::string, double> at{{"g2", c.g2}, {"g3", c.g3}};
    double sum = 1.0 / omega;
    for (int k = 2; k <= 70; ++k)
        sum -= weierstrass::laurent_c(k).evaluate(at) * std::pow(omega, 2 * k - 1) / (2 * k - 1);
    return sum;
}

}  // namespace

TEST_SUITE("numeval") {

TEST_CASE("roots of the real cubic") {
    const RealCurve c = RealCurve::from_invariants(7.0, 1.3);
    CHECK(c.e1 > c.e2);
    CHECK(c.e2 > c.e3);
    CHECK(std::abs(c.e1 + c.e2 + c.e3) < 1e-12);
    for (double e : {c.e1, c.e2, c.e3}) CHECK(std::abs(4 * e * e * e - c.g2 * e - c.g3) < 1e-12);
    const RealCurve lemn = RealCurve::from_invariants(4.0, 0.0);
    CHECK(lemn.e1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(lemn.e2) < 1e-15);
    CHECK_THROWS_AS(RealCurve::from_invariants(0.0, 1.0), numeval::UnsupportedLattice);
    CHECK_THROWS_AS(RealCurve::from_invariants(3.0, 1.0), numeval::UnsupportedLattice);
}

TEST_CASE("periods against independent quadrature and series oracles") {
    for (const auto& [g2, g3] : {std::pair{4.0, 0.0}, std::pair{4.0, 0.5}, std::pair{7.0, 1.3}, std::pair{3.0, -0.4}}) {
        CAPTURE(g2);
        CAPTURE(g3);
        const RealCurve c = RealCurve::from_invariants(g2, g3);
        const numeval::PeriodPair p = numeval::periods(c);
        CHECK(std::abs(p.omega / omega_oracle(c) - 1.0) < 1e-10);
        // The zeta series at omega converges when |omega'| > omega / 2.
        if (imag_half_period(c) > 0.6 * p.omega) CHECK(std::abs(p.eta / eta_oracle(c, p.omega) - 1.0) < 1e-10);
    }
}

TEST_CASE("Legendre relation on the square lattice") {
    const numeval::PeriodPair p = numeval::periods(RealCurve::from_invariants(4.0, 0.0));
    CHECK(std::abs(p.eta * p.omega - pi / 4) < 1e-10);
}

TEST_CASE("period scaling law") {
    for (const auto& [g2, g3] : {std::pair{4.0, 0.0}, std::pair{7.0, 1.3}}) {
        const numeval::PeriodPair base = numeval::periods(RealCurve::from_invariants(g2, g3));
        for (double c : {0.5, 2.0, 3.0}) {
            const numeval::PeriodPair s =
                numeval::periods(RealCurve::from_invariants(std::pow(c, 4) * g2, std::pow(c, 6) * g3));
            CHECK(std::abs(s.omega * c / base.omega - 1.0) < 1e-9);
            CHECK(std::abs(s.eta / (c * base.eta) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("normalized curves vanish at 0 and -1 and are symmetric") {
    const RealCurve c = RealCurve::from_invariants(4.0, 0.0);
    const auto grid = numeval::linspace(-1.5, 0.5, 101);
    for (int m = 2; m <= 8; ++m) {
        CAPTURE(m);
        const numeval::PhiEvaluator phi(m, c);
        CHECK(std::abs(phi(0.0)) < 1e-10);
        CHECK(std::abs(phi(-1.0)) < 1e-10);
        for (double x : grid) CHECK(std::abs(phi(x) - phi(-1.0 - x)) < 1e-10);
        // Both Phi_m and the target behave like x^2 near zero.
        const double x = 1e-8;
        CHECK(std::abs(phi(x) / (x * x) - 1.0) < 1e-6);
    }
}

TEST_CASE("classical normalization") {
    for (int m = 2; m <= 8; ++m) {
        const numeval::ClassicalPhi phi(m);
        CHECK(std::abs(phi(0.0)) < 1e-14);
        CHECK(std::abs(phi(1e-8) / 1e-16 - 1.0) < 1e-6);
    }
    CHECK_THROWS_AS(numeval::ClassicalPhi(1), std::invalid_argument);
}

TEST_CASE("conjecture scan") {
    const auto at_zeros = numeval::conjecture3_scan(5, nullptr, {0.0, -1.0});
    REQUIRE(at_zeros.size() == 3);
    for (const auto& row : at_zeros) CHECK(row.max_distance < 1e-14);
    const auto grid = numeval::linspace(-1.5, 0.5, 101);
    const auto classical = numeval::conjecture3_scan(8, nullptr, grid);
    CHECK(classical.back().max_distance < classical.front().max_distance);
    const RealCurve lemn = RealCurve::from_invariants(4.0, 0.0);
    for (const auto& row : numeval::conjecture3_scan(8, &lemn, grid))
        MESSAGE("lemniscatic m=" << row.m << " distance " << row.max_distance);
    CHECK_THROWS_AS(numeval::conjecture3_scan(2, nullptr, grid), std::invalid_argument);
}

TEST_CASE("evaluation of cohomology elements") {
    const RealCurve c = RealCurve::from_invariants(4.0, 0.0);
    const numeval::PeriodPair p = numeval::periods(c);
    const CohomElem k(var("g2"), MultiPoly(Rational(-2)), Basis::reduced);
    CHECK(numeval::evaluate(k, c, p) == doctest::Approx(4.0 * p.omega - 2.0 * p.eta));
}

}  // TEST_SUITE
