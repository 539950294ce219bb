#include "elliptica/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "elliptica/faulhaber.hpp"

namespace elliptica::numeval {

namespace {

constexpr double pi = std::numbers::pi;

double agm(double a, double b) {
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return 0.5 * (a + b);
}

std::vector<double> lambda_coefficients(const CohomElem& f, const RealCurve& curve, const PeriodPair& p) {
    const unsigned top = std::max(f.omega_part().degree("lambda"), f.second_part().degree("lambda"));
    std::vector<double> out;
    for (unsigned k = 0; k <= top; ++k) {
        const CohomElem ck(f.omega_part().coefficient_of("lambda", k), f.second_part().coefficient_of("lambda", k),
                           f.basis());
        out.push_back(evaluate(ck, curve, p));
    }
    return out;
}

double horner(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double lambda_of(double x) { return 0.5 * (x * x + x); }

}  // namespace

RealCurve RealCurve::from_invariants(double g2, double g3) {
    const double disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    if (!(disc > 0.0))
        throw UnsupportedLattice("only real rectangular lattices are supported: g2^3 - 27 g3^2 = " +
                                 std::to_string(disc) + " is not positive");
    // x^3 + p x + q with p = -g2/4, q = -g3/4, three real roots.
    const double p = -g2 / 4.0;
    const double q = -g3 / 4.0;
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    RealCurve c;
    c.g2 = g2;
    c.g3 = g3;
    c.e1 = r * std::cos(theta);
    c.e2 = r * std::cos(theta - 4.0 * pi / 3.0);
    c.e3 = r * std::cos(theta - 2.0 * pi / 3.0);
    if (c.e2 < c.e3) std::swap(c.e2, c.e3);
    return c;
}

PeriodPair periods(const RealCurve& curve) {
    const double a = curve.e1 - curve.e2;
    const double b = curve.e1 - curve.e3;
    PeriodPair out;
    out.omega = pi / (2.0 * agm(std::sqrt(b), std::sqrt(a)));
    // 1 - t^2/s with s = sqrt((t^2+a)(t^2+b)), written without cancellation.
    auto integrand = [a, b](double t) {
        const double t2 = t * t;
        const double s = std::sqrt((t2 + a) * (t2 + b));
        return ((a + b) * t2 + a * b) / (s * (s + t2));
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    const double tail = integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
    out.eta = -curve.e1 * out.omega + tail;
    return out;
}

double evaluate(const CohomElem& c, const RealCurve& curve, const PeriodPair& p,
                const std::map<std::string, double>& extra) {
    std::map<std::string, double> values = extra;
    values["g2"] = curve.g2;
    values["g3"] = curve.g3;
    values["omega"] = p.omega;
    values[std::string(second_symbol(c.basis()))] = p.eta;
    return c.to_poly().evaluate(values);
}

PhiEvaluator::PhiEvaluator(int m, const RealCurve& curve) : m_(m) {
    if (m < 2) throw std::invalid_argument("PhiEvaluator: m must be >= 2, got " + std::to_string(m));
    const PeriodPair p = periods(curve);
    lambda_coefficients_ = lambda_coefficients(faulhaber::reduced_faulhaber_W(m), curve, p);
    denominator_ = 2.0 * evaluate(faulhaber::elliptic_bernoulli(2 * m - 2), curve, p);
    if (denominator_ == 0.0)
        throw std::domain_error("PhiEvaluator: elliptic Bernoulli number of index " + std::to_string(2 * m - 2) +
                                " vanishes on g2=" + std::to_string(curve.g2) + ", g3=" + std::to_string(curve.g3));
}

double PhiEvaluator::operator()(double x) const { return horner(lambda_coefficients_, lambda_of(x)) / denominator_; }

double eval_phi(int m, double x, const RealCurve& curve) { return PhiEvaluator(m, curve)(x); }

ClassicalPhi::ClassicalPhi(int m) {
    if (m < 2) throw std::invalid_argument("ClassicalPhi: m must be >= 2, got " + std::to_string(m));
    const MultiPoly f = faulhaber::classical_faulhaber(m);
    for (unsigned k = 0; k <= f.degree("lambda"); ++k)
        lambda_coefficients_.push_back(f.coefficient_of("lambda", k).constant_term().to_double());
    denominator_ = ((2 * m - 1) * faulhaber::bernoulli_number(2 * m - 2) / Rational(2)).to_double();
}

double ClassicalPhi::operator()(double x) const { return horner(lambda_coefficients_, lambda_of(x)) / denominator_; }

double conjecture_target(double x) { return (1.0 - std::cos(2.0 * pi * x)) / (2.0 * pi * pi); }

std::vector<ScanRow> conjecture3_scan(int m_max, const RealCurve* curve, const std::vector<double>& grid) {
    if (m_max < 3) throw std::invalid_argument("conjecture3_scan: m_max must be >= 3");
    std::vector<ScanRow> rows;
    for (int m = 3; m <= m_max; ++m) {
        ScanRow row{m, 0.0};
        if (curve) {
            const PhiEvaluator phi(m, *curve);
            for (double x : grid) row.max_distance = std::max(row.max_distance, std::abs(phi(x) - conjecture_target(x)));
        } else {
            const ClassicalPhi phi(m);
            for (double x : grid) row.max_distance = std::max(row.max_distance, std::abs(phi(x) - conjecture_target(x)));
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2) throw std::invalid_argument("linspace: need at least two points");
    std::vector<double> out;
    for (int i = 0; i < points; ++i) out.push_back(lo + (hi - lo) * i / (points - 1));
    return out;
}

}  // namespace elliptica::numeval
