#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "elliptica/cohom.hpp"
#include "elliptica/multipoly.hpp"

// Floating-point evaluation on real rectangular lattices (g2^3 - 27 g3^2 > 0).
// Every symbolic object is computed exactly first and only then evaluated.

namespace elliptica::numeval {

class UnsupportedLattice : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Real curve y^2 = 4x^3 - g2 x - g3 with roots e1 > e2 > e3.
struct RealCurve {
    double g2 = 0.0;
    double g3 = 0.0;
    double e1 = 0.0, e2 = 0.0, e3 = 0.0;

    /// Throws UnsupportedLattice when the discriminant is not positive.
    static RealCurve from_invariants(double g2, double g3);
};

/// omega: real half-period. eta: zeta(omega).
struct PeriodPair {
    double omega = 0.0;
    double eta = 0.0;
};

/// omega = pi / (2 AGM(sqrt(e1-e3), sqrt(e1-e2))); eta by quadrature of the
/// regularized second-kind integral after x = e1 + t^2.
PeriodPair periods(const RealCurve& curve);

/// Evaluates A omega + B eta with (g2, g3, omega, eta) and any `extra`
/// symbol values.
double evaluate(const CohomElem& c, const RealCurve& curve, const PeriodPair& p,
                const std::map<std::string, double>& extra = {});

/// Phi_m(x) = F_m^W((x^2+x)/2) / (2 B_{2m-2}) on a fixed curve. The exact
/// polynomials are prepared once; operator() only evaluates.
class PhiEvaluator {
public:
    /// m >= 2. Throws std::domain_error when the elliptic Bernoulli number
    /// vanishes on the curve.
    PhiEvaluator(int m, const RealCurve& curve);

    double operator()(double x) const;
    int m() const { return m_; }

private:
    int m_;
    std::vector<double> lambda_coefficients_;  // index = power of lambda
    double denominator_;
};

double eval_phi(int m, double x, const RealCurve& curve);

/// 2 F_m(lambda) / ((2m-1) B_{2m-2}), the g2 = g3 = 0 degeneration.
class ClassicalPhi {
public:
    explicit ClassicalPhi(int m);
    double operator()(double x) const;

private:
    std::vector<double> lambda_coefficients_;
    double denominator_;
};

/// (1 - cos 2 pi x) / (2 pi^2).
double conjecture_target(double x);

struct ScanRow {
    int m = 0;
    double max_distance = 0.0;
};

/// Max-norm distance from the target on `grid` for m = 3..m_max. A null
/// curve scans the classical degeneration.
std::vector<ScanRow> conjecture3_scan(int m_max, const RealCurve* curve, const std::vector<double>& grid);

/// Evenly spaced points, both ends included.
std::vector<double> linspace(double lo, double hi, int points);

}  // namespace elliptica::numeval
