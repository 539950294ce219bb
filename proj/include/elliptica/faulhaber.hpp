#pragma once

#include <map>
#include <string>

#include "elliptica/cohom.hpp"
#include "elliptica/multipoly.hpp"
#include "elliptica/rational.hpp"

namespace elliptica::faulhaber {

/// Outcome of an identity check; `detail` names the first failure.
struct CheckReport {
    bool ok = true;
    std::string detail;
};

/// B_k with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
Rational bernoulli_number(int k);

/// B_k(x) = sum_j C(k, j) B_j x^{k-j}, in the symbol "x".
MultiPoly bernoulli_poly(int k);

/// F_m(lambda), defined by B_{2m}(x+1) = 2m F_m((x^2+x)/2) + B_{2m}.
MultiPoly classical_faulhaber(int m);

/// Integral of T_m[2 lambda wp*] over a cycle, in the basis (omega, xi).
CohomElem elliptic_faulhaber(int m);

/// F_m^W: g1 = 0, basis (omega, eta). Computed directly from the g1 = 0
/// derivative polynomials.
CohomElem reduced_faulhaber_W(int m);

/// F_m^J: g3 = 0, basis (omega, xi).
CohomElem reduced_faulhaber_J(int m);

/// Checks F_m(lambda; g1, 0, 0) = -4/(2m-1) g1^{m-1} xi F_m(lambda) and the
/// next g1-slice, +2/(2m-1) g1^{m-2} g2 omega F_m(lambda).
CheckReport soliton_specialization_check(int m);

/// Weight 2m-1 and the reduced structure: omega-part monomials g2^k g3^l
/// with 2k+3l = m, eta-part with 2k+3l = m-1, each lambda-polynomial of
/// degree m with a double zero at 0 (m >= 2).
CheckReport structure_check(int m);

enum class BernoulliRoute {
    direct,            // (1/2) contour integral of (wp^{(n-1)})^2
    period_expansion,  // (-1)^{n-1}/2 D_n[K], D_n = x A_{n-1}(x)
    halphen,           // recurrence through the Halphen coefficients
};

/// The elliptic Bernoulli number with the given even index 2n >= 2 along
/// one route.
CohomElem elliptic_bernoulli(int index, BernoulliRoute route);

/// All three routes; throws std::logic_error naming the first disagreeing
/// pair.
CohomElem elliptic_bernoulli(int index);

/// Rewrites a reduced-basis element in the general basis:
/// g2 -> g2 + g1^2/12, g3 -> g3 + g1 g2/12 + g1^3/216, eta -> xi + g1 omega/12.
CohomElem to_general_basis(const CohomElem& reduced);

/// Substitutes g2 = g1^2/12, g3 = g1^3/216, eta = xi + g1 omega/12 into
/// the elliptic Bernoulli number of index 2n and compares with
/// -B_{2n} g1^n xi. Requires 2n >= 4.
CheckReport discriminant_specialization(int index);

/// Coefficient of lambda^2 in F_m^W against 8 times the elliptic Bernoulli
/// number of index 2m-2. Requires m >= 2.
CheckReport faulhaber_lambda2_check(int m);

/// Same relation in the general basis via to_general_basis.
CheckReport general_lambda2_check(int m);

/// Substitutes lambda = (x^2 + x)/2 into both parts.
CohomElem in_x(const CohomElem& c);

/// Splits one part of an elliptic Faulhaber polynomial by parameter
/// monomial: key is the exponent vector with lambda zeroed, value the
/// lambda-polynomial.
std::map<Exponents, MultiPoly, MonomialOrder> group_by_parameters(const MultiPoly& part);

}  // namespace elliptica::faulhaber
