#pragma once

#include <string>
#include <vector>

#include "elliptica/cohom.hpp"
#include "elliptica/multipoly.hpp"

// Symbolic calculus of the elliptic function wp (symbol "wp") satisfying
//   wp'^2 = 4 wp^3 - g1 wp^2 - g2 wp - g3,
// and of its Weierstrass reduction g1 = 0. The variable z never appears:
// contour integrals are reduced to the cohomology basis (omega, xi) or
// (omega, eta).

namespace elliptica::weierstrass {

/// Curve parameters. The Weierstrass invariants of the shifted function are
/// derived on demand and never stored.
struct CurveParams {
    MultiPoly g1 = var("g1");
    MultiPoly g2 = var("g2");
    MultiPoly g3 = var("g3");

    /// g2 + g1^2/12
    MultiPoly reduced_g2() const;
    /// g3 + g1 g2/12 + g1^3/216
    MultiPoly reduced_g3() const;
};

/// 4 wp^3 - g1 wp^2 - g2 wp - g3.
MultiPoly cubic();

/// A_k^*(wp; g1, g2, g3) with wp^(2k) = A_k^*, from
///   A_0 = wp,  A_{k+1} = cubic * A_k'' + (6 wp^2 - g1 wp - g2/2) A_k'.
MultiPoly deriv_poly(int k);

/// The j-th z-derivative of wp as a polynomial in wp, dwp and g1..g3:
/// A_{j/2} for even j, A_{(j-1)/2}'(wp) * dwp for odd j.
MultiPoly wp_derivative(int j);

/// Replaces every dwp^2 by the cubic. Throws std::invalid_argument when an
/// odd power of dwp is present.
MultiPoly eliminate_odd_derivative(const MultiPoly& p);

/// K_n^* = contour integral of wp^n in the basis (omega, xi):
///   (8n-4) K_n = (2n-2) g1 K_{n-1} + (2n-3) g2 K_{n-2} + (2n-4) g3 K_{n-3}.
CohomElem period_integral_general(int n);

/// K_n for g1 = 0 in the basis (omega, eta).
CohomElem period_integral_reduced(int n);

/// Integrates a polynomial in wp (free of dwp) term by term, replacing wp^n
/// by K_n^* (general) or K_n (reduced).
CohomElem integrate_wp_powers(const MultiPoly& p, Basis basis);

/// Halphen coefficient B_r^(n), a polynomial in g2, g3; zero outside
/// 0 <= r <= n.
MultiPoly halphen(int n, int r);

/// 2 B_n^(n) omega - 2 B_{n-1}^(n) eta.
CohomElem kn_via_halphen(int n);

/// Closed forms on the lemniscatic (g3 = 0) and equianharmonic (g2 = 0)
/// loci, reduced basis.
CohomElem kn_lemniscatic(int n);
CohomElem kn_equianharmonic(int n);

/// Laurent coefficient c_k of wp = z^-2 + sum_{k>=2} c_k z^{2k-2}, k >= 2.
MultiPoly laurent_c(int k);

/// BH_{2k} = 2k (2k-2)! c_k. Takes the index 2k (even, >= 4).
MultiPoly bernoulli_hurwitz(int index);

struct PrincipalPartReport {
    int n = 0;
    bool ok = true;
    /// Coefficient of z^{-(2n-2r)} in the Laurent expansion of wp^n, r < n.
    std::vector<MultiPoly> series_coefficients;
    std::vector<MultiPoly> halphen_coefficients;
    std::string diagnostic;
};

/// Expands (z^-2 + c_2 z^2 + c_3 z^4 + ...)^n and compares each principal
/// part coefficient with B_r^(n) for 0 <= r < n.
PrincipalPartReport principal_part_check(int n);

}  // namespace elliptica::weierstrass
