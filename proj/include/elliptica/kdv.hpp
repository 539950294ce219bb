#pragma once

#include "elliptica/diffpoly.hpp"
#include "elliptica/rational.hpp"

namespace elliptica::kdv {

/// T_k in normalized canonical form: rank 2k, irreducible, integer
/// coefficients, u_{k-2}^2 with coefficient 1 (k >= 2).
struct CanonicalDensity {
    int k = 0;
    DiffPoly body;
};

/// sigma_1 = u_0, sigma_{m+1} = -sigma_m' - sum_{i=1}^{m-1} sigma_i sigma_{m-i}.
///
/// Results are memoized in a process-wide table guarded by a mutex; the
/// whole fill runs under the lock, so concurrent callers never duplicate
/// work. Throws std::invalid_argument for m < 1.
DiffPoly sigma(int m);

/// Irreducible representative of p modulo total x-derivatives.
///
/// Repeatedly picks the monomial whose highest derivative u_j (j >= 1) has
/// the largest j among those occurring linearly and integrates by parts:
///   N u_{j-1}^a u_j  ->  -N' u_{j-1}^{a+1} / (a+1).
/// Throws std::invalid_argument if p is not rank-homogeneous.
DiffPoly canonicalize(const DiffPoly& p);

/// True when no monomial contains its highest derivative u_j (j >= 1)
/// to the first power.
bool is_irreducible(const DiffPoly& p);

/// T_k = (-1)^{k-1} canonicalize(sigma_{2k-1}). Throws std::logic_error if
/// the normalization invariant fails, std::invalid_argument for k < 1.
CanonicalDensity density(int k);

/// Coefficient of u_0^k in T_k, 2(2k-3)!/(k!(k-2)!) for k > 1 and 1 for
/// k = 1. Cross-checked against density(k); throws std::logic_error on
/// disagreement.
Rational top_u_coefficient(int k);

/// The closed form alone, without the density cross-check.
Rational top_u_closed_form(int k);

}  // namespace elliptica::kdv
