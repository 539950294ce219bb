#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "elliptica/multipoly.hpp"

// Density of states of the Lame operator -d^2/dx^2 + n(n+1) wp(x):
//   rho(E) = P_n(E) / (2 pi sqrt(R_{2n+1}(E))),
// with monic P_n = E^n + a_1 E^{n-1} + ... and monic
// R_{2n+1} = E^{2n+1} + b_1 E^{2n} + ... . All coefficients are exact
// polynomials in n, g2, g3 and pbar = -eta/omega.

namespace elliptica::lame {

/// Spectral polynomial coefficients. b[0] = 1; b[k] for k >= 1.
/// `n` is set for a concrete integer n, empty for symbolic n.
struct SpectralPoly {
    std::optional<int> n;
    std::vector<MultiPoly> b;

    /// Highest k with b_k available (for concrete n every b_k is known:
    /// zero beyond 2n+1).
    int max_k() const;
    MultiPoly coefficient(int k) const;
};

struct DosNumerator {
    std::optional<int> n;
    /// a[0] = 1, a[k] for 1 <= k <= order.
    std::vector<MultiPoly> a;

    int order() const { return static_cast<int>(a.size()) - 1; }
    /// P_n(E) = sum_k a_k E^{n-k}; requires a concrete n.
    MultiPoly numerator() const;
};

/// Raised when a spectral table is malformed or violates an invariant.
class SpectralTableError : public std::runtime_error {
public:
    SpectralTableError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// b_1 .. b_4 in (n, g2, g3). Throws std::out_of_range for k > 4 (load a
/// table with load_spectral_table instead) and std::invalid_argument for
/// k < 1.
MultiPoly builtin_spectral_b(int k);

/// Symbolic spectral polynomial with the built-in b_1 .. b_4.
SpectralPoly builtin_spectral();

/// Reads `{"max_k": K, "b": [b_1, ..., b_K]}` with every b_k in the
/// polynomial schema over n, g2, g3. Checks b_1 = 0, weight 2k, degree in n
/// at most floor(5k/2), and agreement with the built-in b_k for k <= 4.
SpectralPoly load_spectral_table(const nlohmann::json& doc);
SpectralPoly load_spectral_table_file(const std::string& path);

/// The tabulated spectral polynomial of the n-gap operator, n = 1..5, made
/// monic; e1, e2, e3 are eliminated with e1+e2+e3 = 0,
/// e1e2+e1e3+e2e3 = -g2/4 and e1e2e3 = g3/4.
SpectralPoly spectral_from_radicand(int n);

/// The tabulated radicand exactly as printed (before normalization), as a
/// polynomial in E, e_k, g2, g3.
MultiPoly printed_radicand(int n);

/// Rewrites a polynomial symmetric in e1, e2, e3 through g2, g3. Throws
/// std::invalid_argument when the input is not symmetric.
MultiPoly reduce_symmetric_roots(const MultiPoly& p);

/// r_1 .. r_K of rho(E) 2 pi sqrt(E) = 1 + sum_k r_k E^{-k}:
///   r_k = (2k-1)/2^{2k-1} F_k^W(lambda) / (2 omega),  lambda = n(n+1)/2,
/// with eta/omega replaced by -pbar. Entry 0 is 1.
std::vector<MultiPoly> dos_series_faulhaber_side(std::optional<int> n, int order);

/// Solves for a_1 .. a_K by equating P_n(E) E^{-n} (R/E^{2n+1})^{-1/2}
/// with the Faulhaber series. Throws std::out_of_range naming the first
/// missing b_k.
DosNumerator match_numerator(const SpectralPoly& spectral, int order);

/// match_numerator(spectral_from_radicand(n), n).
DosNumerator numerator_for_integer_n(int n);

/// U_k(n) = (n+1) n (n-1) ... (n-k+1).
MultiPoly falling_factor(int k);

/// a_k / U_k(n) when the division is exact.
std::optional<MultiPoly> divide_by_falling_factor(const MultiPoly& a, int k);

struct ReducedCoefficientReport {
    int k = 0;
    bool ok = true;
    std::string detail;
};

/// Compares the symbolic a_k with U_k(n) times the tabulated reduced
/// coefficient. Uses `spectral` for b_k; k must not exceed spectral.max_k().
ReducedCoefficientReport reduced_coefficient_check(int k, const MultiPoly& reduced_coefficient,
                                 const SpectralPoly& spectral = builtin_spectral());

/// Evaluates U_k(n) times the tabulated reduced coefficient at a concrete n
/// and compares with a_k from numerator_for_integer_n(n).
ReducedCoefficientReport reduced_coefficient_evaluation_check(int k, const MultiPoly& reduced_coefficient, int n);

}  // namespace elliptica::lame
