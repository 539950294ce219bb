#include <gmpxx.h>

#include "elliptica/faulhaber.hpp"
#include "support.hpp"

using namespace elliptica;
namespace F = elliptica::faulhaber;

namespace {

// Akiyama-Tanigawa; its B_1 is +1/2, so only even indices are compared.
Rational akiyama_tanigawa(int k) {
    std::vector<mpq_class> a(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) {
        a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    return Rational(a[0]);
}

MultiPoly lam() { return var("lambda"); }
MultiPoly g2() { return var("g2"); }
MultiPoly g3() { return var("g3"); }
MultiPoly omega() { return var("omega"); }
MultiPoly eta() { return var("eta"); }

// Sign of every coefficient of a lambda-polynomial alternates.
bool alternating(const MultiPoly& p) {
    int last = 0;
    for (unsigned d = p.min_degree("lambda"); d <= p.degree("lambda"); ++d) {
        const Rational c = p.coefficient_of("lambda", d).constant_term();
        if (c.is_zero()) return false;
        if (last != 0 && c.sign() == last) return false;
        last = c.sign();
    }
    return true;
}

}  // namespace

TEST_SUITE("faulhaber") {

TEST_CASE("Bernoulli numbers against the Akiyama-Tanigawa oracle") {
    CHECK(F::bernoulli_number(1) == Rational(-1, 2));
    for (int k = 0; k <= 40; k += 2) {
        CAPTURE(k);
        CHECK(F::bernoulli_number(k) == akiyama_tanigawa(k));
    }
    for (int k = 3; k <= 21; k += 2) CHECK(F::bernoulli_number(k).is_zero());
}

TEST_CASE("classical Faulhaber polynomials against brute-force power sums") {
    for (int m = 1; m <= 10; ++m) {
        const MultiPoly f = F::classical_faulhaber(m);
        mpz_class sum = 0;
        for (long n = 1; n <= 30; ++n) {
            mpz_class term;
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * m - 1));
            sum += term;
            CAPTURE(m);
            CAPTURE(n);
            CHECK(f.substitute("lambda", MultiPoly(Rational(n * (n + 1) / 2))) == MultiPoly(Rational(sum)));
        }
    }
}

TEST_CASE("classical F_6") {
    const MultiPoly expected = Rational(1, 3) * lam().pow(2) *
                               (Rational(16) * lam().pow(4) - Rational(32) * lam().pow(3) + Rational(34) * lam().pow(2) -
                                Rational(20) * lam() + MultiPoly(5));
    CHECK(F::classical_faulhaber(6) == expected);
}

TEST_CASE("low-order reduced polynomials") {
    CHECK(F::reduced_faulhaber_W(1).to_poly() == Rational(-4) * eta() * lam());
    CHECK(F::reduced_faulhaber_W(2).to_poly() == Rational(2, 3) * g2() * omega() * lam().pow(2));
    CHECK(F::reduced_faulhaber_W(3).to_poly() ==
          Rational(-8, 5) * g2() * eta() * lam().pow(2) * (Rational(3) * lam() - MultiPoly(2)) +
              Rational(8, 5) * g3() * omega() * lam().pow(2) * (Rational(2) * lam() - MultiPoly(3)));
}

TEST_CASE("general F_4 with the soliton-consistent sign") {
    const MultiPoly g1 = var("g1"), xi = var("xi");
    const MultiPoly expected =
        (Rational(-4, 21) * g1.pow(3) * xi + Rational(2, 21) * g1.pow(2) * g2() * omega()) * lam().pow(2) *
            (Rational(6) * lam().pow(2) - Rational(4) * lam() + MultiPoly(1)) -
        Rational(8, 21) * g1 * g2() * xi * lam().pow(2) * (Rational(26) * lam().pow(2) - Rational(29) * lam() + MultiPoly(9)) +
        Rational(8, 7) * g1 * g3() * omega() * lam().pow(2) * (Rational(3) * lam().pow(2) - Rational(2) * lam() - MultiPoly(3)) +
        Rational(2, 21) * g2().pow(2) * omega() * lam().pow(2) *
            (Rational(25) * lam().pow(2) - Rational(40) * lam() + MultiPoly(24)) -
        Rational(32, 7) * g3() * xi * lam().pow(2) * (Rational(5) * lam().pow(2) - Rational(15) * lam() + MultiPoly(9));
    CHECK(F::elliptic_faulhaber(4).to_poly() == expected);
}

TEST_CASE("weight, soliton limit and structure") {
    for (int m = 1; m <= 9; ++m) {
        CAPTURE(m);
        CHECK(weight_of(F::elliptic_faulhaber(m)).weight == 2 * m - 1);
        CHECK(weight_of(F::reduced_faulhaber_W(m)).weight == 2 * m - 1);
        const F::CheckReport sol = F::soliton_specialization_check(m);
        CAPTURE(sol.detail);
        CHECK(sol.ok);
        const F::CheckReport st = F::structure_check(m);
        CAPTURE(st.detail);
        CHECK(st.ok);
    }
}

TEST_CASE("reductions of the general polynomial") {
    for (int m = 1; m <= 8; ++m) {
        CAPTURE(m);
        const CohomElem general = F::elliptic_faulhaber(m);
        CHECK(general.substitute("g1", MultiPoly()).relabel(Basis::reduced) == F::reduced_faulhaber_W(m));
        CHECK(general.substitute("g3", MultiPoly()) == F::reduced_faulhaber_J(m));
        const CohomElem shifted = F::to_general_basis(F::reduced_faulhaber_W(m));
        CHECK(shifted.substitute("g1", MultiPoly()).relabel(Basis::reduced) == F::reduced_faulhaber_W(m));
    }
}

TEST_CASE("elliptic Bernoulli numbers agree along all three routes") {
    for (int index = 2; index <= 20; index += 2) {
        CAPTURE(index);
        const CohomElem a = F::elliptic_bernoulli(index, F::BernoulliRoute::direct);
        CHECK(F::elliptic_bernoulli(index, F::BernoulliRoute::period_expansion) == a);
        CHECK(F::elliptic_bernoulli(index, F::BernoulliRoute::halphen) == a);
        CHECK(weight_of(a).weight == index + 1);
    }
}

TEST_CASE("computed elliptic Bernoulli numbers") {
    CHECK(F::elliptic_bernoulli(2).to_poly() == Rational(1, 12) * g2() * omega());
    CHECK(F::elliptic_bernoulli(4).to_poly() == Rational(-3, 5) * g3() * omega() + Rational(2, 5) * g2() * eta());
    CHECK(F::elliptic_bernoulli(14).to_poly() ==
          Rational(864) * g2() * (g2().pow(3) + Rational(36) * g3().pow(2)) * omega() -
              Rational(36288) * g2().pow(2) * g3() * eta());
}

TEST_CASE("discriminant specialization and the lambda^2 relation") {
    for (int index = 4; index <= 20; index += 2) {
        const F::CheckReport r = F::discriminant_specialization(index);
        CAPTURE(r.detail);
        CHECK(r.ok);
    }
    for (int m = 3; m <= 10; ++m) {
        const F::CheckReport r = F::faulhaber_lambda2_check(m);
        CAPTURE(r.detail);
        CHECK(r.ok);
    }
    for (int m = 3; m <= 8; ++m) CHECK(F::general_lambda2_check(m).ok);
    MESSAGE("m=2 general-basis lambda^2 relation: " << F::general_lambda2_check(2).detail);
}

TEST_CASE("x^3 coefficient of F_3 in x") {
    const MultiPoly c = F::in_x(F::elliptic_faulhaber(3)).to_poly().coefficient_of("x", 3);
    CHECK(c == g2() * var("xi") - Rational(2) * g3() * omega());
}

TEST_CASE("sign alternation probe (reported only)") {
    int alternating_parts = 0, total = 0;
    for (int m = 2; m <= 10; ++m) {
        const CohomElem f = F::reduced_faulhaber_W(m);
        for (const MultiPoly* part : {&f.omega_part(), &f.second_part()})
            for (const auto& [key, poly] : F::group_by_parameters(*part)) {
                ++total;
                if (alternating(poly)) ++alternating_parts;
            }
    }
    MESSAGE("alternating lambda-polynomials in F_2^W..F_10^W: " << alternating_parts << " of " << total);
}

TEST_CASE("sign pattern of elliptic Bernoulli numbers (reported only)") {
    for (int m = 2; m <= 10; ++m) {
        const CohomElem b = F::elliptic_bernoulli(2 * m);
        const int s = (m % 2 == 1) ? 1 : -1;  // (-1)^{m-1}
        bool ok = true;
        for (const auto& [e, c] : b.omega_part().terms()) ok = ok && c.sign() == s;
        for (const auto& [e, c] : b.second_part().terms()) ok = ok && c.sign() == -s;
        MESSAGE("B_" << 2 * m << " sign pattern " << (ok ? "holds" : "fails"));
    }
}

}  // TEST_SUITE
