#include <random>
#include <thread>
#include <vector>

#include "elliptica/kdv.hpp"
#include "support.hpp"

using namespace elliptica;

namespace {

DiffPoly u(unsigned j) { return DiffPoly::u(j); }

}  // namespace

TEST_SUITE("kdv") {

TEST_CASE("first densities") {
    CHECK(kdv::density(1).body == u(0));
    CHECK(kdv::density(2).body == u(0) * u(0));
    CHECK(kdv::density(3).body == u(1) * u(1) + Rational(2) * u(0) * u(0) * u(0));
    CHECK(kdv::density(4).body ==
          u(2) * u(2) + Rational(10) * u(0) * u(1) * u(1) + Rational(5) * u(0) * u(0) * u(0) * u(0));
}

TEST_CASE("sigma recursion") {
    CHECK(kdv::sigma(1) == u(0));
    CHECK(kdv::sigma(2) == -u(1));
    // sigma_3 = u_2 - u_0^2
    CHECK(kdv::sigma(3) == u(2) - u(0) * u(0));
    CHECK_THROWS_AS(kdv::sigma(0), std::invalid_argument);
    CHECK_THROWS_AS(kdv::density(0), std::invalid_argument);
}

TEST_CASE("densities are irreducible with integer coefficients") {
    for (int k = 1; k <= 10; ++k) {
        CAPTURE(k);
        const DiffPoly t = kdv::density(k).body;
        CHECK(t.homogeneous_rank() == 2 * k);
        CHECK(kdv::is_irreducible(t));
        for (const auto& [e, c] : t.terms()) CHECK(c.is_integer());
    }
}

TEST_CASE("top coefficients satisfy the convolution identity") {
    // b_k = sum_{i=1}^{k-1} b_i b_{k-i}, b_1 = 1 (Catalan numbers shifted).
    std::vector<Rational> b{Rational(0), Rational(1)};
    for (int k = 2; k <= 10; ++k) {
        Rational s;
        for (int i = 1; i < k; ++i) s += b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
        b.push_back(s);
        CHECK(kdv::top_u_closed_form(k) == s);
        CHECK(kdv::top_u_coefficient(k) == s);
    }
}

TEST_CASE("canonical form ignores total derivatives") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int rank = 4 + trial % 8;
        const DiffPoly p = testing::random_density(rng, rank);
        const DiffPoly q = testing::random_density(rng, rank - 1);
        if (p.is_zero()) continue;
        CAPTURE(p);
        CAPTURE(q);
        const DiffPoly cp = kdv::canonicalize(p);
        CHECK(kdv::is_irreducible(cp));
        CHECK(kdv::canonicalize(p + total_x_derivative(q)) == cp);
    }
}

TEST_CASE("a pure total derivative canonicalizes to zero") {
    CHECK(kdv::canonicalize(u(0) * u(1)).is_zero());
    CHECK(kdv::canonicalize(total_x_derivative(u(0) * u(2) * u(2))).is_zero());
    CHECK_THROWS_AS(kdv::canonicalize(u(0) + u(0) * u(0)), std::invalid_argument);
}

TEST_CASE("concurrent callers see the same memoized densities") {
    std::vector<DiffPoly> results(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < results.size(); ++i)
        pool.emplace_back([&results, i] { results[i] = kdv::density(9).body; });
    for (auto& t : pool) t.join();
    for (const auto& r : results) CHECK(r == results.front());
}

}  // TEST_SUITE
