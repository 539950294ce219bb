#include <algorithm>
#include <random>

#include "support.hpp"

using namespace elliptica;

TEST_SUITE("core") {

TEST_CASE("rational parsing and normalization") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
    CHECK(Rational::binomial(10, 3) == Rational(120));
    CHECK(Rational::factorial(6) == Rational(720));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = testing::random_rational(rng), b = testing::random_rational(rng),
                       c = testing::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("polynomial ring axioms on random samples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        const MultiPoly a = testing::random_poly(rng), b = testing::random_poly(rng), c = testing::random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * MultiPoly(1) == a);
    }
}

TEST_CASE("zero coefficients are never stored") {
    const MultiPoly g2 = var("g2");
    const MultiPoly p = g2 * Rational(1, 3) - g2 / Rational(3);
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
}

TEST_CASE("weights follow the symbol grading") {
    const MultiPoly f = var("g2") * var("omega") * var("lambda").pow(2);
    CHECK(weight_of(f).weight == 3);
    const WeightReport mixed = weight_of(var("g2") + var("g3"));
    CHECK_FALSE(mixed.homogeneous);
    CHECK(mixed.offending.has_value());
    const CohomElem k(var("g2"), var("g1"), Basis::general);
    CHECK(weight_of(k).weight == 3);
}

TEST_CASE("substitution and division by a linear factor") {
    const MultiPoly n = var("n");
    const MultiPoly p = (n - MultiPoly(2)) * (n + MultiPoly(1)) * var("g2");
    const auto q = divide_by_linear(p, "n", Rational(2));
    REQUIRE(q.has_value());
    CHECK(*q == (n + MultiPoly(1)) * var("g2"));
    CHECK_FALSE(divide_by_linear(p, "n", Rational(3)).has_value());
    CHECK(p.substitute("n", MultiPoly(2)).is_zero());
}

TEST_CASE("polynomial JSON round trip is exact and order independent") {
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        const MultiPoly p = testing::random_poly(rng, 6);
        nlohmann::json doc = io::to_json(p);
        CHECK(io::multipoly_from_json(doc) == p);
        auto& terms = doc["terms"];
        std::shuffle(terms.begin(), terms.end(), rng);
        CHECK(io::multipoly_from_json(doc) == p);
    }
}

TEST_CASE("serialization is deterministic") {
    const MultiPoly p = var("lambda") * var("g2") - Rational(4) * var("eta") * var("lambda");
    CHECK(io::to_json(p).dump() == io::to_json(p).dump());
    CHECK(io::to_text(p) == "-4*eta*lambda + g2*lambda");
}

TEST_CASE("schema errors name the offending element") {
    const nlohmann::json bad_symbol = {{"symbols", {"q"}}, {"terms", {{{"coeff", "1"}, {"exp", {1}}}}}};
    CHECK_THROWS_AS(io::multipoly_from_json(bad_symbol), io::SchemaError);
    const nlohmann::json bad_coeff = {{"symbols", {"g2"}}, {"terms", {{{"coeff", "0.5"}, {"exp", {1}}}}}};
    try {
        io::multipoly_from_json(bad_coeff);
        FAIL("expected a schema error");
    } catch (const io::SchemaError& e) {
        CHECK(e.where().find("/terms/0") != std::string::npos);
    }
    const nlohmann::json short_exp = {{"symbols", {"g2", "g3"}}, {"terms", {{{"coeff", "1"}, {"exp", {1}}}}}};
    CHECK_THROWS_AS(io::multipoly_from_json(short_exp), io::SchemaError);
}

TEST_CASE("differential polynomial JSON round trip") {
    std::mt19937 rng(5);
    for (int rank = 2; rank <= 12; ++rank) {
        const DiffPoly p = testing::random_density(rng, rank);
        CHECK(io::diffpoly_from_json(io::to_json(p)) == p);
    }
}

TEST_CASE("total derivative raises the rank by one") {
    std::mt19937 rng(9);
    for (int rank = 2; rank <= 14; ++rank) {
        const DiffPoly p = testing::random_density(rng, rank);
        if (p.is_zero()) continue;
        const DiffPoly d = total_x_derivative(p);
        if (d.is_zero()) continue;
        CHECK(d.homogeneous_rank() == rank + 1);
    }
    CHECK(total_x_derivative(DiffPoly::u(0) * DiffPoly::u(0)) == Rational(2) * DiffPoly::u(0) * DiffPoly::u(1));
}

TEST_CASE("cohomology elements keep the basis apart") {
    const CohomElem a(var("g2"), MultiPoly(1), Basis::reduced);
    CHECK(a.to_poly() == var("g2") * var("omega") + var("eta"));
    CHECK(CohomElem::from_poly(a.to_poly(), Basis::reduced) == a);
    CHECK_THROWS(CohomElem::from_poly(var("xi"), Basis::reduced));
    CHECK_THROWS(CohomElem::from_poly(var("omega") * var("omega"), Basis::general));
}

}  // TEST_SUITE
