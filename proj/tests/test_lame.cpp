#include <cstdio>
#include <fstream>

#include "elliptica/lame.hpp"
#include "support.hpp"

using namespace elliptica;

namespace {

MultiPoly n() { return var("n"); }
MultiPoly g2() { return var("g2"); }
MultiPoly g3() { return var("g3"); }
MultiPoly pbar() { return var("pbar"); }
MultiPoly E() { return var("E"); }

nlohmann::json builtin_table(int max_k) {
    nlohmann::json doc{{"max_k", max_k}, {"b", nlohmann::json::array()}};
    for (int k = 1; k <= max_k; ++k) doc["b"].push_back(io::to_json(lame::builtin_spectral_b(k)));
    return doc;
}

// n = 5 radicand with the factor E^2 - 27 g2, the only reading of weight 22.
lame::SpectralPoly weight_consistent_n5() {
    MultiPoly prod(1);
    for (const char* r : {"e1", "e2", "e3"}) {
        const MultiPoly ek = var(r);
        prod *= E().pow(3) + Rational(15) * ek * E().pow(2) + (Rational(315) * ek.pow(2) - Rational(132) * g2()) * E() -
                Rational(675) * ek.pow(3) - Rational(540) * g3();
    }
    const MultiPoly r = lame::reduce_symmetric_roots((E().pow(2) - Rational(27) * g2()) * prod);
    lame::SpectralPoly s;
    s.n = 5;
    for (unsigned k = 0; k <= 11; ++k) s.b.push_back(r.coefficient_of("E", 11 - k));
    return s;
}

}  // namespace

TEST_SUITE("lame") {

TEST_CASE("built-in spectral coefficients") {
    CHECK(lame::builtin_spectral_b(1).is_zero());
    CHECK(lame::builtin_spectral_b(2) == Rational(-1, 120) * g2() * n() * (n() + MultiPoly(1)) *
                                             (Rational(2) * n() - MultiPoly(1)) * (Rational(2) * n() + MultiPoly(1)) *
                                             (Rational(2) * n() + MultiPoly(3)));
    for (int k = 1; k <= 4; ++k) {
        const WeightReport w = weight_of(lame::builtin_spectral_b(k));
        if (k > 1) CHECK(w.weight == 2 * k);
    }
    CHECK_THROWS_AS(lame::builtin_spectral_b(5), std::out_of_range);
    CHECK_THROWS_AS(lame::builtin_spectral_b(0), std::invalid_argument);
}

TEST_CASE("symbolic numerator coefficients") {
    const lame::DosNumerator d = lame::match_numerator(lame::builtin_spectral(), 4);
    CHECK(d.a[1] == Rational(1, 2) * n() * (n() + MultiPoly(1)) * pbar());
    CHECK(d.a[2] == Rational(-1, 480) * g2() * (n() - MultiPoly(1)) * n() * (n() + MultiPoly(1)) *
                        (MultiPoly(6) + Rational(25) * n() + Rational(16) * n().pow(2)));
    for (int k = 1; k <= 4; ++k) {
        CAPTURE(k);
        const MultiPoly& a = d.a[static_cast<std::size_t>(k)];
        CHECK(lame::divide_by_falling_factor(a, k).has_value());
        CHECK(a.degree("n") == static_cast<unsigned>(5 * k / 2));
        CHECK(weight_of(a).weight == 2 * k);
    }
}

TEST_CASE("falling factor") {
    CHECK(lame::falling_factor(1) == (n() + MultiPoly(1)) * n());
    CHECK(lame::falling_factor(2) == (n() + MultiPoly(1)) * n() * (n() - MultiPoly(1)));
    CHECK_FALSE(lame::divide_by_falling_factor(n().pow(3) + MultiPoly(1), 1).has_value());
}

TEST_CASE("symmetric root reduction") {
    const MultiPoly e1 = var("e1"), e2 = var("e2"), e3 = var("e3");
    CHECK(lame::reduce_symmetric_roots(e1 + e2 + e3).is_zero());
    CHECK(lame::reduce_symmetric_roots(e1 * e2 + e1 * e3 + e2 * e3) == Rational(-1, 4) * g2());
    CHECK(lame::reduce_symmetric_roots(e1 * e2 * e3) == Rational(1, 4) * g3());
    CHECK(lame::reduce_symmetric_roots(e1 * e1 + e2 * e2 + e3 * e3) == Rational(1, 2) * g2());
    CHECK_THROWS_AS(lame::reduce_symmetric_roots(e1), std::invalid_argument);
}

TEST_CASE("integer-n numerators for n = 1..4") {
    CHECK(lame::numerator_for_integer_n(1).numerator() == E() + pbar());
    CHECK(lame::numerator_for_integer_n(2).numerator() ==
          E().pow(2) + Rational(3) * pbar() * E() - Rational(3, 2) * g2());
    for (int m = 1; m <= 4; ++m) {
        const lame::DosNumerator d = lame::match_numerator(lame::spectral_from_radicand(m), m + 3);
        for (int k = m + 1; k <= m + 3; ++k) CHECK(d.a[static_cast<std::size_t>(k)].is_zero());
    }
}

TEST_CASE("symbolic coefficients evaluate to the integer-n ones") {
    const lame::DosNumerator sym = lame::match_numerator(lame::builtin_spectral(), 4);
    for (int m = 1; m <= 4; ++m) {
        const lame::DosNumerator d = lame::numerator_for_integer_n(m);
        for (int k = 1; k <= std::min(4, m); ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(sym.a[static_cast<std::size_t>(k)].substitute("n", MultiPoly(m)) == d.a[static_cast<std::size_t>(k)]);
        }
    }
    const lame::DosNumerator five = lame::match_numerator(weight_consistent_n5(), 5);
    for (int k = 1; k <= 4; ++k)
        CHECK(sym.a[static_cast<std::size_t>(k)].substitute("n", MultiPoly(5)) == five.a[static_cast<std::size_t>(k)]);
}

TEST_CASE("the weight-consistent n = 5 radicand reproduces the tabulated numerator") {
    const lame::SpectralPoly s = weight_consistent_n5();
    for (int k = 2; k <= 4; ++k)
        CHECK(s.coefficient(k) == lame::builtin_spectral_b(k).substitute("n", MultiPoly(5)));
    const lame::DosNumerator d = lame::match_numerator(s, 8);
    const MultiPoly printed = E().pow(5) + Rational(15) * pbar() * E().pow(4) - Rational(531, 4) * g2() * E().pow(3) -
                              (Rational(6615, 4) * g3() + Rational(4815, 4) * g2() * pbar()) * E().pow(2) +
                              (Rational(18117, 8) * g2().pow(2) - Rational(42525, 4) * g3() * pbar()) * E() +
                              Rational(178605, 8) * g2() * g3() + Rational(13365, 2) * g2().pow(2) * pbar();
    lame::DosNumerator head = d;
    head.a.resize(6);
    CHECK(head.numerator() == printed);
    for (int k = 6; k <= 8; ++k) CHECK(d.a[static_cast<std::size_t>(k)].is_zero());
}

TEST_CASE("the printed n = 5 radicand is not weight homogeneous") {
    const MultiPoly r = lame::printed_radicand(5);
    CHECK_FALSE(weight_of(lame::reduce_symmetric_roots(r).coefficient_of("E", 9)).homogeneous);
}

TEST_CASE("spectral table loading") {
    const lame::SpectralPoly s = lame::load_spectral_table(builtin_table(4));
    CHECK(s.max_k() == 4);
    CHECK(lame::match_numerator(s, 4).a == lame::match_numerator(lame::builtin_spectral(), 4).a);

    try {
        lame::match_numerator(s, 5);
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("b_5") != std::string::npos);
    }

    nlohmann::json nonzero_b1 = builtin_table(2);
    nonzero_b1["b"][0] = io::to_json(g2() * n());
    CHECK_THROWS_AS(lame::load_spectral_table(nonzero_b1), lame::SpectralTableError);

    nlohmann::json wrong_weight = builtin_table(3);
    wrong_weight["b"][2] = io::to_json(g2() * n());
    CHECK_THROWS_AS(lame::load_spectral_table(wrong_weight), lame::SpectralTableError);

    nlohmann::json stray_symbol = builtin_table(2);
    stray_symbol["b"][1] = io::to_json(g2() * pbar());
    CHECK_THROWS_AS(lame::load_spectral_table(stray_symbol), lame::SpectralTableError);

    nlohmann::json disagreeing = builtin_table(2);
    disagreeing["b"][1] = io::to_json(g2() * n().pow(2));
    CHECK_THROWS_AS(lame::load_spectral_table(disagreeing), lame::SpectralTableError);

    nlohmann::json too_steep = builtin_table(4);
    too_steep["max_k"] = 5;
    too_steep["b"].push_back(io::to_json(g2() * g3() * n().pow(13)));
    CHECK_THROWS_AS(lame::load_spectral_table(too_steep), lame::SpectralTableError);

    nlohmann::json short_list = builtin_table(3);
    short_list["max_k"] = 4;
    CHECK_THROWS_AS(lame::load_spectral_table(short_list), lame::SpectralTableError);
}

TEST_CASE("spectral table from a file") {
    const std::string path = "lame_table_test.json";
    {
        std::ofstream out(path);
        out << builtin_table(3).dump();
    }
    CHECK(lame::load_spectral_table_file(path).max_k() == 3);
    std::remove(path.c_str());
    CHECK_THROWS(lame::load_spectral_table_file("does_not_exist.json"));
}

}  // TEST_SUITE
