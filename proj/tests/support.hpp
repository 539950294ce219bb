#pragma once

#include <ostream>
#include <random>
#include <string>

#include <doctest.h>

#include "elliptica/cohom.hpp"
#include "elliptica/diffpoly.hpp"
#include "elliptica/multipoly.hpp"
#include "elliptica/poly_io.hpp"
#include "elliptica/rational.hpp"

namespace elliptica {

// Failure messages print polynomials in text form.
inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << io::to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << io::to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const CohomElem& c) { return os << io::to_text(c); }

}  // namespace elliptica

namespace testing {

using elliptica::MultiPoly;
using elliptica::Rational;

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return Rational(num(rng), den(rng));
}

/// Random polynomial in g2, g3, lambda with up to `terms` terms.
inline MultiPoly random_poly(std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<unsigned> e(0, 3);
    MultiPoly p;
    for (int i = 0; i < terms; ++i)
        p += random_rational(rng) * elliptica::var("g2").pow(e(rng)) * elliptica::var("g3").pow(e(rng)) *
             elliptica::var("lambda").pow(e(rng));
    return p;
}

/// Random rank-homogeneous differential polynomial of the given rank.
inline elliptica::DiffPoly random_density(std::mt19937& rng, int rank, int terms = 3) {
    elliptica::DiffPoly p;
    for (int i = 0; i < terms; ++i) {
        elliptica::DiffPoly m(Rational(1));
        int left = rank;
        while (left > 0) {
            if (left == 1) {
                m = elliptica::DiffPoly();
                break;
            }
            std::uniform_int_distribution<int> part(2, left);
            int p_ = part(rng);
            if (left - p_ == 1) p_ = left;
            m *= elliptica::DiffPoly::u(static_cast<unsigned>(p_ - 2));
            left -= p_;
        }
        p += random_rational(rng) * m;
    }
    return p;
}

}  // namespace testing
