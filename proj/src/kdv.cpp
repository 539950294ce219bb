#include "elliptica/kdv.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace elliptica::kdv {

namespace {

class SigmaTable {
public:
    DiffPoly get(int m) {
        std::lock_guard lock(mutex_);
        if (table_.empty()) table_.push_back(DiffPoly::u(0));
        while (static_cast<int>(table_.size()) < m) {
            const int cur = static_cast<int>(table_.size());  // computing sigma_{cur+1}
            DiffPoly next = -total_x_derivative(table_[cur - 1]);
            for (int k = 1; k <= cur - 1; ++k) next -= table_[k - 1] * table_[cur - k - 1];
            table_.push_back(std::move(next));
        }
        return table_[m - 1];
    }

private:
    std::mutex mutex_;
    std::vector<DiffPoly> table_;  // table_[i] = sigma_{i+1}
};

SigmaTable& sigma_table() {
    static SigmaTable table;
    return table;
}

// A monomial of the form N u_{j-1}^a u_j with j >= 1 maximal and u_j linear.
bool linear_top(const Exponents& e, int& j) {
    j = highest_index(e);
    return j >= 1 && e[static_cast<std::size_t>(j)] == 1;
}

}  // namespace

DiffPoly sigma(int m) {
    if (m < 1) throw std::invalid_argument("sigma: m must be >= 1, got " + std::to_string(m));
    return sigma_table().get(m);
}

bool is_irreducible(const DiffPoly& p) {
    int j = 0;
    for (const auto& [e, c] : p.terms())
        if (linear_top(e, j)) return false;
    return true;
}

DiffPoly canonicalize(const DiffPoly& p) {
    if (!p.is_zero() && !p.homogeneous_rank())
        throw std::invalid_argument("canonicalize: input is not rank-homogeneous");
    DiffPoly work = p;
    for (;;) {
        const Exponents* pick = nullptr;
        int best = 0;
        for (const auto& [e, c] : work.terms()) {
            int j = 0;
            if (linear_top(e, j) && j > best) {
                best = j;
                pick = &e;
            }
        }
        if (!pick) return work;

        const Exponents mono = *pick;
        const Rational coeff = work.coefficient(mono);
        const auto j = static_cast<std::size_t>(best);
        const std::uint32_t a = mono[j - 1];

        Exponents rest = mono;
        rest[j] = 0;
        rest[j - 1] = 0;
        Exponents bump(j, 0);
        bump[j - 1] = a + 1;

        work.add_term(mono, -coeff);
        const DiffPoly derivative = total_x_derivative(DiffPoly::monomial(Rational(1), rest));
        work += derivative * DiffPoly::monomial(-coeff / Rational(static_cast<long>(a + 1)), bump);
    }
}

CanonicalDensity density(int k) {
    if (k < 1) throw std::invalid_argument("density: k must be >= 1, got " + std::to_string(k));
    DiffPoly body = canonicalize(sigma(2 * k - 1));
    if (k % 2 == 0) body = -body;

    const auto fail = [k](const std::string& what) {
        throw std::logic_error("density(" + std::to_string(k) + "): " + what);
    };
    if (body.homogeneous_rank() != 2 * k) fail("rank is not 2k");
    if (k >= 2) {
        Exponents top(static_cast<std::size_t>(k - 1), 0);
        top[static_cast<std::size_t>(k - 2)] = 2;
        if (body.coefficient(top) != Rational(1)) fail("coefficient of u_{k-2}^2 is not 1");
    }
    for (const auto& [e, c] : body.terms())
        if (!c.is_integer()) fail("non-integer coefficient " + c.to_string());
    if (!is_irreducible(body)) fail("result is not irreducible");
    return {k, std::move(body)};
}

Rational top_u_closed_form(int k) {
    if (k < 1) throw std::invalid_argument("top_u_coefficient: k must be >= 1");
    if (k == 1) return Rational(1);
    const auto uk = static_cast<unsigned>(k);
    return Rational(2) * Rational::factorial(2 * uk - 3) / (Rational::factorial(uk) * Rational::factorial(uk - 2));
}

Rational top_u_coefficient(int k) {
    const Rational closed = top_u_closed_form(k);
    Exponents e{static_cast<std::uint32_t>(k)};
    const Rational observed = density(k).body.coefficient(e);
    if (observed != closed)
        throw std::logic_error("top_u_coefficient(" + std::to_string(k) + "): density has " + observed.to_string() +
                               ", closed form gives " + closed.to_string());
    return closed;
}

}  // namespace elliptica::kdv
