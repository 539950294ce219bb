#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace elliptica {

/// A polynomial indeterminate with its grading weight.
///
/// Ungraded symbols (E, x) index series or plot coordinates and are skipped
/// by homogeneity checks.
struct Symbol {
    std::string name;
    int weight = 0;
    bool graded = true;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

class SymbolTable {
public:
    /// Throws std::invalid_argument on duplicate names.
    explicit SymbolTable(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const { return symbols_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Like find() but throws std::invalid_argument for unknown names.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

private:
    std::vector<Symbol> symbols_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// The fixed table shared by every computation in the library, in
/// alphabetical order:
///   E(ungraded) dwp:3 e1:2 e2:2 e3:2 eta:1 g1:2 g2:4 g3:6 lambda:0 n:0
///   omega:-1 pbar:2 wp:2 x(ungraded) xi:1
/// `wp` and `dwp` stand for the elliptic function and its first derivative,
/// e1..e3 for the roots of the Weierstrass cubic.
const SymbolTablePtr& standard_symbols();

bool same_table(const SymbolTablePtr& a, const SymbolTablePtr& b);

}  // namespace elliptica
