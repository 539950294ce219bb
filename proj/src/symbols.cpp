#include "elliptica/symbols.hpp"

#include <stdexcept>
#include <unordered_set>

namespace elliptica {

SymbolTable::SymbolTable(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::unordered_set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.name.empty()) throw std::invalid_argument("SymbolTable: empty symbol name");
        if (!seen.insert(s.name).second)
            throw std::invalid_argument("SymbolTable: duplicate symbol '" + s.name + "'");
    }
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return i;
    return std::nullopt;
}

std::size_t SymbolTable::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
}

const SymbolTablePtr& standard_symbols() {
    static const SymbolTablePtr table = std::make_shared<const SymbolTable>(std::vector<Symbol>{
        {"E", 0, false},
        {"dwp", 3, true},
        {"e1", 2, true},
        {"e2", 2, true},
        {"e3", 2, true},
        {"eta", 1, true},
        {"g1", 2, true},
        {"g2", 4, true},
        {"g3", 6, true},
        {"lambda", 0, true},
        {"n", 0, true},
        {"omega", -1, true},
        {"pbar", 2, true},
        {"wp", 2, true},
        {"x", 0, false},
        {"xi", 1, true},
    });
    return table;
}

bool same_table(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace elliptica
