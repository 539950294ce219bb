#include <iostream>
#include <string>

#include "elliptica/verify.hpp"

// Runs acceptance criteria 1..10 (or the ids given on the command line),
// one line per criterion, and exits non-zero if any fails.
int main(int argc, char** argv) {
    using namespace elliptica::verify;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
    if (ids.empty()) ids = suite_criteria("all");
    int failed = 0;
    for (int id : ids) {
        const CriterionResult r = run_criterion(id);
        std::cout << summary_line(r) << '\n';
        for (std::size_t i = 1; i < r.failures.size(); ++i) std::cout << "    also: " << r.failures[i] << '\n';
        for (const auto& n : r.notes) std::cout << "    note: " << n << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << (ids.size() - static_cast<std::size_t>(failed)) << " of " << ids.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
