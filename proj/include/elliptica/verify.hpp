#pragma once

#include <string>
#include <vector>

#include <json.hpp>

// Fixture-driven verification shared by `elliptica verify` and the
// acceptance test binary. Criteria are numbered 1..10; each one runs every
// check it owns and keeps going after a failure so the report is complete.

namespace elliptica::verify {

/// $ELLIPTICA_FIXTURES when set, otherwise the in-repo fixtures directory.
std::string fixture_dir();

/// Parses <fixture_dir>/<name>. Throws std::runtime_error when the file is
/// missing or not JSON.
nlohmann::json load_fixture(const std::string& name);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    int checks = 0;
    /// One line per failed check, in execution order.
    std::vector<std::string> failures;
    /// Reported values that are never asserted (scan tables, boundary cases).
    std::vector<std::string> notes;
    double seconds = 0.0;
};

/// Criterion titles, index 0 unused.
const std::vector<std::string>& criterion_titles();

/// Throws std::out_of_range for ids outside 1..10.
CriterionResult run_criterion(int id);

/// Suite names accepted by run_suite, "all" included.
const std::vector<std::string>& suite_names();

/// Criterion ids a suite covers. Throws std::invalid_argument for an
/// unknown suite.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_suite(const std::string& suite);

/// "criterion 3 (period integrals): FAIL [12 checks, 0.01 s] <first failure>"
std::string summary_line(const CriterionResult& r);

}  // namespace elliptica::verify
