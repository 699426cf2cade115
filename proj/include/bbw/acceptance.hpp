#pragma once

#include "bbw/report.hpp"

#include <iosfwd>
#include <vector>

namespace bbw::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full verification suite (criteria 1..12).
std::vector<CriterionResult> run_all(unsigned threads);

// One PASS/FAIL line per criterion; returns overall success.
bool print_results(const std::vector<CriterionResult>& results, std::ostream& os);

report::json results_json(const std::vector<CriterionResult>& results);

}  // namespace bbw::acceptance
