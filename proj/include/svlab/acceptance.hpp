#pragma once

#include <string>
#include <vector>

namespace svlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string details;
};

// Runs the ten acceptance criteria (all tolerances pinned in code) and
// returns one result per criterion.
std::vector<CriterionResult> run_acceptance();

// Prints one pass/fail line per criterion; returns true iff all pass.
bool print_acceptance_report(const std::vector<CriterionResult>& results);

}  // namespace svlab
