#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the whole acceptance battery; deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(uint64_t seed);

// Prints one PASS/FAIL line per criterion; returns true when all pass.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace sdc
