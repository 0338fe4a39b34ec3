#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matspl/matroid.hpp"

namespace matspl::verify {

struct Options {
    int n = 6;               // largest ground-set size used by the suite
    std::uint64_t seed = 1;  // base seed; each property derives its own
    int count = 100;         // random instances per property
};

struct PropertyResult {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string note;  // first failure detail, or a skip reason
    bool skipped = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool passed = true;
};

std::vector<std::string> suite_names();

// Runs one of: axioms, higgs, splice, factor, algebra, constructions, all.
SuiteReport run_suite(const std::string& name, const Options& options);

}  // namespace matspl::verify
