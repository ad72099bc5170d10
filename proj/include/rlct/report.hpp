#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlct/fp.hpp"

namespace rlct {

struct CheckReport {
    std::string id;
    std::string ref;    // the identity or statement the check pins down
    std::string status; // "pass", "fail", "skip"
    std::string detail; // failure witness / computed values
};

struct SuiteConfig {
    std::string suite = "all";
    fp_t p = 3;
    int n = -1; // -1: run the whole envelope for this p
    int r = -1;
    std::uint64_t seed = 20240101;
    int samples = 100;
    bool force = false;
    bool include_k5 = false;
    bool exhaustive = false;
    std::string center = "toral";
    std::string family = "";
    std::string module = "adjoint";
};

struct SuiteResult {
    std::vector<CheckReport> checks;
    int passed = 0, failed = 0, skipped = 0;
    void add(CheckReport c);
};

// The id -> reference table every emitted check must come from.
const std::vector<std::pair<std::string, std::string>>& check_reference_table();
std::string check_reference(const std::string& id);

} // namespace rlct
