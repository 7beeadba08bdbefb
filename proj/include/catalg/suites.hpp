#pragma once

// Property suites: each module's invariants, runnable by name with a fixed
// 64-bit seed.  Randomized cases draw from the deterministic generator in
// numeric.hpp, so identical seeds reproduce witnesses bit-exactly.

#include <cstdint>
#include <string>
#include <vector>

namespace catalg {

struct SuiteCase {
    std::string name;
    bool pass = false;
    std::string detail;  // short deterministic summary or witness
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    bool pass = true;
    std::vector<SuiteCase> cases;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        cases.push_back({name, ok, detail});
        if (!ok) pass = false;
    }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace catalg
