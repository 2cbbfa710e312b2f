#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cartanlift {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;  // on failure: the first failing identity, both sides
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint32_t p = 3;
    int max_dim = 2;
    unsigned seed = 0;
};

std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

// Formats one line per check, sorted by id; returns pass-count.
int print_results(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace cartanlift
