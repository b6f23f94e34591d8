#pragma once
#include <string>
#include <vector>

#include "json.hpp"

namespace delta {

struct VerifyOptions {
    int max_size = 6;
    int jobs = 1;
    std::size_t max_listed_failures = 20;
};

struct Report {
    std::string suite;
    long checks = 0;
    long passes = 0;
    long failed = 0;
    std::vector<nlohmann::json> failures;  // first few counterexamples
    nlohmann::json info = nlohmann::json::object();
    std::vector<Report> parts;  // for "all"

    bool ok() const { return failed == 0; }
    nlohmann::json to_json() const;
};

// Suites: figures, recursion, dinv-area, area-bounce, polyomino, sweep, zeta,
// poly-dyck, shuffle, catalan, all.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace delta
