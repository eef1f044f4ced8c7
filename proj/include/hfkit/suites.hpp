#pragma once

#include "hfkit/checks.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hfkit {

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t max_size = 4;   ///< bound on exhaustive enumerations
    std::size_t max_depth = 5;  ///< depth of random sets
};

/// ordinals, sets, mewos, correspondence, counterexamples, all
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
std::vector<checks::CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

/// {suite, seed, cases, failures:[{name, input, expected, got}]} plus a
/// per-check summary.
std::string suite_report_json(const std::string& name, const SuiteConfig& cfg,
                              const std::vector<checks::CheckResult>& results);

} // namespace hfkit
