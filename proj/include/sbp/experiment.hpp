#ifndef SBP_EXPERIMENT_HPP
#define SBP_EXPERIMENT_HPP

#include "sbp/cost.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sbp {

// Batch suite over seeded random instances. Known checks:
//   pos            pos_ratio == 1                 (local rule, lambda <= 3/4)
//   poa_bound      opt >= ceil(3m/4 - 1/2)        (local rule, lambda == 3/4)
//   ne_exists      at least one NE                (local rule, lambda <= 3/4)
//   bfd_strong_ne  BFD output is a strong NE      (local rule, lambda == 2/3)
//   bfd_ratio      9*bfd <= 11*opt + 9            (any rule)
//   new_bin        fresh-bin move never improves  (local rule)
struct SuiteSpec {
    std::size_t trials = 0;
    std::size_t max_n = 8;
    unsigned grid = 12;
    std::uint64_t seed = 0;
    std::vector<CostRule> rules;
    std::vector<std::string> checks;
};

SuiteSpec suite_from_json(std::string_view text);

struct ExperimentResult {
    std::string csv;
    std::size_t violations = 0; // a bound that failed; callers treat > 0 as fatal
};

// Deterministic given the spec; a violating row stops the suite. Timing
// columns are informational and excluded from the determinism contract.
ExperimentResult run_experiment(const SuiteSpec& spec);

} // namespace sbp

#endif
