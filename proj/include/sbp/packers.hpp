#ifndef SBP_PACKERS_HPP
#define SBP_PACKERS_HPP

#include "sbp/model.hpp"

#include <optional>
#include <vector>

namespace sbp {

enum class Algorithm { bfd, ffd, opt };

const char* algorithm_name(Algorithm a);

struct PlacementStep {
    ItemIndex item;
    std::size_t bin;
    bool opened_new;
};

struct PackerResult {
    Packing packing;
    std::size_t bins_used;
    Algorithm algorithm;
    std::optional<std::vector<PlacementStep>> trace;
};

// Best-Fit Decreasing: items in superiority order, each into the feasible bin
// with the largest current load (ties: earliest-opened bin).
PackerResult bfd_pack(const Instance& instance, bool with_trace = false);

// First-Fit Decreasing: items in superiority order, each into the
// lowest-numbered feasible bin.
PackerResult ffd_pack(const Instance& instance, bool with_trace = false);

// Provably minimum bin count via branch-and-bound over items in superiority
// order, with new-bin symmetry breaking and equal-size dominance. Throws
// Error(limit) beyond the configured exact limit (default 24).
PackerResult opt_solve(const Instance& instance, std::size_t limit_override = 0);

} // namespace sbp

#endif
