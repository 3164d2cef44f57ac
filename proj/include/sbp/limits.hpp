#ifndef SBP_LIMITS_HPP
#define SBP_LIMITS_HPP

#include <cstddef>

namespace sbp {

// Exhaustive-search limits. `exact_limit` caps item counts for packing
// enumeration and coalition search (env var SBP_EXACT_LIMIT overrides the
// default); `opt_limit` caps the exact branch-and-bound solver. Operations
// also accept a per-call override, which wins over everything here.
struct Limits {
    std::size_t exact_limit;
    std::size_t opt_limit;

    static constexpr std::size_t kDefaultExact = 10;
    static constexpr std::size_t kDefaultOpt = 24;

    static Limits current();
    static void set_exact_limit(std::size_t n); // 0 restores env/default
    static void set_opt_limit(std::size_t n);   // 0 restores default
};

} // namespace sbp

#endif
