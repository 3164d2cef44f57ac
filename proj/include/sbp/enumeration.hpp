#ifndef SBP_ENUMERATION_HPP
#define SBP_ENUMERATION_HPP

#include "sbp/cost.hpp"
#include "sbp/equilibrium.hpp"
#include "sbp/model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sbp {

// Visits every valid packing of the instance exactly once, in canonical
// (restricted-growth) order over input item indices. The visitor returns
// false to stop early. Error(limit) beyond the exhaustive limit.
void enumerate_packings(const Instance& instance,
                        const std::function<bool(const Packing&)>& visit,
                        std::size_t limit_override = 0);

std::vector<Packing> enumerate_ne(const CostRule& rule, const Instance& instance,
                                  std::size_t limit_override = 0);

struct EquilibriumReport {
    std::string instance_name;
    std::string rule_spec;
    std::size_t ne_count = 0;
    std::size_t min_ne_bins = 0;
    std::size_t max_ne_bins = 0;
    std::size_t opt_bins = 0;
    Rational pos_ratio;
    Rational poa_ratio;
    bool bound_ok = false;
};

// ceil(3m/4 - 1/2) as an integer; the NE-vs-optimum floor used by the report.
long long ne_bins_lower_bound_on_opt(std::size_t ne_bins);

// Exhaustive per-instance measurement: NE count, extreme NE bin counts,
// exact optimum, and the per-instance ratios. Throws Error(theorem_violation)
// when a local rule with lambda <= 3/4 yields no NE at all.
EquilibriumReport measure(const CostRule& rule, const Instance& instance,
                          std::size_t limit_override = 0);

// An optimal packing that is an NE under the local rule with the given
// lambda (<= 3/4). Throws Error(theorem_violation) when none exists.
Packing pos_witness(const Instance& instance, const Rational& lambda,
                    std::size_t limit_override = 0);

} // namespace sbp

#endif
