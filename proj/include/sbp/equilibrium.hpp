#ifndef SBP_EQUILIBRIUM_HPP
#define SBP_EQUILIBRIUM_HPP

#include "sbp/cost.hpp"
#include "sbp/model.hpp"

#include <optional>
#include <vector>

namespace sbp {

// A unilateral move of one item; target_bin == kNewBin means a fresh bin.
struct Deviation {
    ItemIndex item;
    std::size_t source_bin;
    std::size_t target_bin;
    Rational cost_before;
    Rational cost_after;

    bool to_new_bin() const noexcept { return target_bin == kNewBin; }
};

// First strictly improving deviation under a deterministic scan: items from
// the bottom of the superiority order upward (least superior first), targets
// by bin id ascending, then a fresh bin.
std::optional<Deviation> find_improving_move(const CostRule& rule, const Instance& instance,
                                             const Packing& packing);

enum class NashMethod {
    cost_comparison, // exact cost deltas over all single moves
    threshold,       // lambda-only characterization; local rules only
};

struct NashResult {
    bool is_ne;
    std::optional<Deviation> witness; // an improving move when not an NE
};

NashResult is_nash(const CostRule& rule, const Instance& instance, const Packing& packing,
                   NashMethod method = NashMethod::cost_comparison);

// One member's move inside a coalition deviation. Existing targets refer to
// bin ids of the original packing; fresh bins are tagged 0,1,... in order of
// first use.
struct CoalitionMove {
    ItemIndex item;
    std::size_t source_bin;
    bool to_fresh;
    std::size_t target; // original bin id, or fresh tag
    Rational cost_before;
    Rational cost_after;
};

struct CoalitionDeviation {
    std::vector<CoalitionMove> moves;
};

struct StrongNashResult {
    bool is_strong_ne;
    std::optional<CoalitionDeviation> witness;
};

// Exhaustive coalition search: every nonempty subset S (|S| <= max_coalition,
// 0 meaning all items) and every reassignment of S onto surviving original
// bins and fresh bins. Hard Error(limit) when the item count exceeds the
// exhaustive limit; never approximates.
StrongNashResult is_strong_nash(const CostRule& rule, const Instance& instance,
                                const Packing& packing, std::size_t max_coalition = 0,
                                std::size_t limit_override = 0);

enum class Terminal { ne_reached, step_cap, cycle_detected };

struct TrajectoryStep {
    Deviation move;
    Packing result;
};

struct Trajectory {
    Packing start;
    std::vector<TrajectoryStep> steps;
    Terminal terminal;

    const Packing& final_packing() const {
        return steps.empty() ? start : steps.back().result;
    }
};

Trajectory best_response_dynamics(const CostRule& rule, const Instance& instance,
                                  const Packing& start, std::size_t step_cap);

// Surplus diagnostic for NE packings at lambda=3/4: with bins sorted by load
// descending, every bin whose load minus its smallest item is below 3/4
// forces all earlier bins to exceed 1 together with that smallest item.
// Throws unless the packing is an NE at lambda=3/4; a false return signals
// an engine bug.
bool check_surplus_property(const Instance& instance, const Packing& ne_packing);

} // namespace sbp

#endif
