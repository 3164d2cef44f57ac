#ifndef SBP_COST_HPP
#define SBP_COST_HPP

#include "sbp/model.hpp"
#include "sbp/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sbp {

enum class RuleKind { local_size, proportional, egalitarian };
enum class Density { triangular, quadratic };

// A cost-sharing rule. Local-size rules carry a threshold lambda in (0,1]
// and a density; the two baseline rules carry nothing.
class CostRule {
public:
    static CostRule local(Rational lambda, Density density);
    static CostRule proportional();
    static CostRule egalitarian();

    // "local:3/4:triangular", "local:2/3:quadratic", "proportional", "egalitarian"
    static CostRule parse(std::string_view spec);
    std::string spec() const;

    RuleKind kind() const noexcept { return kind_; }
    const Rational& lambda() const { return lambda_; }
    Density density() const noexcept { return density_; }
    bool is_local() const noexcept { return kind_ == RuleKind::local_size; }

private:
    CostRule(RuleKind kind, Rational lambda, Density density)
        : kind_(kind), lambda_(std::move(lambda)), density_(density) {}

    RuleKind kind_;
    Rational lambda_;
    Density density_;
};

// F(x) = integral of the density from 0 to x, in closed form. Requires a
// local rule and 0 <= x <= 1.
Rational cumulative_density(const CostRule& rule, const Rational& x);

struct ItemCost {
    ItemIndex item;
    Rational cost;
};

// Shares for one bin, in stacking order (most superior member first).
// Exact; shares always sum to 1.
std::vector<ItemCost> bin_cost_vector(const CostRule& rule, const Instance& instance,
                                      const SuperiorityOrder& order, const Packing::Bin& bin);

// Cost of `item` were it packed into a bin alongside `others` (which must
// not contain it). `others` may be empty: the item then pays the whole bin.
Rational cost_in_bin(const CostRule& rule, const Instance& instance,
                     const SuperiorityOrder& order, const Packing::Bin& others, ItemIndex item);

// Per-item shares for a whole packing; total equals the number of bins.
class CostVector {
public:
    explicit CostVector(std::vector<Rational> costs) : costs_(std::move(costs)) {}
    const Rational& cost(ItemIndex i) const { return costs_.at(i); }
    const std::vector<Rational>& costs() const noexcept { return costs_; }
    Rational total() const;

private:
    std::vector<Rational> costs_;
};

CostVector packing_cost_vector(const CostRule& rule, const Instance& instance,
                               const Packing& packing);

} // namespace sbp

#endif
