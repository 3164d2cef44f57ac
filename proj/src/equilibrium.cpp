#include "sbp/equilibrium.hpp"

#include "sbp/errors.hpp"
#include "sbp/limits.hpp"

#include <algorithm>
#include <unordered_set>

namespace sbp {

namespace {

struct PackingView {
    SuperiorityOrder order;
    std::vector<Rational> loads;        // per bin
    std::vector<std::size_t> bin_of;    // per item
    std::vector<Rational> cost_before;  // per item

    PackingView(const CostRule& rule, const Instance& instance, const Packing& packing)
        : order(instance) {
        loads.reserve(packing.bin_count());
        bin_of.resize(instance.item_count());
        cost_before.resize(instance.item_count(), Rational(0));
        for (std::size_t b = 0; b < packing.bin_count(); ++b) {
            loads.push_back(bin_load(instance, packing.bin(b)));
            for (ItemIndex i : packing.bin(b)) bin_of[i] = b;
            for (auto& ic : bin_cost_vector(rule, instance, order, packing.bin(b)))
                cost_before[ic.item] = std::move(ic.cost);
        }
    }
};

} // namespace

std::optional<Deviation> find_improving_move(const CostRule& rule, const Instance& instance,
                                             const Packing& packing) {
    validate_packing(instance, packing);
    PackingView view(rule, instance, packing);
    const Rational one(1);

    // scan from the bottom of the superiority order: the least superior item
    // (the cheapest mover) is examined first
    for (std::size_t r = view.order.item_count(); r-- > 0;) {
        ItemIndex i = view.order.item_at(r);
        std::size_t b = view.bin_of[i];
        const Rational& before = view.cost_before[i];
        for (std::size_t t = 0; t < packing.bin_count(); ++t) {
            if (t == b) continue;
            if (view.loads[t] + instance.size(i) > one) continue;
            Rational after = cost_in_bin(rule, instance, view.order, packing.bin(t), i);
            if (after < before) return Deviation{i, b, t, before, std::move(after)};
        }
        Rational fresh = cost_in_bin(rule, instance, view.order, {}, i);
        if (fresh < before) return Deviation{i, b, kNewBin, before, std::move(fresh)};
    }
    return std::nullopt;
}

namespace {

std::optional<Deviation> threshold_witness(const CostRule& rule, const Instance& instance,
                                           const Packing& packing) {
    const SuperiorityOrder order(instance);
    const Rational& lam = rule.lambda();
    const Rational one(1);

    std::vector<Rational> loads;
    loads.reserve(packing.bin_count());
    for (const auto& bin : packing.bins()) loads.push_back(bin_load(instance, bin));

    auto superior_prefix = [&](const Packing::Bin& bin, ItemIndex i) {
        Rational p(0);
        for (ItemIndex j : bin) {
            if (j != i && order.superior(j, i)) p += instance.size(j);
        }
        return p;
    };

    for (std::size_t r = order.item_count(); r-- > 0;) {
        ItemIndex i = order.item_at(r);
        std::size_t b = 0;
        while (std::find(packing.bin(b).begin(), packing.bin(b).end(), i) ==
               packing.bin(b).end())
            ++b;
        Rational prefix = superior_prefix(packing.bin(b), i);
        bool bottom = prefix.is_zero();
        for (std::size_t t = 0; t < packing.bin_count(); ++t) {
            if (t == b) continue;
            if (loads[t] + instance.size(i) > one) continue;
            bool improves = false;
            if (prefix < lam) {
                Rational target_prefix = superior_prefix(packing.bin(t), i);
                if (target_prefix > prefix) improves = true;
            }
            if (!improves && bottom && loads[b] < lam &&
                loads[t] > loads[b] - instance.size(i))
                improves = true;
            if (improves) {
                Packing::Bin own = packing.bin(b);
                own.erase(std::find(own.begin(), own.end(), i));
                Rational before = cost_in_bin(rule, instance, order, own, i);
                Rational after = cost_in_bin(rule, instance, order, packing.bin(t), i);
                return Deviation{i, b, t, std::move(before), std::move(after)};
            }
        }
        // a fresh bin never satisfies either condition: its superior prefix is 0
        // and its load 0 cannot exceed loads[b] - s_i
    }
    return std::nullopt;
}

} // namespace

NashResult is_nash(const CostRule& rule, const Instance& instance, const Packing& packing,
                   NashMethod method) {
    if (method == NashMethod::threshold) {
        if (!rule.is_local())
            throw Error(ErrorKind::invalid_argument,
                        "threshold characterization applies to local rules only");
        validate_packing(instance, packing);
        auto w = threshold_witness(rule, instance, packing);
        return NashResult{!w.has_value(), std::move(w)};
    }
    auto w = find_improving_move(rule, instance, packing);
    return NashResult{!w.has_value(), std::move(w)};
}

// ---------------------------------------------------------------------------
// Strong NE

namespace {

struct CoalitionSearch {
    const CostRule& rule;
    const Instance& instance;
    const Packing& packing;
    const SuperiorityOrder order;
    std::vector<Rational> cost_before; // per item
    std::vector<std::size_t> bin_of;

    // per subset
    std::vector<ItemIndex> members;          // superiority order
    std::vector<std::size_t> surviving;      // original bin ids that keep a non-member
    std::vector<Rational> residual_load;     // per surviving bin
    std::vector<Rational> placed_size;       // member mass added per surviving bin
    std::vector<std::vector<ItemIndex>> residual_items; // non-members per surviving bin
    std::vector<Rational> fresh_load;
    std::vector<std::vector<ItemIndex>> fresh_items;
    std::vector<std::pair<bool, std::size_t>> assignment; // per member: (fresh?, idx)
    std::optional<CoalitionDeviation> found;

    CoalitionSearch(const CostRule& r, const Instance& inst, const Packing& p)
        : rule(r), instance(inst), packing(p), order(inst) {
        PackingView view(r, inst, p);
        cost_before = std::move(view.cost_before);
        bin_of = std::move(view.bin_of);
    }

    // superior-mass of `item` inside a partially built bin
    Rational superior_mass(const std::vector<ItemIndex>& items, ItemIndex item) const {
        Rational p(0);
        for (ItemIndex j : items)
            if (order.superior(j, item)) p += instance.size(j);
        return p;
    }

    bool try_subset(const std::vector<ItemIndex>& subset) {
        members = subset;
        surviving.clear();
        residual_load.clear();
        residual_items.clear();
        placed_size.clear();
        std::vector<char> is_member(instance.item_count(), 0);
        for (ItemIndex i : members) is_member[i] = 1;
        for (std::size_t b = 0; b < packing.bin_count(); ++b) {
            std::vector<ItemIndex> rest;
            for (ItemIndex i : packing.bin(b))
                if (!is_member[i]) rest.push_back(i);
            if (!rest.empty()) {
                surviving.push_back(b);
                residual_load.push_back(bin_load(instance, rest));
                residual_items.push_back(std::move(rest));
                placed_size.push_back(Rational(0));
            }
        }
        fresh_load.clear();
        fresh_items.clear();
        assignment.assign(members.size(), {false, 0});
        return place(0);
    }

    // Members are placed in superiority order, so everything already in a bin
    // is superior to the member being placed: its segment start is fully
    // known at placement time unless it is the bin's bottom.
    bool place(std::size_t idx) {
        if (idx == members.size()) return finish();
        ItemIndex item = members[idx];
        const Rational& s = instance.size(item);
        const Rational one(1);

        for (std::size_t t = 0; t < surviving.size(); ++t) {
            if (surviving[t] == bin_of[item]) continue; // must change bins
            Rational load = residual_load[t] + placed_size[t];
            if (load + s > one) continue;
            if (!prune_existing(item, t)) {
                assignment[idx] = {false, t};
                placed_size[t] += s;
                bool hit = place(idx + 1);
                placed_size[t] -= s;
                if (hit) return true;
            }
        }
        // fresh bins already open
        for (std::size_t f = 0; f < fresh_load.size(); ++f) {
            if (fresh_load[f] + s > one) continue;
            if (!prune_fresh(item, f)) {
                assignment[idx] = {true, f};
                fresh_load[f] += s;
                fresh_items[f].push_back(item);
                bool hit = place(idx + 1);
                fresh_items[f].pop_back();
                fresh_load[f] -= s;
                if (hit) return true;
            }
        }
        // open a new fresh bin; the member becomes its bottom
        if (!prune_new_fresh(item)) {
            assignment[idx] = {true, fresh_load.size()};
            fresh_load.push_back(s);
            fresh_items.push_back({item});
            bool hit = place(idx + 1);
            fresh_items.pop_back();
            fresh_load.pop_back();
            if (hit) return true;
        }
        return false;
    }

    // Sound improvement prunes: a member whose final cost is already known to
    // be >= its current cost cannot be part of a strictly improving coalition.
    bool prune_existing(ItemIndex item, std::size_t t) {
        if (!rule.is_local()) {
            if (rule.kind() == RuleKind::proportional) {
                // share >= own size, since the bin load never exceeds 1
                return instance.size(item) >= cost_before[item];
            }
            return false;
        }
        Rational prefix = superior_mass(residual_items[t], item) + placed_size[t];
        if (prefix.is_zero()) {
            // stays bottom so far; residual part unknown, segment is the floor
            Rational floor = cumulative_density(rule, instance.size(item));
            return floor >= cost_before[item];
        }
        Rational cost = cumulative_density(rule, prefix + instance.size(item)) -
                        cumulative_density(rule, prefix);
        return cost >= cost_before[item];
    }

    bool prune_fresh(ItemIndex item, std::size_t f) {
        if (!rule.is_local()) {
            if (rule.kind() == RuleKind::proportional)
                return instance.size(item) >= cost_before[item];
            return false;
        }
        Rational prefix = fresh_load[f]; // every occupant is superior
        Rational cost = cumulative_density(rule, prefix + instance.size(item)) -
                        cumulative_density(rule, prefix);
        return cost >= cost_before[item];
    }

    bool prune_new_fresh(ItemIndex item) {
        if (!rule.is_local()) {
            if (rule.kind() == RuleKind::proportional)
                return instance.size(item) >= cost_before[item];
            return false;
        }
        Rational floor = cumulative_density(rule, instance.size(item));
        return floor >= cost_before[item];
    }

    bool finish() {
        // evaluate final costs; every member must strictly improve
        std::vector<std::vector<ItemIndex>> final_existing = residual_items;
        std::vector<std::vector<ItemIndex>> final_fresh = fresh_items;
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            auto [to_fresh, t] = assignment[idx];
            if (!to_fresh) final_existing[t].push_back(members[idx]);
        }
        std::vector<CoalitionMove> moves;
        moves.reserve(members.size());
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            ItemIndex item = members[idx];
            auto [to_fresh, t] = assignment[idx];
            const std::vector<ItemIndex>& bin = to_fresh ? final_fresh[t] : final_existing[t];
            Packing::Bin others;
            others.reserve(bin.size());
            for (ItemIndex j : bin)
                if (j != item) others.push_back(j);
            Rational after = cost_in_bin(rule, instance, order, others, item);
            if (!(after < cost_before[item])) return false;
            moves.push_back(CoalitionMove{item, bin_of[item], to_fresh,
                                          to_fresh ? t : surviving[t], cost_before[item],
                                          std::move(after)});
        }
        found = CoalitionDeviation{std::move(moves)};
        return true;
    }
};

} // namespace

StrongNashResult is_strong_nash(const CostRule& rule, const Instance& instance,
                                const Packing& packing, std::size_t max_coalition,
                                std::size_t limit_override) {
    validate_packing(instance, packing);
    const std::size_t n = instance.item_count();
    const std::size_t limit = limit_override ? limit_override : Limits::current().exact_limit;
    if (n > limit)
        throw Error(ErrorKind::limit, "exhaustive strong-NE check limited to " +
                                          std::to_string(limit) + " items, instance has " +
                                          std::to_string(n));
    if (max_coalition == 0 || max_coalition > n) max_coalition = n;

    CoalitionSearch search(rule, instance, packing);

    // items that could conceivably pay less; a zero-cost item never strictly improves
    std::vector<ItemIndex> candidates;
    for (std::size_t r = 0; r < search.order.item_count(); ++r) {
        ItemIndex i = search.order.item_at(r);
        if (search.cost_before[i] > Rational(0)) candidates.push_back(i);
    }

    const std::size_t k = candidates.size();
    if (k > 62)
        throw Error(ErrorKind::limit, "coalition search cannot index " + std::to_string(k) +
                                          " candidate items");
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_coalition) continue;
        std::vector<ItemIndex> subset;
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (std::uint64_t(1) << j)) subset.push_back(candidates[j]);
        if (search.try_subset(subset))
            return StrongNashResult{false, std::move(search.found)};
    }
    return StrongNashResult{true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Dynamics

Trajectory best_response_dynamics(const CostRule& rule, const Instance& instance,
                                  const Packing& start, std::size_t step_cap) {
    validate_packing(instance, start);
    if (step_cap < 1) throw Error(ErrorKind::invalid_argument, "step_cap must be >= 1");

    Trajectory traj{start, {}, Terminal::ne_reached};
    std::unordered_set<std::string> seen;
    seen.insert(start.canonical_key());

    Packing current = start;
    while (true) {
        auto move = find_improving_move(rule, instance, current);
        if (!move) {
            traj.terminal = Terminal::ne_reached;
            return traj;
        }
        current = apply_move(current, move->item, move->source_bin, move->target_bin);
        traj.steps.push_back(TrajectoryStep{std::move(*move), current});
        if (!seen.insert(current.canonical_key()).second) {
            traj.terminal = Terminal::cycle_detected;
            return traj;
        }
        if (traj.steps.size() >= step_cap) {
            // the cap is only a terminal if the dynamic has not already stopped
            if (find_improving_move(rule, instance, current)) {
                traj.terminal = Terminal::step_cap;
            } else {
                traj.terminal = Terminal::ne_reached;
            }
            return traj;
        }
    }
}

// ---------------------------------------------------------------------------
// Lemma-style surplus diagnostic

bool check_surplus_property(const Instance& instance, const Packing& ne_packing) {
    CostRule rule = CostRule::local(Rational(3, 4), Density::triangular);
    if (!is_nash(rule, instance, ne_packing).is_ne)
        throw Error(ErrorKind::invalid_argument,
                    "surplus property requires an NE packing at lambda=3/4");

    const Rational three_quarters(3, 4);
    const Rational one(1);
    std::vector<std::size_t> by_load(ne_packing.bin_count());
    std::vector<Rational> loads;
    loads.reserve(ne_packing.bin_count());
    for (const auto& bin : ne_packing.bins()) loads.push_back(bin_load(instance, bin));
    for (std::size_t b = 0; b < by_load.size(); ++b) by_load[b] = b;
    std::stable_sort(by_load.begin(), by_load.end(),
                     [&](std::size_t a, std::size_t b) { return loads[b] < loads[a]; });

    auto smallest_item_size = [&](const Packing::Bin& bin) {
        // minimum size, maximum index on ties: later items win equal sizes
        Rational best = instance.size(bin.front());
        for (ItemIndex i : bin)
            if (instance.size(i) <= best) best = instance.size(i);
        return best;
    };

    for (std::size_t k = 0; k < by_load.size(); ++k) {
        const auto& bin_k = ne_packing.bin(by_load[k]);
        Rational t_k = smallest_item_size(bin_k);
        if (loads[by_load[k]] - t_k < three_quarters) {
            for (std::size_t j = 0; j < k; ++j) {
                if (!(loads[by_load[j]] + t_k > one)) return false;
            }
        }
    }
    return true;
}

} // namespace sbp
