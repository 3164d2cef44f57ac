#include "sbp/packers.hpp"

#include "sbp/errors.hpp"
#include "sbp/limits.hpp"

#include <algorithm>

namespace sbp {

const char* algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::bfd: return "bfd";
    case Algorithm::ffd: return "ffd";
    case Algorithm::opt: return "opt";
    }
    return "?";
}

namespace {

PackerResult greedy_pack(const Instance& instance, Algorithm algo, bool with_trace) {
    SuperiorityOrder order(instance);
    std::vector<Packing::Bin> bins;
    std::vector<Rational> loads;
    std::vector<PlacementStep> trace;
    const Rational one(1);

    for (std::size_t r = 0; r < order.item_count(); ++r) {
        ItemIndex item = order.item_at(r);
        const Rational& s = instance.size(item);
        std::size_t chosen = bins.size();
        for (std::size_t b = 0; b < bins.size(); ++b) {
            if (loads[b] + s > one) continue;
            if (algo == Algorithm::ffd) {
                chosen = b;
                break;
            }
            // bfd: strictly fuller wins, so equal loads keep the earliest bin
            if (chosen == bins.size() || loads[b] > loads[chosen]) chosen = b;
        }
        bool opened = chosen == bins.size();
        if (opened) {
            bins.emplace_back();
            loads.emplace_back(0);
        }
        bins[chosen].push_back(item);
        loads[chosen] += s;
        if (with_trace) trace.push_back({item, chosen, opened});
    }

    PackerResult result{Packing(std::move(bins)), 0, algo, std::nullopt};
    result.bins_used = result.packing.bin_count();
    if (with_trace) result.trace = std::move(trace);
    return result;
}

struct BranchAndBound {
    const Instance& instance;
    const SuperiorityOrder order;
    std::vector<Rational> loads;
    std::vector<std::vector<ItemIndex>> bins;
    std::vector<std::size_t> placed_bin; // per rank
    std::size_t best_bins;
    std::vector<std::vector<ItemIndex>> best_packing;
    long long lower_bound;

    explicit BranchAndBound(const Instance& inst) : instance(inst), order(inst) {
        lower_bound = inst.total_size().ceil_i64();
    }

    bool done() const { return static_cast<long long>(best_bins) == lower_bound; }

    void search(std::size_t rank) {
        if (done()) return;
        if (bins.size() >= best_bins) return; // cannot improve
        if (rank == order.item_count()) {
            best_bins = bins.size();
            best_packing = bins;
            return;
        }
        ItemIndex item = order.item_at(rank);
        const Rational& s = instance.size(item);
        const Rational one(1);

        // equal-size dominance: an item equal in size to its predecessor never
        // goes into an earlier bin than the predecessor did
        std::size_t first_bin = 0;
        if (rank > 0) {
            ItemIndex prev = order.item_at(rank - 1);
            if (instance.size(prev) == s) first_bin = placed_bin[rank - 1];
        }

        for (std::size_t b = first_bin; b < bins.size(); ++b) {
            if (loads[b] + s > one) continue;
            bins[b].push_back(item);
            loads[b] += s;
            placed_bin[rank] = b;
            search(rank + 1);
            loads[b] -= s;
            bins[b].pop_back();
            if (done()) return;
        }
        // open the next unused bin (only as its first item); pointless unless
        // the final count can still beat the incumbent
        if (bins.size() + 1 < best_bins) {
            bins.emplace_back(std::vector<ItemIndex>{item});
            loads.emplace_back(s);
            placed_bin[rank] = bins.size() - 1;
            search(rank + 1);
            bins.pop_back();
            loads.pop_back();
        }
    }
};

} // namespace

PackerResult bfd_pack(const Instance& instance, bool with_trace) {
    return greedy_pack(instance, Algorithm::bfd, with_trace);
}

PackerResult ffd_pack(const Instance& instance, bool with_trace) {
    return greedy_pack(instance, Algorithm::ffd, with_trace);
}

PackerResult opt_solve(const Instance& instance, std::size_t limit_override) {
    const std::size_t limit = limit_override ? limit_override : Limits::current().opt_limit;
    if (instance.item_count() > limit)
        throw Error(ErrorKind::limit, "exact solver limited to " + std::to_string(limit) +
                                          " items, instance has " +
                                          std::to_string(instance.item_count()));

    PackerResult seed = bfd_pack(instance);
    BranchAndBound bb(instance);
    bb.best_bins = seed.bins_used;
    bb.best_packing = seed.packing.bins();
    bb.placed_bin.resize(instance.item_count());
    if (!bb.done()) bb.search(0);

    PackerResult result{Packing(std::move(bb.best_packing)), 0, Algorithm::opt, std::nullopt};
    result.bins_used = result.packing.bin_count();
    return result;
}

} // namespace sbp
