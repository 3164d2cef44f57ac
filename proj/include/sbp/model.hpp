#ifndef SBP_MODEL_HPP
#define SBP_MODEL_HPP

#include "sbp/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sbp {

using ItemIndex = std::size_t;

// Immutable list of item sizes, all in (0, 1], input order preserved.
class Instance {
public:
    explicit Instance(std::vector<Rational> sizes, std::string name = {});

    const std::vector<Rational>& sizes() const noexcept { return sizes_; }
    const Rational& size(ItemIndex i) const { return sizes_.at(i); }
    std::size_t item_count() const noexcept { return sizes_.size(); }
    const std::string& name() const noexcept { return name_; }

    Rational total_size() const;

private:
    std::vector<Rational> sizes_;
    std::string name_;
};

// The fixed total order on items: size descending, ties by input index
// ascending. rank 0 is the most superior item.
class SuperiorityOrder {
public:
    explicit SuperiorityOrder(const Instance& instance);

    std::size_t rank(ItemIndex item) const { return rank_.at(item); }
    ItemIndex item_at(std::size_t rank) const { return by_rank_.at(rank); }
    std::size_t item_count() const noexcept { return by_rank_.size(); }
    bool superior(ItemIndex i, ItemIndex j) const { return rank_[i] < rank_[j]; }

private:
    std::vector<ItemIndex> by_rank_;
    std::vector<std::size_t> rank_;
};

// Partition of item indices into valid bins. Bins hold ascending item
// indices; empty bins are never stored. Immutable after construction
// (moves produce new packings).
class Packing {
public:
    using Bin = std::vector<ItemIndex>;

    Packing() = default;
    explicit Packing(std::vector<Bin> bins); // sorts within bins; rejects empty bins

    const std::vector<Bin>& bins() const noexcept { return bins_; }
    const Bin& bin(std::size_t b) const { return bins_.at(b); }
    std::size_t bin_count() const noexcept { return bins_.size(); }

    // Bins reordered by the rank of each bin's bottom item (its most superior
    // member); this is the serialization order.
    std::vector<Bin> canonical_bins(const SuperiorityOrder& order) const;

    // Order-free key identifying the partition; used for cycle detection.
    std::string canonical_key() const;

    friend bool operator==(const Packing& a, const Packing& b) {
        return a.canonical_key() == b.canonical_key();
    }

private:
    std::vector<Bin> bins_;
};

Rational bin_load(const Instance& instance, const Packing::Bin& bin);

// Throws Error(validation) on overlap, missing item, unknown index, or an
// overflowing bin, identifying the offending bin or item.
void validate_packing(const Instance& instance, const Packing& packing);

// New packing with `item` moved from bin `from` to bin `to`, or to a fresh
// bin when `to` == npos. Emptied bins are dropped (ids above shift down).
inline constexpr std::size_t kNewBin = static_cast<std::size_t>(-1);
Packing apply_move(const Packing& packing, ItemIndex item, std::size_t from, std::size_t to);

} // namespace sbp

#endif
