#include "sbp/model.hpp"

#include "sbp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sbp {

Instance::Instance(std::vector<Rational> sizes, std::string name)
    : sizes_(std::move(sizes)), name_(std::move(name)) {
    if (sizes_.empty()) throw Error(ErrorKind::validation, "instance has no items");
    const Rational zero(0), one(1);
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (!(sizes_[i] > zero && sizes_[i] <= one)) {
            throw Error(ErrorKind::validation,
                        "item size out of range (0,1]: item " + std::to_string(i) + " = " +
                            sizes_[i].str(),
                        std::nullopt, i);
        }
    }
}

Rational Instance::total_size() const {
    Rational total(0);
    for (const auto& s : sizes_) total += s;
    return total;
}

SuperiorityOrder::SuperiorityOrder(const Instance& instance) {
    const std::size_t n = instance.item_count();
    by_rank_.resize(n);
    std::iota(by_rank_.begin(), by_rank_.end(), ItemIndex{0});
    std::stable_sort(by_rank_.begin(), by_rank_.end(), [&](ItemIndex a, ItemIndex b) {
        return instance.size(b) < instance.size(a); // size descending, stable for index tie-break
    });
    rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) rank_[by_rank_[r]] = r;
}

Packing::Packing(std::vector<Bin> bins) : bins_(std::move(bins)) {
    for (std::size_t b = 0; b < bins_.size(); ++b) {
        if (bins_[b].empty())
            throw Error(ErrorKind::validation, "empty bin stored in packing", b, std::nullopt);
        std::sort(bins_[b].begin(), bins_[b].end());
    }
}

std::vector<Packing::Bin> Packing::canonical_bins(const SuperiorityOrder& order) const {
    std::vector<Bin> out = bins_;
    std::sort(out.begin(), out.end(), [&](const Bin& a, const Bin& b) {
        std::size_t ra = order.rank(a.front());
        for (ItemIndex i : a) ra = std::min(ra, order.rank(i));
        std::size_t rb = order.rank(b.front());
        for (ItemIndex i : b) rb = std::min(rb, order.rank(i));
        return ra < rb;
    });
    return out;
}

std::string Packing::canonical_key() const {
    std::vector<Bin> sorted = bins_; // bins already ascending internally
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    for (const Bin& bin : sorted) {
        for (ItemIndex i : bin) {
            key += std::to_string(i);
            key += ',';
        }
        key += ';';
    }
    return key;
}

Rational bin_load(const Instance& instance, const Packing::Bin& bin) {
    Rational load(0);
    for (ItemIndex i : bin) load += instance.size(i);
    return load;
}

void validate_packing(const Instance& instance, const Packing& packing) {
    const std::size_t n = instance.item_count();
    std::vector<int> seen(n, 0);
    for (std::size_t b = 0; b < packing.bin_count(); ++b) {
        for (ItemIndex i : packing.bin(b)) {
            if (i >= n)
                throw Error(ErrorKind::validation,
                            "unknown item index " + std::to_string(i) + " in bin " +
                                std::to_string(b),
                            b, i);
            if (seen[i]++)
                throw Error(ErrorKind::validation,
                            "item " + std::to_string(i) + " appears in more than one bin", b, i);
        }
        Rational load = bin_load(instance, packing.bin(b));
        if (load > Rational(1))
            throw Error(ErrorKind::validation,
                        "bin " + std::to_string(b) + " overflows: load " + load.str(), b,
                        std::nullopt);
    }
    for (ItemIndex i = 0; i < n; ++i) {
        if (!seen[i])
            throw Error(ErrorKind::validation, "item " + std::to_string(i) + " is not packed",
                        std::nullopt, i);
    }
}

Packing apply_move(const Packing& packing, ItemIndex item, std::size_t from, std::size_t to) {
    std::vector<Packing::Bin> bins = packing.bins();
    auto& src = bins.at(from);
    auto it = std::find(src.begin(), src.end(), item);
    if (it == src.end())
        throw Error(ErrorKind::invalid_argument,
                    "item " + std::to_string(item) + " not in bin " + std::to_string(from));
    src.erase(it);
    if (to == kNewBin) {
        bins.push_back({item});
    } else {
        bins.at(to).push_back(item);
    }
    bins.erase(std::remove_if(bins.begin(), bins.end(),
                              [](const Packing::Bin& b) { return b.empty(); }),
               bins.end());
    return Packing(std::move(bins));
}

} // namespace sbp
