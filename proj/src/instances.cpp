#include "sbp/instances.hpp"

#include "sbp/errors.hpp"

#include <string>

namespace sbp {

FamilyInstance gen_poa_lb(unsigned k) {
    if (k < 1) throw Error(ErrorKind::invalid_argument, "family parameter k must be >= 1");
    const long long kk = k;
    std::vector<Rational> sizes;
    sizes.reserve(7 * k);
    for (unsigned i = 0; i < 2 * k; ++i) sizes.emplace_back(2, 3);
    for (unsigned i = 0; i < 2 * k; ++i) sizes.emplace_back(1, 3);
    for (unsigned i = 0; i < 3 * k; ++i) sizes.emplace_back(1, 3 * kk);
    Instance instance(std::move(sizes), "poa-lb-k" + std::to_string(k));

    // items: [0, 2k) of size 2/3, [2k, 4k) of size 1/3, [4k, 7k) tiny
    const ItemIndex tiny0 = 4 * static_cast<ItemIndex>(k);

    // 3k bins: each 2/3 with one tiny, each 1/3 pair with one tiny
    std::vector<Packing::Bin> stable;
    for (ItemIndex i = 0; i < 2 * k; ++i) stable.push_back({i, tiny0 + i});
    for (ItemIndex j = 0; j < k; ++j)
        stable.push_back({2 * k + 2 * j, 2 * k + 2 * j + 1, tiny0 + 2 * k + j});

    // 2k+1 bins: {2/3, 1/3} pairs plus one bin holding every tiny item
    std::vector<Packing::Bin> optimal;
    for (ItemIndex i = 0; i < 2 * k; ++i) optimal.push_back({i, 2 * k + i});
    Packing::Bin tiny_bin;
    for (ItemIndex t = tiny0; t < tiny0 + 3 * k; ++t) tiny_bin.push_back(t);
    optimal.push_back(std::move(tiny_bin));

    return FamilyInstance{std::move(instance), Packing(std::move(stable)),
                          Packing(std::move(optimal)), k == 1};
}

Instance gen_uniform_grid(std::size_t n, unsigned grid, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
    if (grid < 2) throw Error(ErrorKind::invalid_argument, "grid denominator must be >= 2");
    SplitMix64 rng(seed);
    std::vector<Rational> sizes;
    sizes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        long long num = static_cast<long long>(rng.next() % grid) + 1;
        sizes.emplace_back(num, static_cast<long long>(grid));
    }
    return Instance(std::move(sizes), "random-n" + std::to_string(n) + "-g" +
                                          std::to_string(grid) + "-s" + std::to_string(seed));
}

} // namespace sbp
