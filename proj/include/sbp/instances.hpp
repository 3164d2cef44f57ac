#ifndef SBP_INSTANCES_HPP
#define SBP_INSTANCES_HPP

#include "sbp/model.hpp"

#include <cstdint>
#include <optional>

namespace sbp {

// Deterministic instance family: 2k items of size 2/3, 2k of size 1/3 and 3k
// of size 1/(3k), together with the stable reference packing (3k bins) and
// the reference optimal packing (2k+1 bins). k=1 is degenerate: the tiny
// size collides with 1/3 and the two reference packings tie at 3 bins.
struct FamilyInstance {
    Instance instance;
    Packing reference_ne;
    Packing reference_opt;
    bool degenerate = false; // k == 1 only
};

FamilyInstance gen_poa_lb(unsigned k);

// n sizes drawn i.i.d. from {1/grid, ..., grid/grid} by a seeded splitmix64
// stream; identical across platforms and runs.
Instance gen_uniform_grid(std::size_t n, unsigned grid, std::uint64_t seed);

// The raw generator stream, shared with the experiment driver.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace sbp

#endif
