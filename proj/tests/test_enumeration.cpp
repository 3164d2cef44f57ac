#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbp/enumeration.hpp"
#include "sbp/errors.hpp"
#include "sbp/instances.hpp"
#include "sbp/limits.hpp"
#include "sbp/packers.hpp"

#include <set>
#include <string>
#include <vector>

using namespace sbp;

namespace {

Instance make(std::vector<std::string> sizes) {
    std::vector<Rational> rs;
    for (auto& s : sizes) rs.push_back(Rational::parse(s));
    return Instance(std::move(rs));
}

Packing pk(std::vector<Packing::Bin> bins) { return Packing(std::move(bins)); }

// Count-only oracle, independent of the generator: iterate restricted-growth
// strings directly and recheck every load from scratch.
std::uint64_t count_valid_partitions(const Instance& inst) {
    const std::size_t n = inst.item_count();
    std::vector<std::size_t> rgs(n, 0);
    std::uint64_t count = 0;
    while (true) {
        std::size_t groups = 0;
        for (std::size_t i = 0; i < n; ++i) groups = std::max(groups, rgs[i] + 1);
        bool valid = true;
        for (std::size_t g = 0; g < groups && valid; ++g) {
            Rational load(0);
            for (std::size_t i = 0; i < n; ++i)
                if (rgs[i] == g) load += inst.size(i);
            if (load > Rational(1)) valid = false;
        }
        if (valid) ++count;

        // next restricted-growth string
        std::size_t i = n;
        while (i-- > 1) {
            std::size_t prefix_max = 0;
            for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
                break;
            }
            rgs[i] = 0;
        }
        bool done = true;
        for (std::size_t j = 1; j < n; ++j)
            if (rgs[j] != 0) done = false;
        if (done) break;
    }
    return count;
}

const CostRule tri34 = CostRule::local(Rational(3, 4), Density::triangular);

} // namespace

TEST_CASE("small enumerations are exact") {
    CHECK(count_valid_partitions(make({"1/2", "1/2"})) == 2);

    std::size_t two = 0;
    enumerate_packings(make({"1/2", "1/2"}), [&](const Packing&) {
        ++two;
        return true;
    });
    CHECK(two == 2);

    std::size_t heavy = 0;
    enumerate_packings(make({"2/3", "2/3"}), [&](const Packing& p) {
        ++heavy;
        CHECK(p.bin_count() == 2); // the joint bin would overflow
        return true;
    });
    CHECK(heavy == 1);

    std::size_t bell3 = 0;
    enumerate_packings(make({"1/2", "1/3", "1/6"}), [&](const Packing&) {
        ++bell3;
        return true;
    });
    CHECK(bell3 == 5); // total size 1: every partition of 3 items is valid
}

TEST_CASE("generator count matches the independent counter, packings distinct") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Instance inst = gen_uniform_grid(1 + seed % 8, 12, seed * 37);
        std::set<std::string> keys;
        std::uint64_t count = 0;
        enumerate_packings(inst, [&](const Packing& p) {
            ++count;
            CHECK_NOTHROW(validate_packing(inst, p));
            keys.insert(p.canonical_key());
            return true;
        });
        CHECK(count == keys.size());
        CHECK(count == count_valid_partitions(inst));
    }
}

TEST_CASE("tiny items reach the Bell numbers") {
    // all partitions valid when every subset fits
    const std::uint64_t bell[] = {1, 2, 5, 15, 52, 203, 877};
    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<Rational> sizes(n, Rational(1, 12));
        Instance inst(sizes);
        std::uint64_t count = 0;
        enumerate_packings(inst, [&](const Packing&) {
            ++count;
            return true;
        });
        CHECK(count == bell[n - 1]);
    }
}

TEST_CASE("enumeration respects the exhaustive limit") {
    std::vector<Rational> sizes(11, Rational(1, 12));
    Instance inst(sizes);
    CHECK_THROWS_AS(enumerate_packings(inst, [](const Packing&) { return true; }), Error);
    std::uint64_t count = 0;
    CHECK_NOTHROW(
        enumerate_packings(inst, [&](const Packing&) { ++count; return true; }, 11));
    CHECK(count > 0);
}

TEST_CASE("NE enumeration pins the worked examples") {
    SUBCASE("two halves merge") {
        Instance inst = make({"1/2", "1/2"});
        auto nes = enumerate_ne(tri34, inst);
        REQUIRE(nes.size() == 1);
        CHECK(nes[0] == pk({{0, 1}}));
    }
    SUBCASE("two unit items have a unique packing") {
        Instance inst = make({"1", "1"});
        auto nes = enumerate_ne(tri34, inst);
        REQUIRE(nes.size() == 1);
        CHECK(nes[0] == pk({{0}, {1}}));
    }
    SUBCASE("NE sets nest across lambda") {
        for (std::uint64_t seed : {2ull, 4ull, 8ull}) {
            Instance inst = gen_uniform_grid(6, 12, seed);
            auto high = enumerate_ne(tri34, inst);
            auto low = enumerate_ne(CostRule::local(Rational(1, 2), Density::triangular), inst);
            std::set<std::string> low_keys;
            for (const auto& p : low) low_keys.insert(p.canonical_key());
            for (const auto& p : high) CHECK(low_keys.count(p.canonical_key()) == 1);
        }
    }
}

TEST_CASE("the report bound threshold is the exact ceiling") {
    CHECK(ne_bins_lower_bound_on_opt(1) == 1);
    CHECK(ne_bins_lower_bound_on_opt(2) == 1);
    CHECK(ne_bins_lower_bound_on_opt(3) == 2);
    CHECK(ne_bins_lower_bound_on_opt(4) == 3);
    CHECK(ne_bins_lower_bound_on_opt(5) == 4);
    CHECK(ne_bins_lower_bound_on_opt(6) == 4);
    CHECK(ne_bins_lower_bound_on_opt(8) == 6);
}

TEST_CASE("measure on two halves") {
    EquilibriumReport rep = measure(tri34, make({"1/2", "1/2"}));
    CHECK(rep.ne_count == 1);
    CHECK(rep.min_ne_bins == 1);
    CHECK(rep.max_ne_bins == 1);
    CHECK(rep.opt_bins == 1);
    CHECK(rep.pos_ratio == Rational(1));
    CHECK(rep.poa_ratio == Rational(1));
    CHECK(rep.bound_ok);
}

TEST_CASE("instances that fit one bin have the single-bin NE") {
    for (std::uint64_t seed : {17ull, 34ull}) {
        Instance inst = gen_uniform_grid(3, 24, seed); // small sizes, often fits
        if (inst.total_size() > Rational(1)) continue;
        EquilibriumReport rep = measure(tri34, inst);
        CHECK(rep.opt_bins == 1);
        CHECK(rep.min_ne_bins == 1);
        CHECK(rep.pos_ratio == Rational(1));
    }
}

TEST_CASE("measure flags and enforces the NE-vs-optimum floor") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Instance inst = gen_uniform_grid(1 + seed % 7, 12, seed * 209);
        EquilibriumReport rep = measure(tri34, inst);
        CHECK(rep.ne_count >= 1);
        CHECK(rep.bound_ok);
        CHECK(static_cast<long long>(rep.opt_bins) >=
              ne_bins_lower_bound_on_opt(rep.max_ne_bins));
        CHECK(rep.pos_ratio == Rational(1)); // optimum is always reachable as an NE
    }
}

TEST_CASE("pos witness: family, singleton, random suite") {
    SUBCASE("k=2 family at 3/4 yields an optimal NE with 5 bins") {
        FamilyInstance fam = gen_poa_lb(2);
        Limits::set_exact_limit(14);
        Packing w = pos_witness(fam.instance, Rational(3, 4));
        Limits::set_exact_limit(0);
        CHECK(w.bin_count() == 5);
        CHECK(is_nash(tri34, fam.instance, w).is_ne);
        CHECK_NOTHROW(validate_packing(fam.instance, w));
    }
    SUBCASE("single item") {
        Packing w = pos_witness(make({"2/3"}), Rational(3, 4));
        CHECK(w.bin_count() == 1);
    }
    SUBCASE("random instances always admit an optimal NE") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Instance inst = gen_uniform_grid(1 + seed % 7, 12, seed * 787);
            Packing w = pos_witness(inst, Rational(2, 3));
            CHECK(w.bin_count() == opt_solve(inst).bins_used);
            CHECK(is_nash(CostRule::local(Rational(2, 3), Density::triangular), inst, w).is_ne);
        }
    }
    SUBCASE("lambda above 3/4 is rejected") {
        CHECK_THROWS_AS(pos_witness(make({"1/2"}), Rational(7, 8)), Error);
    }
}

TEST_CASE("measure also runs under the baseline rules") {
    Instance inst = make({"1/2", "1/3", "1/4"});
    for (const auto& rule : {CostRule::proportional(), CostRule::egalitarian()}) {
        EquilibriumReport rep = measure(rule, inst);
        CHECK(rep.opt_bins == 2);
        CHECK(rep.ne_count >= 1);
        CHECK(rep.min_ne_bins <= rep.max_ne_bins);
        CHECK(rep.rule_spec == rule.spec());
    }
}
