#include "sbp/enumeration.hpp"

#include "sbp/errors.hpp"
#include "sbp/limits.hpp"
#include "sbp/packers.hpp"

#include <algorithm>

namespace sbp {

namespace {

struct PartitionWalker {
    const Instance& instance;
    const std::function<bool(const Packing&)>& visit;
    std::vector<Packing::Bin> bins;
    std::vector<Rational> loads;
    bool stopped = false;

    void walk(ItemIndex item) {
        if (stopped) return;
        if (item == instance.item_count()) {
            if (!visit(Packing(bins))) stopped = true;
            return;
        }
        const Rational& s = instance.size(item);
        const Rational one(1);
        for (std::size_t b = 0; b < bins.size() && !stopped; ++b) {
            if (loads[b] + s > one) continue;
            bins[b].push_back(item);
            loads[b] += s;
            walk(item + 1);
            loads[b] -= s;
            bins[b].pop_back();
        }
        if (stopped) return;
        bins.push_back({item});
        loads.emplace_back(s);
        walk(item + 1);
        bins.pop_back();
        loads.pop_back();
    }
};

} // namespace

void enumerate_packings(const Instance& instance,
                        const std::function<bool(const Packing&)>& visit,
                        std::size_t limit_override) {
    const std::size_t limit = limit_override ? limit_override : Limits::current().exact_limit;
    if (instance.item_count() > limit)
        throw Error(ErrorKind::limit, "packing enumeration limited to " + std::to_string(limit) +
                                          " items, instance has " +
                                          std::to_string(instance.item_count()));
    PartitionWalker walker{instance, visit, {}, {}, false};
    walker.walk(0);
}

std::vector<Packing> enumerate_ne(const CostRule& rule, const Instance& instance,
                                  std::size_t limit_override) {
    std::vector<Packing> out;
    enumerate_packings(
        instance,
        [&](const Packing& p) {
            if (is_nash(rule, instance, p).is_ne) out.push_back(p);
            return true;
        },
        limit_override);
    return out;
}

long long ne_bins_lower_bound_on_opt(std::size_t ne_bins) {
    // ceil(3m/4 - 1/2) = ceil((3m - 2)/4)
    long long m = static_cast<long long>(ne_bins);
    long long num = 3 * m - 2;
    return num <= 0 ? 0 : (num + 3) / 4;
}

EquilibriumReport measure(const CostRule& rule, const Instance& instance,
                          std::size_t limit_override) {
    EquilibriumReport report;
    report.instance_name = instance.name();
    report.rule_spec = rule.spec();

    std::size_t min_bins = 0, max_bins = 0, count = 0;
    enumerate_packings(
        instance,
        [&](const Packing& p) {
            if (is_nash(rule, instance, p).is_ne) {
                std::size_t m = p.bin_count();
                if (count == 0) {
                    min_bins = max_bins = m;
                } else {
                    min_bins = std::min(min_bins, m);
                    max_bins = std::max(max_bins, m);
                }
                ++count;
            }
            return true;
        },
        limit_override);

    report.ne_count = count;
    report.min_ne_bins = min_bins;
    report.max_ne_bins = max_bins;
    report.opt_bins = opt_solve(instance).bins_used;

    if (count == 0) {
        if (rule.is_local() && rule.lambda() <= Rational(3, 4))
            throw Error(ErrorKind::theorem_violation,
                        "no NE found under " + rule.spec() + " on instance '" +
                            instance.name() + "'");
        report.pos_ratio = Rational(0);
        report.poa_ratio = Rational(0);
        report.bound_ok = true;
        return report;
    }

    report.pos_ratio = Rational(static_cast<long long>(min_bins)) /
                       Rational(static_cast<long long>(report.opt_bins));
    report.poa_ratio = Rational(static_cast<long long>(max_bins)) /
                       Rational(static_cast<long long>(report.opt_bins));
    report.bound_ok = static_cast<long long>(report.opt_bins) >=
                      ne_bins_lower_bound_on_opt(max_bins);
    return report;
}

Packing pos_witness(const Instance& instance, const Rational& lambda,
                    std::size_t limit_override) {
    if (!(lambda > Rational(0) && lambda <= Rational(3, 4)))
        throw Error(ErrorKind::invalid_argument,
                    "pos witness requires lambda in (0, 3/4], got " + lambda.str());
    CostRule rule = CostRule::local(lambda, Density::triangular);
    const std::size_t opt_bins = opt_solve(instance).bins_used;

    Packing found;
    bool have = false;
    enumerate_packings(
        instance,
        [&](const Packing& p) {
            if (p.bin_count() == opt_bins && is_nash(rule, instance, p).is_ne) {
                found = p;
                have = true;
                return false;
            }
            return true;
        },
        limit_override);
    if (!have)
        throw Error(ErrorKind::theorem_violation,
                    "no optimal packing is an NE at lambda=" + lambda.str() + " on instance '" +
                        instance.name() + "'");
    return found;
}

} // namespace sbp
