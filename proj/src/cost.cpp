#include "sbp/cost.hpp"

#include "sbp/errors.hpp"

#include <algorithm>

namespace sbp {

CostRule CostRule::local(Rational lambda, Density density) {
    if (!(lambda > Rational(0) && lambda <= Rational(1)))
        throw Error(ErrorKind::invalid_argument, "lambda must be in (0,1], got " + lambda.str());
    return CostRule(RuleKind::local_size, std::move(lambda), density);
}

CostRule CostRule::proportional() {
    return CostRule(RuleKind::proportional, Rational(0), Density::triangular);
}

CostRule CostRule::egalitarian() {
    return CostRule(RuleKind::egalitarian, Rational(0), Density::triangular);
}

CostRule CostRule::parse(std::string_view spec) {
    if (spec == "proportional") return proportional();
    if (spec == "egalitarian") return egalitarian();
    if (spec.substr(0, 6) == "local:") {
        std::string_view rest = spec.substr(6);
        std::size_t colon = rest.rfind(':');
        if (colon == std::string_view::npos)
            throw_parse("rule spec 'local:<lambda>:<density>' expected, got '" +
                        std::string(spec) + "'");
        Rational lambda = Rational::parse(rest.substr(0, colon));
        std::string_view dens = rest.substr(colon + 1);
        Density d;
        if (dens == "triangular")
            d = Density::triangular;
        else if (dens == "quadratic")
            d = Density::quadratic;
        else
            throw_parse("unknown density '" + std::string(dens) + "'");
        return local(std::move(lambda), d);
    }
    throw_parse("unknown rule spec '" + std::string(spec) + "'");
}

std::string CostRule::spec() const {
    switch (kind_) {
    case RuleKind::proportional: return "proportional";
    case RuleKind::egalitarian: return "egalitarian";
    case RuleKind::local_size:
        return "local:" + lambda_.str() +
               (density_ == Density::triangular ? ":triangular" : ":quadratic");
    }
    return {};
}

Rational cumulative_density(const CostRule& rule, const Rational& x) {
    if (!rule.is_local())
        throw Error(ErrorKind::invalid_argument, "cumulative density requires a local rule");
    if (x < Rational(0) || x > Rational(1))
        throw Error(ErrorKind::invalid_argument, "x outside [0,1]: " + x.str());
    const Rational& lam = rule.lambda();
    if (x >= lam) return Rational(1);
    if (rule.density() == Density::triangular) {
        // f(x) = 2/lam - 2x/lam^2  =>  F(x) = 2x/lam - x^2/lam^2
        Rational t = x / lam;
        return Rational(2) * t - t * t;
    }
    // cubic cumulative: F(x) = 1 - (1 - x/lam)^3
    Rational u = Rational(1) - x / lam;
    return Rational(1) - u * u * u;
}

Rational cost_in_bin(const CostRule& rule, const Instance& instance,
                     const SuperiorityOrder& order, const Packing::Bin& others, ItemIndex item) {
    switch (rule.kind()) {
    case RuleKind::egalitarian:
        return Rational(1, static_cast<long long>(others.size()) + 1);
    case RuleKind::proportional: {
        Rational total = instance.size(item);
        for (ItemIndex j : others) total += instance.size(j);
        return instance.size(item) / total;
    }
    case RuleKind::local_size: {
        Rational prefix(0), total = instance.size(item);
        bool bottom = true;
        for (ItemIndex j : others) {
            total += instance.size(j);
            if (order.superior(j, item)) {
                prefix += instance.size(j);
                bottom = false;
            }
        }
        Rational cost = cumulative_density(rule, prefix + instance.size(item)) -
                        cumulative_density(rule, prefix);
        if (bottom) cost += Rational(1) - cumulative_density(rule, total);
        return cost;
    }
    }
    throw Error(ErrorKind::invalid_argument, "unknown rule kind");
}

std::vector<ItemCost> bin_cost_vector(const CostRule& rule, const Instance& instance,
                                      const SuperiorityOrder& order, const Packing::Bin& bin) {
    if (bin.empty()) throw Error(ErrorKind::invalid_argument, "empty bin has no cost vector");
    Rational load(0);
    for (ItemIndex i : bin) load += instance.size(i);
    if (load > Rational(1))
        throw Error(ErrorKind::validation, "bin overflows: load " + load.str());

    std::vector<ItemIndex> stacked(bin.begin(), bin.end());
    std::sort(stacked.begin(), stacked.end(),
              [&](ItemIndex a, ItemIndex b) { return order.rank(a) < order.rank(b); });

    std::vector<ItemCost> out;
    out.reserve(stacked.size());
    switch (rule.kind()) {
    case RuleKind::egalitarian: {
        Rational share(1, static_cast<long long>(stacked.size()));
        for (ItemIndex i : stacked) out.push_back({i, share});
        break;
    }
    case RuleKind::proportional: {
        for (ItemIndex i : stacked) out.push_back({i, instance.size(i) / load});
        break;
    }
    case RuleKind::local_size: {
        Rational prefix(0);
        for (std::size_t j = 0; j < stacked.size(); ++j) {
            Rational next = prefix + instance.size(stacked[j]);
            Rational cost = cumulative_density(rule, next) - cumulative_density(rule, prefix);
            if (j == 0) cost += Rational(1) - cumulative_density(rule, load);
            out.push_back({stacked[j], std::move(cost)});
            prefix = std::move(next);
        }
        break;
    }
    }
    return out;
}

CostVector packing_cost_vector(const CostRule& rule, const Instance& instance,
                               const Packing& packing) {
    validate_packing(instance, packing);
    SuperiorityOrder order(instance);
    std::vector<Rational> costs(instance.item_count(), Rational(0));
    for (const auto& bin : packing.bins()) {
        for (auto& ic : bin_cost_vector(rule, instance, order, bin)) {
            costs[ic.item] = std::move(ic.cost);
        }
    }
    return CostVector(std::move(costs));
}

Rational CostVector::total() const {
    Rational t(0);
    for (const auto& c : costs_) t += c;
    return t;
}

} // namespace sbp
