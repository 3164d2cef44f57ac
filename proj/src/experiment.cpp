#include "sbp/experiment.hpp"

#include "sbp/enumeration.hpp"
#include "sbp/equilibrium.hpp"
#include "sbp/errors.hpp"
#include "sbp/instances.hpp"
#include "sbp/packers.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace sbp {

namespace {

const char* const kCsvVersion = "# sbp-experiment-csv v1";
const char* const kHeader =
    "instance,n,rule,algorithm,bins_used,opt_bins,is_ne,is_strong_ne,ratio,wall_time_ms";

struct Row {
    std::string instance_id;
    std::size_t n = 0;
    std::string rule;
    std::string algorithm;
    std::string bins_used;   // empty when not computed
    std::string opt_bins;    // empty when not computed
    std::string is_ne;       // "", "true", "false"
    std::string is_strong_ne;
    std::string ratio;       // canonical rational or empty
    long long wall_time_ms = 0;
    bool violation = false;

    std::string line() const {
        std::ostringstream os;
        os << instance_id << ',' << n << ',' << rule << ',' << algorithm << ',' << bins_used
           << ',' << opt_bins << ',' << is_ne << ',' << is_strong_ne << ',' << ratio << ','
           << wall_time_ms;
        return os.str();
    }
};

void require_local_lambda(const CostRule& rule, const char* check, const Rational& max_lambda,
                          bool exact) {
    if (!rule.is_local())
        throw Error(ErrorKind::invalid_argument,
                    std::string(check) + " requires a local rule, got " + rule.spec());
    if (exact ? !(rule.lambda() == max_lambda) : !(rule.lambda() <= max_lambda))
        throw Error(ErrorKind::invalid_argument,
                    std::string(check) + " requires lambda " + (exact ? "= " : "<= ") +
                        max_lambda.str() + ", got " + rule.spec());
}

Row run_check(const std::string& check, const CostRule& rule, const Instance& instance,
              const std::string& id) {
    Row row;
    row.instance_id = id;
    row.n = instance.item_count();
    row.rule = rule.spec();
    row.algorithm = check;

    if (check == "pos" || check == "poa_bound" || check == "ne_exists") {
        EquilibriumReport rep = measure(rule, instance);
        row.opt_bins = std::to_string(rep.opt_bins);
        if (check == "pos") {
            row.bins_used = std::to_string(rep.min_ne_bins);
            row.ratio = rep.pos_ratio.str();
            row.violation = !(rep.pos_ratio == Rational(1));
        } else if (check == "poa_bound") {
            row.bins_used = std::to_string(rep.max_ne_bins);
            row.ratio = rep.poa_ratio.str();
            row.violation = !rep.bound_ok;
        } else {
            row.bins_used = std::to_string(rep.ne_count);
            row.violation = rep.ne_count < 1;
        }
    } else if (check == "bfd_strong_ne") {
        PackerResult bfd = bfd_pack(instance);
        row.bins_used = std::to_string(bfd.bins_used);
        StrongNashResult res = is_strong_nash(rule, instance, bfd.packing);
        row.is_ne = is_nash(rule, instance, bfd.packing).is_ne ? "true" : "false";
        row.is_strong_ne = res.is_strong_ne ? "true" : "false";
        row.violation = !res.is_strong_ne;
    } else if (check == "bfd_ratio") {
        PackerResult bfd = bfd_pack(instance);
        PackerResult opt = opt_solve(instance);
        row.bins_used = std::to_string(bfd.bins_used);
        row.opt_bins = std::to_string(opt.bins_used);
        row.ratio = (Rational(static_cast<long long>(bfd.bins_used)) /
                     Rational(static_cast<long long>(opt.bins_used)))
                        .str();
        row.violation = 9 * static_cast<long long>(bfd.bins_used) >
                        11 * static_cast<long long>(opt.bins_used) + 9;
    } else if (check == "new_bin") {
        SuperiorityOrder order(instance);
        bool improving_fresh = false;
        enumerate_packings(instance, [&](const Packing& p) {
            for (const auto& bin : p.bins()) {
                for (auto& ic : bin_cost_vector(rule, instance, order, bin)) {
                    Rational fresh = cost_in_bin(rule, instance, order, {}, ic.item);
                    if (fresh < ic.cost) {
                        improving_fresh = true;
                        return false;
                    }
                }
            }
            return true;
        });
        row.violation = improving_fresh;
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown check '" + check + "'");
    }
    return row;
}

} // namespace

SuiteSpec suite_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw_parse("malformed suite JSON");
    try {
        SuiteSpec spec;
        spec.trials = j.value("trials", 0u);
        spec.max_n = j.value("n", 8u);
        spec.grid = j.value("grid", 12u);
        spec.seed = j.value("seed", 0ull);
        if (j.contains("rules"))
            for (const auto& r : j["rules"])
                spec.rules.push_back(CostRule::parse(r.get<std::string>()));
        if (j.contains("checks"))
            for (const auto& c : j["checks"]) spec.checks.push_back(c.get<std::string>());
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("malformed suite JSON: ") + e.what());
    }
}

ExperimentResult run_experiment(const SuiteSpec& spec) {
    if (spec.trials > 0) {
        if (spec.rules.empty())
            throw Error(ErrorKind::invalid_argument, "experiment needs at least one rule");
        if (spec.checks.empty())
            throw Error(ErrorKind::invalid_argument, "experiment needs at least one check");
        if (spec.max_n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
        if (spec.grid < 2) throw Error(ErrorKind::invalid_argument, "grid must be >= 2");
    }
    // reject incompatible (rule, check) pairs up front
    for (const auto& check : spec.checks) {
        for (const auto& rule : spec.rules) {
            if (check == "pos" || check == "ne_exists")
                require_local_lambda(rule, check.c_str(), Rational(3, 4), false);
            else if (check == "poa_bound")
                require_local_lambda(rule, check.c_str(), Rational(3, 4), true);
            else if (check == "bfd_strong_ne")
                require_local_lambda(rule, check.c_str(), Rational(2, 3), true);
            else if (check == "new_bin")
                require_local_lambda(rule, check.c_str(), Rational(1), false);
            else if (check != "bfd_ratio")
                throw Error(ErrorKind::invalid_argument, "unknown check '" + check + "'");
        }
    }

    std::ostringstream csv;
    csv << kCsvVersion << '\n' << kHeader << '\n';

    std::size_t violations = 0;
    std::size_t rows = 0;
    bool have_ratio = false;
    Rational min_ratio, max_ratio;

    SplitMix64 rng(spec.seed);
    for (std::size_t t = 0; t < spec.trials && violations == 0; ++t) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.next() % spec.max_n);
        std::uint64_t instance_seed = rng.next();
        Instance instance = gen_uniform_grid(n, spec.grid, instance_seed);
        char id[16];
        std::snprintf(id, sizeof id, "t%04zu", t);

        for (const auto& rule : spec.rules) {
            for (const auto& check : spec.checks) {
                auto t0 = std::chrono::steady_clock::now();
                Row row = run_check(check, rule, instance, id);
                auto t1 = std::chrono::steady_clock::now();
                row.wall_time_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                csv << row.line() << '\n';
                ++rows;
                if (!row.ratio.empty()) {
                    Rational r = Rational::parse(row.ratio);
                    if (!have_ratio) {
                        min_ratio = max_ratio = r;
                        have_ratio = true;
                    } else {
                        if (r < min_ratio) min_ratio = r;
                        if (max_ratio < r) max_ratio = r;
                    }
                }
                if (row.violation) {
                    ++violations;
                    break;
                }
            }
            if (violations) break;
        }
    }

    csv << "# summary rows=" << rows << " violations=" << violations;
    if (have_ratio)
        csv << " min_ratio=" << min_ratio.str() << " max_ratio=" << max_ratio.str();
    csv << '\n';
    return ExperimentResult{csv.str(), violations};
}

} // namespace sbp
