#include "sbp.h"

#include "sbp/enumeration.hpp"
#include "sbp/equilibrium.hpp"
#include "sbp/errors.hpp"
#include "sbp/experiment.hpp"
#include "sbp/instances.hpp"
#include "sbp/limits.hpp"
#include "sbp/packers.hpp"
#include "sbp/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct sbp_instance {
    sbp::Instance value;
};
struct sbp_packing {
    sbp::Packing value;
};
struct sbp_rule {
    sbp::CostRule value;
};

namespace {

thread_local std::string t_last_error;
thread_local std::string t_last_error_json;

sbp_status status_of(const sbp::Error& e) {
    switch (e.kind()) {
    case sbp::ErrorKind::parse: return SBP_ERR_PARSE;
    case sbp::ErrorKind::validation: return SBP_ERR_VALIDATION;
    case sbp::ErrorKind::invalid_argument: return SBP_ERR_INVALID_ARGUMENT;
    case sbp::ErrorKind::limit: return SBP_ERR_LIMIT;
    case sbp::ErrorKind::theorem_violation: return SBP_ERR_THEOREM_VIOLATION;
    }
    return SBP_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn> sbp_status guarded(Fn&& fn) {
    try {
        fn();
        return SBP_OK;
    } catch (const sbp::Error& e) {
        t_last_error = e.what();
        t_last_error_json = sbp::error_to_json(e);
        return status_of(e);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        t_last_error_json =
            std::string(R"({"error":{"kind":"internal","message":")") + e.what() + R"("}})";
        return SBP_ERR_INTERNAL;
    }
}

sbp_status require(bool ok, const char* what) {
    if (!ok) {
        t_last_error = what;
        t_last_error_json =
            std::string(R"({"error":{"kind":"invalid_argument","message":")") + what + R"("}})";
        return SBP_ERR_INVALID_ARGUMENT;
    }
    return SBP_OK;
}

} // namespace

extern "C" {

const char* sbp_version(void) { return "1.0.0"; }

const char* sbp_last_error(void) { return t_last_error.c_str(); }

const char* sbp_last_error_json(void) { return t_last_error_json.c_str(); }

void sbp_string_free(char* s) { std::free(s); }

/* instances */

sbp_status sbp_instance_parse_json(const char* json, sbp_instance** out) {
    if (auto s = require(json && out, "null argument")) return s;
    return guarded([&] { *out = new sbp_instance{sbp::instance_from_json(json)}; });
}

sbp_status sbp_instance_to_json(const sbp_instance* inst, char** out_json) {
    if (auto s = require(inst && out_json, "null argument")) return s;
    return guarded([&] { *out_json = dup_string(sbp::instance_to_json(inst->value)); });
}

size_t sbp_instance_item_count(const sbp_instance* inst) {
    return inst ? inst->value.item_count() : 0;
}

void sbp_instance_free(sbp_instance* inst) { delete inst; }

/* packings */

sbp_status sbp_packing_parse_json(const sbp_instance* inst, const char* json,
                                  sbp_packing** out) {
    if (auto s = require(inst && json && out, "null argument")) return s;
    return guarded([&] { *out = new sbp_packing{sbp::packing_from_json(inst->value, json)}; });
}

sbp_status sbp_packing_to_json(const sbp_instance* inst, const sbp_packing* p,
                               char** out_json) {
    if (auto s = require(inst && p && out_json, "null argument")) return s;
    return guarded([&] { *out_json = dup_string(sbp::packing_to_json(inst->value, p->value)); });
}

size_t sbp_packing_bin_count(const sbp_packing* p) { return p ? p->value.bin_count() : 0; }

sbp_status sbp_packing_validate(const sbp_instance* inst, const sbp_packing* p) {
    if (auto s = require(inst && p, "null argument")) return s;
    return guarded([&] { sbp::validate_packing(inst->value, p->value); });
}

void sbp_packing_free(sbp_packing* p) { delete p; }

/* rules */

sbp_status sbp_rule_parse(const char* spec, sbp_rule** out) {
    if (auto s = require(spec && out, "null argument")) return s;
    return guarded([&] { *out = new sbp_rule{sbp::CostRule::parse(spec)}; });
}

sbp_status sbp_rule_spec(const sbp_rule* rule, char** out_spec) {
    if (auto s = require(rule && out_spec, "null argument")) return s;
    return guarded([&] { *out_spec = dup_string(rule->value.spec()); });
}

void sbp_rule_free(sbp_rule* rule) { delete rule; }

/* costs */

sbp_status sbp_cost_vector_json(const sbp_rule* rule, const sbp_instance* inst,
                                const sbp_packing* p, char** out_json) {
    if (auto s = require(rule && inst && p && out_json, "null argument")) return s;
    return guarded([&] {
        sbp::CostVector cv = sbp::packing_cost_vector(rule->value, inst->value, p->value);
        *out_json = dup_string(sbp::cost_vector_to_json(cv));
    });
}

/* packers */

sbp_status sbp_pack(const sbp_instance* inst, const char* algo, int with_trace,
                    sbp_packing** out_packing, char** out_json) {
    if (auto s = require(inst && algo, "null argument")) return s;
    return guarded([&] {
        sbp::PackerResult result = [&] {
            std::string a = algo;
            if (a == "bfd") return sbp::bfd_pack(inst->value, with_trace != 0);
            if (a == "ffd") return sbp::ffd_pack(inst->value, with_trace != 0);
            if (a == "opt") return sbp::opt_solve(inst->value);
            throw sbp::Error(sbp::ErrorKind::invalid_argument, "unknown algorithm '" + a + "'");
        }();
        if (out_json)
            *out_json = dup_string(sbp::packer_result_to_json(inst->value, result));
        if (out_packing) *out_packing = new sbp_packing{std::move(result.packing)};
    });
}

/* equilibrium */

sbp_status sbp_is_nash(const sbp_rule* rule, const sbp_instance* inst, const sbp_packing* p,
                       int* out_is_ne, char** out_witness_json) {
    if (auto s = require(rule && inst && p && out_is_ne, "null argument")) return s;
    return guarded([&] {
        sbp::NashResult res = sbp::is_nash(rule->value, inst->value, p->value);
        *out_is_ne = res.is_ne ? 1 : 0;
        if (out_witness_json) {
            *out_witness_json =
                res.witness ? dup_string(sbp::deviation_to_json(*res.witness)) : nullptr;
        }
    });
}

sbp_status sbp_is_strong_nash(const sbp_rule* rule, const sbp_instance* inst,
                              const sbp_packing* p, int max_coalition,
                              int* out_is_strong_ne, char** out_witness_json) {
    if (auto s = require(rule && inst && p && out_is_strong_ne, "null argument")) return s;
    if (auto s = require(max_coalition >= 0, "max_coalition must be >= 0")) return s;
    return guarded([&] {
        sbp::StrongNashResult res = sbp::is_strong_nash(
            rule->value, inst->value, p->value, static_cast<std::size_t>(max_coalition));
        *out_is_strong_ne = res.is_strong_ne ? 1 : 0;
        if (out_witness_json) {
            *out_witness_json =
                res.witness ? dup_string(sbp::coalition_to_json(*res.witness)) : nullptr;
        }
    });
}

sbp_status sbp_best_response(const sbp_rule* rule, const sbp_instance* inst,
                             const sbp_packing* start, int step_cap,
                             char** out_trajectory_json, sbp_packing** out_final) {
    if (auto s = require(rule && inst && start, "null argument")) return s;
    if (auto s = require(step_cap >= 1, "step_cap must be >= 1")) return s;
    return guarded([&] {
        sbp::Trajectory traj = sbp::best_response_dynamics(
            rule->value, inst->value, start->value, static_cast<std::size_t>(step_cap));
        if (out_trajectory_json)
            *out_trajectory_json = dup_string(sbp::trajectory_to_json(inst->value, traj));
        if (out_final) *out_final = new sbp_packing{traj.final_packing()};
    });
}

sbp_status sbp_check_surplus(const sbp_instance* inst, const sbp_packing* p, int* out_holds) {
    if (auto s = require(inst && p && out_holds, "null argument")) return s;
    return guarded(
        [&] { *out_holds = sbp::check_surplus_property(inst->value, p->value) ? 1 : 0; });
}

/* enumeration */

sbp_status sbp_enumerate_report(const sbp_rule* rule, const sbp_instance* inst,
                                int include_ne_list, char** out_json) {
    if (auto s = require(rule && inst && out_json, "null argument")) return s;
    return guarded([&] {
        sbp::EquilibriumReport report = sbp::measure(rule->value, inst->value);
        if (include_ne_list) {
            std::vector<sbp::Packing> list = sbp::enumerate_ne(rule->value, inst->value);
            *out_json = dup_string(sbp::report_to_json(report, &inst->value, &list));
        } else {
            *out_json = dup_string(sbp::report_to_json(report));
        }
    });
}

/* generators */

sbp_status sbp_gen_poa_lb(int k, sbp_instance** out, sbp_packing** out_ref_ne,
                          sbp_packing** out_ref_opt) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    if (auto s = require(k >= 1, "k must be >= 1")) return s;
    return guarded([&] {
        sbp::FamilyInstance fam = sbp::gen_poa_lb(static_cast<unsigned>(k));
        *out = new sbp_instance{std::move(fam.instance)};
        if (out_ref_ne) *out_ref_ne = new sbp_packing{std::move(fam.reference_ne)};
        if (out_ref_opt) *out_ref_opt = new sbp_packing{std::move(fam.reference_opt)};
    });
}

sbp_status sbp_gen_random(int n, int grid, unsigned long long seed, sbp_instance** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    if (auto s = require(n >= 1 && grid >= 2, "need n >= 1 and grid >= 2")) return s;
    return guarded([&] {
        *out = new sbp_instance{sbp::gen_uniform_grid(static_cast<std::size_t>(n),
                                                      static_cast<unsigned>(grid), seed)};
    });
}

/* experiments */

sbp_status sbp_experiment_run(const char* suite_json, char** out_csv, int* out_violations) {
    if (auto s = require(suite_json && out_csv, "null argument")) return s;
    return guarded([&] {
        sbp::ExperimentResult res = sbp::run_experiment(sbp::suite_from_json(suite_json));
        *out_csv = dup_string(res.csv);
        if (out_violations) *out_violations = static_cast<int>(res.violations);
    });
}

/* limits */

void sbp_set_exact_limit(int n) {
    sbp::Limits::set_exact_limit(n < 0 ? 0 : static_cast<std::size_t>(n));
}

void sbp_set_opt_limit(int n) {
    sbp::Limits::set_opt_limit(n < 0 ? 0 : static_cast<std::size_t>(n));
}

} // extern "C"
