// Command-line front end for the selfish bin packing engine. Talks to the
// engine exclusively through the C API in sbp.h.
//
// Exit codes: 0 success; 1 domain error (error JSON on stderr); 2 usage
// error; 3 check failed (witness on stdout); 4 bound/theorem violation.

#include "sbp.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitViolation = 4;

struct CString {
    char* ptr = nullptr;
    ~CString() { sbp_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct InstanceHandle {
    sbp_instance* ptr = nullptr;
    ~InstanceHandle() { sbp_instance_free(ptr); }
};

struct PackingHandle {
    sbp_packing* ptr = nullptr;
    ~PackingHandle() { sbp_packing_free(ptr); }
};

struct RuleHandle {
    sbp_rule* ptr = nullptr;
    ~RuleHandle() { sbp_rule_free(ptr); }
};

[[noreturn]] void fail(sbp_status status) {
    std::cerr << sbp_last_error_json() << "\n";
    switch (status) {
    case SBP_ERR_INVALID_ARGUMENT: std::exit(kExitUsage);
    case SBP_ERR_THEOREM_VIOLATION: std::exit(kExitViolation);
    default: std::exit(kExitDomain);
    }
}

void check(sbp_status status) {
    if (status != SBP_OK) fail(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << R"({"error":{"kind":"io","message":"cannot read )" << path << R"("}})"
                  << "\n";
        std::exit(kExitDomain);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << R"({"error":{"kind":"io","message":"cannot write )" << out_path << R"("}})"
                  << "\n";
        std::exit(kExitDomain);
    }
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

void load_instance(const std::string& path, InstanceHandle& inst) {
    check(sbp_instance_parse_json(slurp(path).c_str(), &inst.ptr));
}

void load_packing(const InstanceHandle& inst, const std::string& path, PackingHandle& p) {
    check(sbp_packing_parse_json(inst.ptr, slurp(path).c_str(), &p.ptr));
}

// --rule spec, or --lambda p/q as shorthand for local:<p/q>:triangular
void load_rule(std::string rule_spec, const std::string& lambda, RuleHandle& rule) {
    if (rule_spec.empty() && !lambda.empty()) rule_spec = "local:" + lambda + ":triangular";
    if (rule_spec.empty()) {
        std::cerr << R"({"error":{"kind":"usage","message":"--rule or --lambda required"}})"
                  << "\n";
        std::exit(kExitUsage);
    }
    check(sbp_rule_parse(rule_spec.c_str(), &rule.ptr));
}

std::string singleton_packing_json(size_t n) {
    std::string json = R"({"bins":[)";
    for (size_t i = 0; i < n; ++i) {
        if (i) json += ',';
        json += '[' + std::to_string(i) + ']';
    }
    return json + "]}";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"selfish bin packing engine (exact arithmetic)", "sbp"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string gen_family, gen_out, gen_ref_dir;
    int gen_k = 2, gen_n = 8, gen_grid = 12;
    unsigned long long gen_seed = 0;
    gen->add_option("--family", gen_family, "poa-lb | random")->required();
    gen->add_option("--k", gen_k, "family parameter (poa-lb)");
    gen->add_option("--n", gen_n, "item count (random)");
    gen->add_option("--grid", gen_grid, "grid denominator (random)");
    gen->add_option("--seed", gen_seed, "generator seed (random)");
    gen->add_option("--out", gen_out, "output instance file (stdout if omitted)");
    gen->add_option("--ref-packings", gen_ref_dir,
                    "directory for reference packings (poa-lb)");

    // ---- pack ----
    auto* pack = app.add_subcommand("pack", "run a packing algorithm");
    std::string pack_algo, pack_instance, pack_out;
    bool pack_trace = false;
    pack->add_option("--algo", pack_algo, "bfd | ffd | opt")->required();
    pack->add_option("--instance", pack_instance, "instance JSON file")->required();
    pack->add_flag("--trace", pack_trace, "include the per-item placement log");
    pack->add_option("--out", pack_out, "output file (stdout if omitted)");

    // ---- check ----
    auto* chk = app.add_subcommand("check", "check a packing against a rule");
    std::string chk_rule, chk_lambda, chk_instance, chk_packing;
    bool chk_ne = false, chk_strong = false, chk_surplus = false;
    int chk_max_coalition = 0;
    chk->add_flag("--ne", chk_ne, "Nash equilibrium check");
    chk->add_flag("--strong-ne", chk_strong, "exhaustive strong NE check");
    chk->add_flag("--surplus", chk_surplus, "surplus diagnostic (NE at lambda=3/4)");
    chk->add_option("--rule", chk_rule, "cost-sharing rule spec");
    chk->add_option("--lambda", chk_lambda, "shorthand for local:<p/q>:triangular");
    chk->add_option("--instance", chk_instance, "instance JSON file")->required();
    chk->add_option("--packing", chk_packing, "packing JSON file")->required();
    chk->add_option("--max-coalition", chk_max_coalition, "coalition size cap (0 = all)");

    // ---- dynamics ----
    auto* dyn = app.add_subcommand("dynamics", "run best-response dynamics");
    std::string dyn_rule, dyn_lambda, dyn_instance, dyn_start, dyn_out;
    int dyn_max_steps = 10000;
    dyn->add_option("--rule", dyn_rule, "cost-sharing rule spec");
    dyn->add_option("--lambda", dyn_lambda, "shorthand for local:<p/q>:triangular");
    dyn->add_option("--instance", dyn_instance, "instance JSON file")->required();
    dyn->add_option("--start", dyn_start, "start packing file (default: one item per bin)");
    dyn->add_option("--max-steps", dyn_max_steps, "step cap");
    dyn->add_option("--out", dyn_out, "output file (stdout if omitted)");

    // ---- enumerate ----
    auto* enu = app.add_subcommand("enumerate", "exhaustive equilibrium report");
    std::string enu_rule, enu_lambda, enu_instance, enu_out;
    bool enu_list = false;
    enu->add_option("--rule", enu_rule, "cost-sharing rule spec");
    enu->add_option("--lambda", enu_lambda, "shorthand for local:<p/q>:triangular");
    enu->add_option("--instance", enu_instance, "instance JSON file")->required();
    enu->add_flag("--list-ne", enu_list, "include every NE packing");
    enu->add_option("--out", enu_out, "output file (stdout if omitted)");

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "batch suite with CSV output");
    std::vector<std::string> exp_rules;
    std::string exp_checks, exp_out;
    int exp_trials = 0, exp_n = 8, exp_grid = 12;
    unsigned long long exp_seed = 0;
    exp->add_option("--trials", exp_trials, "number of random instances")->required();
    exp->add_option("--n", exp_n, "maximum item count");
    exp->add_option("--grid", exp_grid, "grid denominator");
    exp->add_option("--seed", exp_seed, "suite seed");
    exp->add_option("--rule", exp_rules, "rule spec (repeatable)");
    exp->add_option("--checks", exp_checks, "comma-separated checks")->required();
    exp->add_option("--out", exp_out, "CSV output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) {
        InstanceHandle inst;
        PackingHandle ref_ne, ref_opt;
        if (gen_family == "poa-lb") {
            check(sbp_gen_poa_lb(gen_k, &inst.ptr, &ref_ne.ptr, &ref_opt.ptr));
        } else if (gen_family == "random") {
            check(sbp_gen_random(gen_n, gen_grid, gen_seed, &inst.ptr));
        } else {
            std::cerr << R"({"error":{"kind":"usage","message":"unknown family"}})" << "\n";
            return kExitUsage;
        }
        CString json;
        check(sbp_instance_to_json(inst.ptr, &json.ptr));
        emit(json.str(), gen_out);
        if (!gen_ref_dir.empty() && ref_ne.ptr) {
            CString ne_json, opt_json;
            check(sbp_packing_to_json(inst.ptr, ref_ne.ptr, &ne_json.ptr));
            check(sbp_packing_to_json(inst.ptr, ref_opt.ptr, &opt_json.ptr));
            emit(ne_json.str(), gen_ref_dir + "/poa-lb-k" + std::to_string(gen_k) + "-ne.json");
            emit(opt_json.str(),
                 gen_ref_dir + "/poa-lb-k" + std::to_string(gen_k) + "-opt.json");
        }
        return kExitOk;
    }

    if (pack->parsed()) {
        InstanceHandle inst;
        load_instance(pack_instance, inst);
        CString json;
        check(sbp_pack(inst.ptr, pack_algo.c_str(), pack_trace ? 1 : 0, nullptr, &json.ptr));
        emit(json.str(), pack_out);
        return kExitOk;
    }

    if (chk->parsed()) {
        if (int(chk_ne) + int(chk_strong) + int(chk_surplus) != 1) {
            std::cerr
                << R"({"error":{"kind":"usage","message":"exactly one of --ne, --strong-ne, --surplus"}})"
                << "\n";
            return kExitUsage;
        }
        InstanceHandle inst;
        load_instance(chk_instance, inst);
        PackingHandle packing;
        load_packing(inst, chk_packing, packing);
        if (chk_surplus) {
            int holds = 0;
            check(sbp_check_surplus(inst.ptr, packing.ptr, &holds));
            std::cout << (holds ? R"({"holds":true})" : R"({"holds":false})") << "\n";
            return holds ? kExitOk : kExitCheckFailed;
        }
        RuleHandle rule;
        load_rule(chk_rule, chk_lambda, rule);
        if (chk_ne) {
            int is_ne = 0;
            CString witness;
            check(sbp_is_nash(rule.ptr, inst.ptr, packing.ptr, &is_ne, &witness.ptr));
            if (is_ne) {
                std::cout << R"({"is_ne":true})" << "\n";
                return kExitOk;
            }
            std::cout << witness.str() << "\n";
            return kExitCheckFailed;
        }
        int strong = 0;
        CString witness;
        check(sbp_is_strong_nash(rule.ptr, inst.ptr, packing.ptr, chk_max_coalition, &strong,
                                 &witness.ptr));
        if (strong) {
            std::cout << R"({"is_strong_ne":true})" << "\n";
            return kExitOk;
        }
        std::cout << witness.str() << "\n";
        return kExitCheckFailed;
    }

    if (dyn->parsed()) {
        InstanceHandle inst;
        load_instance(dyn_instance, inst);
        RuleHandle rule;
        load_rule(dyn_rule, dyn_lambda, rule);
        PackingHandle start;
        if (dyn_start.empty()) {
            std::string json = singleton_packing_json(sbp_instance_item_count(inst.ptr));
            check(sbp_packing_parse_json(inst.ptr, json.c_str(), &start.ptr));
        } else {
            load_packing(inst, dyn_start, start);
        }
        CString traj;
        check(sbp_best_response(rule.ptr, inst.ptr, start.ptr, dyn_max_steps, &traj.ptr,
                                nullptr));
        emit(traj.str(), dyn_out);
        return kExitOk;
    }

    if (enu->parsed()) {
        InstanceHandle inst;
        load_instance(enu_instance, inst);
        RuleHandle rule;
        load_rule(enu_rule, enu_lambda, rule);
        CString report;
        check(sbp_enumerate_report(rule.ptr, inst.ptr, enu_list ? 1 : 0, &report.ptr));
        emit(report.str(), enu_out);
        return kExitOk;
    }

    if (exp->parsed()) {
        std::string suite = "{";
        suite += "\"trials\":" + std::to_string(exp_trials);
        suite += ",\"n\":" + std::to_string(exp_n);
        suite += ",\"grid\":" + std::to_string(exp_grid);
        suite += ",\"seed\":" + std::to_string(exp_seed);
        suite += ",\"rules\":[";
        for (size_t i = 0; i < exp_rules.size(); ++i) {
            if (i) suite += ',';
            suite += '"' + exp_rules[i] + '"';
        }
        suite += "],\"checks\":[";
        std::stringstream checks(exp_checks);
        std::string item;
        bool first = true;
        while (std::getline(checks, item, ',')) {
            if (!item.empty()) {
                if (!first) suite += ',';
                suite += '"' + item + '"';
                first = false;
            }
        }
        suite += "]}";

        CString csv;
        int violations = 0;
        check(sbp_experiment_run(suite.c_str(), &csv.ptr, &violations));
        emit(csv.str(), exp_out);
        return violations > 0 ? kExitViolation : kExitOk;
    }

    return kExitUsage;
}
