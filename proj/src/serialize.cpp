#include "sbp/serialize.hpp"

#include "sbp/errors.hpp"

#include <json.hpp>

namespace sbp {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_parse("malformed JSON");
    return j;
}

json bins_to_json(const Instance& instance, const Packing& packing) {
    SuperiorityOrder order(instance);
    json bins = json::array();
    for (const auto& bin : packing.canonical_bins(order)) {
        json b = json::array();
        for (ItemIndex i : bin) b.push_back(i);
        bins.push_back(std::move(b));
    }
    return bins;
}

json deviation_json(const Deviation& d) {
    json j;
    j["item"] = d.item;
    j["from"] = d.source_bin;
    if (d.to_new_bin())
        j["to"] = "new";
    else
        j["to"] = d.target_bin;
    j["cost_before"] = d.cost_before.str();
    j["cost_after"] = d.cost_after.str();
    return j;
}

} // namespace

Instance instance_from_json(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("sizes") || !j["sizes"].is_array())
        throw_parse("instance JSON must be an object with a 'sizes' array");
    std::vector<Rational> sizes;
    sizes.reserve(j["sizes"].size());
    for (const auto& s : j["sizes"]) {
        if (!s.is_string()) throw_parse("sizes must be rational strings");
        sizes.push_back(Rational::parse(s.get<std::string>()));
    }
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw_parse("instance name must be a string");
        name = j["name"].get<std::string>();
    }
    return Instance(std::move(sizes), std::move(name));
}

std::string instance_to_json(const Instance& instance) {
    json j;
    if (!instance.name().empty()) j["name"] = instance.name();
    json sizes = json::array();
    for (const auto& s : instance.sizes()) sizes.push_back(s.str());
    j["sizes"] = std::move(sizes);
    return j.dump();
}

Packing packing_from_json(const Instance& instance, std::string_view text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("bins") || !j["bins"].is_array())
        throw_parse("packing JSON must be an object with a 'bins' array");
    std::vector<Packing::Bin> bins;
    bins.reserve(j["bins"].size());
    for (const auto& b : j["bins"]) {
        if (!b.is_array()) throw_parse("each bin must be an array of item indices");
        Packing::Bin bin;
        for (const auto& i : b) {
            if (!i.is_number_unsigned()) throw_parse("item indices must be non-negative integers");
            bin.push_back(i.get<std::size_t>());
        }
        bins.push_back(std::move(bin));
    }
    Packing packing(std::move(bins));
    validate_packing(instance, packing);
    return packing;
}

std::string packing_to_json(const Instance& instance, const Packing& packing) {
    json j;
    j["bins"] = bins_to_json(instance, packing);
    return j.dump();
}

std::string deviation_to_json(const Deviation& d) { return deviation_json(d).dump(); }

std::string coalition_to_json(const CoalitionDeviation& c) {
    json moves = json::array();
    for (const auto& m : c.moves) {
        json j;
        j["item"] = m.item;
        j["from"] = m.source_bin;
        if (m.to_fresh)
            j["to"] = "new:" + std::to_string(m.target);
        else
            j["to"] = m.target;
        j["cost_before"] = m.cost_before.str();
        j["cost_after"] = m.cost_after.str();
        moves.push_back(std::move(j));
    }
    json j;
    j["moves"] = std::move(moves);
    return j.dump();
}

std::string trajectory_to_json(const Instance& instance, const Trajectory& t) {
    json j;
    j["start"] = json{{"bins", bins_to_json(instance, t.start)}};
    json steps = json::array();
    for (const auto& step : t.steps) {
        json s;
        s["move"] = deviation_json(step.move);
        s["packing"] = json{{"bins", bins_to_json(instance, step.result)}};
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    switch (t.terminal) {
    case Terminal::ne_reached: j["terminal"] = "ne_reached"; break;
    case Terminal::step_cap: j["terminal"] = "step_cap"; break;
    case Terminal::cycle_detected: j["terminal"] = "cycle_detected"; break;
    }
    return j.dump();
}

std::string cost_vector_to_json(const CostVector& cv) {
    json costs = json::array();
    for (const auto& c : cv.costs()) costs.push_back(c.str());
    json j;
    j["costs"] = std::move(costs);
    j["total"] = cv.total().str();
    return j.dump();
}

std::string packer_result_to_json(const Instance& instance, const PackerResult& r) {
    json j;
    j["algorithm"] = algorithm_name(r.algorithm);
    j["bins"] = bins_to_json(instance, r.packing);
    j["bins_used"] = r.bins_used;
    if (r.trace) {
        json trace = json::array();
        for (const auto& step : *r.trace) {
            trace.push_back(json{{"item", step.item}, {"bin", step.bin},
                                 {"opened", step.opened_new}});
        }
        j["trace"] = std::move(trace);
    }
    return j.dump();
}

std::string report_to_json(const EquilibriumReport& report, const Instance* instance,
                           const std::vector<Packing>* ne_list) {
    json j;
    j["instance"] = report.instance_name;
    j["rule"] = report.rule_spec;
    j["ne_count"] = report.ne_count;
    j["min_ne_bins"] = report.min_ne_bins;
    j["max_ne_bins"] = report.max_ne_bins;
    j["opt_bins"] = report.opt_bins;
    j["pos_ratio"] = report.pos_ratio.str();
    j["poa_ratio"] = report.poa_ratio.str();
    j["bound_ok"] = report.bound_ok;
    if (ne_list && instance) {
        json list = json::array();
        for (const auto& p : *ne_list)
            list.push_back(json{{"bins", bins_to_json(*instance, p)}});
        j["ne_packings"] = std::move(list);
    }
    return j.dump();
}

std::string error_to_json(const Error& e) {
    json j;
    const char* kind = "error";
    switch (e.kind()) {
    case ErrorKind::parse: kind = "parse"; break;
    case ErrorKind::validation: kind = "validation"; break;
    case ErrorKind::invalid_argument: kind = "invalid_argument"; break;
    case ErrorKind::limit: kind = "limit"; break;
    case ErrorKind::theorem_violation: kind = "theorem_violation"; break;
    }
    json inner;
    inner["kind"] = kind;
    inner["message"] = e.what();
    if (e.bin()) inner["bin"] = *e.bin();
    if (e.item()) inner["item"] = *e.item();
    j["error"] = std::move(inner);
    return j.dump();
}

} // namespace sbp
