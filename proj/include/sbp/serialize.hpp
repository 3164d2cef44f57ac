#ifndef SBP_SERIALIZE_HPP
#define SBP_SERIALIZE_HPP

#include "sbp/cost.hpp"
#include "sbp/enumeration.hpp"
#include "sbp/equilibrium.hpp"
#include "sbp/model.hpp"
#include "sbp/packers.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sbp {

// Canonical JSON, byte-stable: sorted object keys, compact separators,
// rationals as canonical strings, packing bins ordered by bottom-item rank
// with ascending indices inside each bin.

Instance instance_from_json(std::string_view text);
std::string instance_to_json(const Instance& instance);

// Parses and fully validates against the instance (partition + loads).
Packing packing_from_json(const Instance& instance, std::string_view text);
std::string packing_to_json(const Instance& instance, const Packing& packing);

std::string deviation_to_json(const Deviation& d);
std::string coalition_to_json(const CoalitionDeviation& c);
std::string trajectory_to_json(const Instance& instance, const Trajectory& t);
std::string cost_vector_to_json(const CostVector& cv);
std::string packer_result_to_json(const Instance& instance, const PackerResult& r);
std::string report_to_json(const EquilibriumReport& report,
                           const Instance* instance = nullptr,
                           const std::vector<Packing>* ne_list = nullptr);

std::string error_to_json(const class Error& e);

} // namespace sbp

#endif
