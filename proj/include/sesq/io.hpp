#pragma once

#include "sesq/problems.hpp"
#include "sesq/reductions.hpp"
#include "sesq/solvers.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace sesq {

using nlohmann::json;

inline constexpr std::size_t kMaxFileBytes = 64ull << 20;

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

json state_to_json(const MPSState& state);
MPSState state_from_json(const json& j);  // validates invariants, throws on reject

json weight_to_json(const WeightFunction& w);
WeightFunction weight_from_json(const json& j);

using QuantumInstance = std::variant<SESInstance, SESSPInstance>;
using ClassicalInstance =
    std::variant<SubsetSumInstance, PartitionInstance, RealSubsetSumInstance>;

json instance_to_json(const SESInstance& inst, bool inline_state = true);
json instance_to_json(const SESSPInstance& inst, bool inline_state = true);
// "state" may be an inline object or a path string to a state file
QuantumInstance quantum_instance_from_json(const json& j);

json classical_to_json(const ClassicalInstance& inst);
ClassicalInstance classical_from_json(const json& j);

json certificate_to_json(const SubsetCertificate& cert);
json certificate_to_json(const SplitCertificate& cert);

json map_to_json(const ReductionMap& map);
ReductionMap map_from_json(const json& j);

json bundle_to_json(const QuantumInstance& inst, const ReductionMap& map);

json result_to_json(const SolveResult& result);

}  // namespace sesq
