#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "eclat/model.hpp"

namespace eclat {

using json = nlohmann::json;

inline constexpr const char* kScenarioSchema = "eclat-scenario/1";
inline constexpr const char* kReportSchema = "eclat-report/1";

/// Canonical JSON form of a state: object keyed by field name; enums as
/// symbols, sets as sorted symbol arrays, maps as objects over present keys.
json state_to_json(const StateSpace& space, const State& state);

/// Inverse of state_to_json; throws SyntaxError/ReferenceError/DomainError.
State state_from_json(const StateSpace& space, const json& j);

json params_to_json(const OperationDescriptor& op, const ParamValues& params);
ParamValues params_from_json(const OperationDescriptor& op, const json& j);

/// Scalar helpers shared by parse and scenario loading.
json scalar_to_json(const ScalarDomain& d, const Value& v);
Value scalar_from_json(const ScalarDomain& d, const json& j, const std::string& context);

/// FNV-1a 64-bit over a byte string.
std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(std::uint64_t h);

/// Digest of one state (canonical dump) and of a whole replica valuation.
std::string state_digest(const StateSpace& space, const State& state);

} // namespace eclat
