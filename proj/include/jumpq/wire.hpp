#ifndef JUMPQ_WIRE_HPP
#define JUMPQ_WIRE_HPP

#include <vector>

#include "json.hpp"

#include "jumpq/machine.hpp"

namespace jumpq {

/// One trace record: {"op":"enqueue"|"pop_front"|"jump", "value": v,
/// "locks_created":[values]} with locks_created absent when no lock was
/// attached by the operation.
nlohmann::json operation_to_json(const Operation& op, const std::vector<int>& locks_created);

/// Full trace with locks_created recomputed by replaying from init(n, d).
nlohmann::json trace_to_json(int n, LockDiscipline discipline,
                             const std::vector<Operation>& trace);

/// {"pattern":"4231"|"42513", "positions":[...]}.
nlohmann::json witness_to_json(const Witness& witness);

/// Reads back the operations of a serialized trace (locks_created entries,
/// if present, are ignored; replay re-derives them).
std::vector<Operation> trace_from_json(const nlohmann::json& records);

} // namespace jumpq

#endif
