#include "jumpq/wire.hpp"

#include <stdexcept>
#include <string>

namespace jumpq {

namespace {

std::string kind_name(Operation::Kind kind) {
  switch (kind) {
    case Operation::Kind::Enqueue: return "enqueue";
    case Operation::Kind::PopFront: return "pop_front";
    case Operation::Kind::Jump: return "jump";
  }
  throw std::logic_error("unreachable operation kind");
}

Operation::Kind kind_from_name(const std::string& name) {
  if (name == "enqueue") return Operation::Kind::Enqueue;
  if (name == "pop_front") return Operation::Kind::PopFront;
  if (name == "jump") return Operation::Kind::Jump;
  throw std::invalid_argument("unknown operation kind '" + name + "'");
}

std::string pattern_word(const Permutation& pattern) {
  // Compact digit form ("4231") when every value is a single digit.
  bool compact = true;
  for (int v : pattern.values()) compact = compact && v <= 9;
  if (!compact) return pattern.str();
  std::string word;
  for (int v : pattern.values()) word += static_cast<char>('0' + v);
  return word;
}

} // namespace

nlohmann::json operation_to_json(const Operation& op, const std::vector<int>& locks_created) {
  nlohmann::json record;
  record["op"] = kind_name(op.kind);
  record["value"] = op.value;
  if (!locks_created.empty()) record["locks_created"] = locks_created;
  return record;
}

nlohmann::json trace_to_json(int n, LockDiscipline discipline,
                             const std::vector<Operation>& trace) {
  nlohmann::json records = nlohmann::json::array();
  MachineState state = MachineState::init(n, discipline);
  for (const auto& op : trace) {
    records.push_back(operation_to_json(op, locks_created_by(state, op)));
    state = apply_operation(state, op);
  }
  return records;
}

nlohmann::json witness_to_json(const Witness& witness) {
  nlohmann::json out;
  out["pattern"] = pattern_word(witness.pattern);
  out["positions"] = witness.occurrence.positions;
  return out;
}

std::vector<Operation> trace_from_json(const nlohmann::json& records) {
  if (!records.is_array()) throw std::invalid_argument("trace must be a JSON array");
  std::vector<Operation> trace;
  trace.reserve(records.size());
  for (const auto& record : records) {
    Operation op;
    op.kind = kind_from_name(record.at("op").get<std::string>());
    op.value = record.at("value").get<int>();
    trace.push_back(op);
  }
  return trace;
}

} // namespace jumpq
