#include "jumpq/machine.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace jumpq {

std::string to_string(LockDiscipline d) {
  return d == LockDiscipline::Loose ? "loose" : "strict";
}

MachineState MachineState::init(int n, LockDiscipline discipline) {
  if (n < 0) throw std::invalid_argument("MachineState::init: n must be nonnegative");
  MachineState s;
  s.n = n;
  s.next_input = 1;
  s.discipline = discipline;
  return s;
}

bool MachineState::value_in_queue(int value) const {
  return queue_index_of(value) >= 0;
}

int MachineState::queue_index_of(int value) const {
  for (std::size_t i = 0; i < queue.size(); ++i)
    if (queue[i].value == value) return static_cast<int>(i);
  return -1;
}

bool MachineState::token_active(int token_id) const {
  for (int v : tokens[static_cast<std::size_t>(token_id)].release_set)
    if (value_in_queue(v)) return true;
  return false;
}

bool MachineState::entry_locked(int queue_index) const {
  for (int id : queue[static_cast<std::size_t>(queue_index)].token_ids)
    if (token_active(id)) return true;
  return false;
}

std::vector<int> MachineState::active_token_ids() const {
  std::vector<int> ids;
  for (std::size_t id = 0; id < tokens.size(); ++id)
    if (token_active(static_cast<int>(id))) ids.push_back(static_cast<int>(id));
  return ids;
}

std::vector<int> MachineState::queue_values() const {
  std::vector<int> vals;
  vals.reserve(queue.size());
  for (const auto& e : queue) vals.push_back(e.value);
  return vals;
}

std::vector<Operation> legal_operations(const MachineState& state) {
  std::vector<Operation> ops;
  if (state.next_input <= state.n) ops.push_back(Operation::enqueue(state.next_input));
  if (!state.queue.empty()) ops.push_back(Operation::pop_front(state.queue.front().value));
  for (int i = 1; i < state.queue_size(); ++i)
    if (!state.entry_locked(i))
      ops.push_back(Operation::jump(state.queue[static_cast<std::size_t>(i)].value));
  return ops;
}

MachineState apply_operation(const MachineState& state, const Operation& op) {
  MachineState s = state;
  switch (op.kind) {
    case Operation::Kind::Enqueue: {
      if (s.next_input > s.n) throw IllegalOperation("enqueue: input exhausted");
      if (op.value != s.next_input)
        throw IllegalOperation("enqueue: value " + std::to_string(op.value) +
                               " does not match next input " + std::to_string(s.next_input));
      QueueEntry entry{op.value, {}};
      if (s.discipline == LockDiscipline::Strict) entry.token_ids = s.active_token_ids();
      s.queue.push_back(std::move(entry));
      ++s.next_input;
      break;
    }
    case Operation::Kind::PopFront: {
      if (s.queue.empty()) throw IllegalOperation("pop_front: queue is empty");
      if (s.queue.front().value != op.value)
        throw IllegalOperation("pop_front: front of queue is " +
                               std::to_string(s.queue.front().value) + ", not " +
                               std::to_string(op.value));
      s.queue.erase(s.queue.begin());
      s.output.push_back(op.value);
      break;
    }
    case Operation::Kind::Jump: {
      const int idx = s.queue_index_of(op.value);
      if (idx < 0)
        throw IllegalOperation("jump: value " + std::to_string(op.value) +
                               " is not in the queue");
      if (idx == 0)
        throw IllegalOperation("jump: value " + std::to_string(op.value) +
                               " is at the front of the queue; removal there is a pop");
      if (s.entry_locked(idx))
        throw IllegalOperation("jump: value " + std::to_string(op.value) + " is locked");
      // A rear jump leaves nobody behind to hold a token, so none is made.
      if (idx + 1 < s.queue_size()) {
        LockToken token;
        for (int j = 0; j < idx; ++j)
          token.release_set.push_back(s.queue[static_cast<std::size_t>(j)].value);
        const int id = static_cast<int>(s.tokens.size());
        s.tokens.push_back(std::move(token));
        for (int j = idx + 1; j < s.queue_size(); ++j)
          s.queue[static_cast<std::size_t>(j)].token_ids.push_back(id);
      }
      s.queue.erase(s.queue.begin() + idx);
      s.output.push_back(op.value);
      break;
    }
  }
  return s;
}

std::vector<int> locks_created_by(const MachineState& state, const Operation& op) {
  switch (op.kind) {
    case Operation::Kind::Enqueue:
      if (state.discipline == LockDiscipline::Strict && !state.active_token_ids().empty())
        return {op.value};
      return {};
    case Operation::Kind::PopFront:
      return {};
    case Operation::Kind::Jump: {
      const int idx = state.queue_index_of(op.value);
      std::vector<int> behind;
      if (idx >= 1)
        for (int j = idx + 1; j < state.queue_size(); ++j)
          behind.push_back(state.queue[static_cast<std::size_t>(j)].value);
      return behind;
    }
  }
  return {};
}

namespace {

const Permutation& pattern_4231() {
  static const Permutation p{std::vector<int>{4, 2, 3, 1}};
  return p;
}

const Permutation& pattern_42513() {
  static const Permutation p{std::vector<int>{4, 2, 5, 1, 3}};
  return p;
}

RecognitionResult not_producible(const Permutation& perm, LockDiscipline discipline,
                                 int blocked_at) {
  RecognitionResult res;
  res.producible = false;
  res.blocked_at = blocked_at;
  if (auto occ = contains_pattern(perm, pattern_4231())) {
    res.witness = Witness{pattern_4231(), *occ};
    return res;
  }
  if (discipline == LockDiscipline::Strict) {
    if (auto occ = contains_pattern(perm, pattern_42513())) {
      res.witness = Witness{pattern_42513(), *occ};
      return res;
    }
  }
  throw std::logic_error("recognize: failed on " + perm.str() +
                         " but no forbidden pattern found");
}

} // namespace

RecognitionResult recognize(const Permutation& perm, LockDiscipline discipline) {
  const int n = perm.size();
  MachineState s = MachineState::init(n, discipline);
  RecognitionResult res;
  auto step = [&](Operation op) {
    s = apply_operation(s, op);
    res.trace.push_back(op);
  };

  for (int k = 0; k < n; ++k) {
    const int target = perm.at(k);
    if (target >= s.next_input) {
      // Bulk-enqueue up to the target, then emit it from the rear. The
      // entrant can itself be locked under Strict.
      while (s.next_input <= target) step(Operation::enqueue(s.next_input));
      if (s.queue_size() == 1) {
        step(Operation::pop_front(target));
        continue;
      }
      if (s.entry_locked(s.queue_size() - 1))
        return not_producible(perm, discipline, k + 1);
      step(Operation::jump(target));
    } else {
      const int idx = s.queue_index_of(target);
      if (idx < 0)
        throw std::logic_error("recognize: target value neither pending nor queued");
      if (idx == 0) {
        step(Operation::pop_front(target));
        continue;
      }
      if (s.entry_locked(idx)) return not_producible(perm, discipline, k + 1);
      step(Operation::jump(target));
    }
  }
  res.producible = true;
  return res;
}

std::set<Permutation> producible_set(int n, LockDiscipline discipline, int bound) {
  if (n > bound) throw BoundExceeded("producible_set", n, bound);
  std::set<Permutation> out;
  auto stream = permutations_of(n, bound);
  while (auto perm = stream.next())
    if (recognize(*perm, discipline).producible) out.insert(*perm);
  return out;
}

namespace {

// Canonical form for DFS deduplication. Two states with the same key admit
// the same continuations: the key captures input position, the full output
// prefix, queue order, and each entry's set of still-relevant release sets.
std::string state_key(const MachineState& s) {
  std::string key = std::to_string(s.next_input);
  key += '|';
  for (int v : s.output) {
    key += std::to_string(v);
    key += ',';
  }
  for (const auto& entry : s.queue) {
    key += '|';
    key += std::to_string(entry.value);
    key += '[';
    std::set<std::vector<int>> remaining_sets;
    for (int id : entry.token_ids) {
      std::vector<int> remaining;
      for (int rv : s.tokens[static_cast<std::size_t>(id)].release_set)
        if (s.value_in_queue(rv)) remaining.push_back(rv);
      if (!remaining.empty()) {
        std::sort(remaining.begin(), remaining.end());
        remaining_sets.insert(std::move(remaining));
      }
    }
    for (const auto& rem : remaining_sets) {
      for (int rv : rem) {
        key += std::to_string(rv);
        key += '.';
      }
      key += ';';
    }
    key += ']';
  }
  return key;
}

void dfs_outputs(const MachineState& s, std::set<Permutation>& out,
                 std::unordered_set<std::string>& seen) {
  if (static_cast<int>(s.output.size()) == s.n) {
    out.insert(Permutation(s.output));
    return;
  }
  if (!seen.insert(state_key(s)).second) return;
  for (const auto& op : legal_operations(s)) dfs_outputs(apply_operation(s, op), out, seen);
}

} // namespace

std::set<Permutation> producible_set_exhaustive(int n, LockDiscipline discipline,
                                                int bound) {
  if (n > bound) throw BoundExceeded("producible_set_exhaustive", n, bound);
  std::set<Permutation> out;
  std::unordered_set<std::string> seen;
  dfs_outputs(MachineState::init(n, discipline), out, seen);
  return out;
}

std::set<Permutation> frontal_outputs(int m, LockDiscipline discipline, int bound) {
  if (m > bound) throw BoundExceeded("frontal_outputs", m, bound);
  if (m < 0) throw std::invalid_argument("frontal_outputs: m must be nonnegative");
  MachineState s = MachineState::init(m, discipline);
  s.next_input = m + 1;
  for (int v = 1; v <= m; ++v) s.queue.push_back(QueueEntry{v, {}});
  std::set<Permutation> out;
  std::unordered_set<std::string> seen;
  dfs_outputs(s, out, seen);
  return out;
}

} // namespace jumpq
