#ifndef JUMPQ_MACHINE_HPP
#define JUMPQ_MACHINE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jumpq/errors.hpp"
#include "jumpq/permutation.hpp"

namespace jumpq {

/// Default cap on the depth-first search over all operation sequences.
inline constexpr int kExhaustiveBound = 6;
/// Default cap on frontal-segment output enumeration.
inline constexpr int kFrontalBound = 7;

/// How jumping restricts later jumps.
///
/// Loose: a jump locks exactly the entries behind the jumped element; new
/// arrivals enter unlocked. Strict: additionally, an element entering a
/// queue that has locked entries enters locked itself.
enum class LockDiscipline { Loose, Strict };

std::string to_string(LockDiscipline d);

/// A lock created by one jump. `release_set` holds the values that were in
/// front of the jumped element; the token stays active while any of them is
/// still in the queue, and every entry holding an active token is forbidden
/// to jump. Tokens are only created when the jumped element had entries both
/// in front and behind, so `release_set` is never empty.
struct LockToken {
  std::vector<int> release_set;
};

/// One queue slot: the value plus the ids of every token ever attached to
/// it. Whether the entry is locked depends on which of those tokens are
/// still active.
struct QueueEntry {
  int value = 0;
  std::vector<int> token_ids;

  friend bool operator==(const QueueEntry&, const QueueEntry&) = default;
};

/// Snapshot of a jump queue mid-run. Queue values, output values and the
/// as-yet unread inputs {next_input..n} partition {1..n}. Token activity is
/// evaluated lazily: a token is active iff its release set still intersects
/// the queue.
struct MachineState {
  int n = 0;
  int next_input = 1;
  std::vector<QueueEntry> queue;
  std::vector<LockToken> tokens;
  std::vector<int> output;
  LockDiscipline discipline = LockDiscipline::Loose;

  /// Fresh machine: empty queue and output, inputs 1..n pending.
  static MachineState init(int n, LockDiscipline discipline);

  int queue_size() const { return static_cast<int>(queue.size()); }
  int input_remaining() const { return n - next_input + 1; }

  bool value_in_queue(int value) const;
  int queue_index_of(int value) const; // -1 when absent
  bool token_active(int token_id) const;
  bool entry_locked(int queue_index) const;
  std::vector<int> active_token_ids() const;
  std::vector<int> queue_values() const;
};

/// A single machine transition, tagged with the affected value.
struct Operation {
  enum class Kind { Enqueue, PopFront, Jump };

  Kind kind = Kind::Enqueue;
  int value = 0;

  static Operation enqueue(int v) { return {Kind::Enqueue, v}; }
  static Operation pop_front(int v) { return {Kind::PopFront, v}; }
  static Operation jump(int v) { return {Kind::Jump, v}; }

  friend bool operator==(const Operation&, const Operation&) = default;
};

/// Every operation admissible in `state`, in a fixed order: Enqueue of the
/// next input (if any), PopFront of the front entry (locks never forbid
/// front removal), then Jump of each unlocked non-front entry in queue
/// order.
std::vector<Operation> legal_operations(const MachineState& state);

/// Applies one operation, returning the successor state; the input state is
/// untouched. Enqueue under Strict attaches every currently active token to
/// the entrant. A jump with entries both in front and behind mints a token
/// with release set = the values in front, attached to every entry behind;
/// a jump from the rear creates no token. Throws IllegalOperation naming
/// the violated rule when the operation is not admissible.
MachineState apply_operation(const MachineState& state, const Operation& op);

/// Values this operation would attach a lock to, from the pre-state: the
/// entries behind a token-creating jump, or a Strict entrant joining a
/// queue with active locks. Empty otherwise.
std::vector<int> locks_created_by(const MachineState& state, const Operation& op);

/// A forbidden-pattern occurrence explaining a recognition failure.
struct Witness {
  Permutation pattern;
  PatternOccurrence occurrence;
};

/// Outcome of recognizing one target permutation. Producible results carry
/// a trace that replays from init() to the exact target; failures carry the
/// 1-based output position that blocked and a pattern witness.
struct RecognitionResult {
  bool producible = false;
  std::vector<Operation> trace;
  int blocked_at = 0;
  std::optional<Witness> witness;
};

/// Greedy simulation: each target value is emitted as soon as it can be.
/// When the target has not been enqueued yet, everything up to it is
/// enqueued first and the target emitted from the rear. Emission pops when
/// the target is at the front, jumps when it is unlocked elsewhere, and
/// fails when it is locked off the front. On failure the witness is found
/// by exhaustive pattern search: 4231 first, then 42513 under Strict.
RecognitionResult recognize(const Permutation& perm, LockDiscipline discipline);

/// All of S_n producible under `discipline`, by running recognize() on
/// every permutation.
std::set<Permutation> producible_set(int n, LockDiscipline discipline,
                                     int bound = kBruteForceBound);

/// All outputs reachable from init() by ANY legal operation sequence —
/// depth-first search with no greedy shortcut, deduplicating states on
/// (output prefix, queue, lock structure, next input). The oracle against
/// which the greedy recognizer is validated.
std::set<Permutation> producible_set_exhaustive(int n, LockDiscipline discipline,
                                                int bound = kExhaustiveBound);

/// Outputs reachable from a queue preloaded with 1..m, no pending input and
/// no locks. No enqueue ever happens, so the discipline parameter cannot
/// change the result; it is exposed so tests can confirm that.
std::set<Permutation> frontal_outputs(int m,
                                      LockDiscipline discipline = LockDiscipline::Loose,
                                      int bound = kFrontalBound);

} // namespace jumpq

#endif
