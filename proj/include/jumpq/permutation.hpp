#ifndef JUMPQ_PERMUTATION_HPP
#define JUMPQ_PERMUTATION_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jumpq/errors.hpp"

namespace jumpq {

/// Default cap on operations that iterate all n! permutations.
inline constexpr int kBruteForceBound = 10;

/// A permutation of {1..n} in one-line notation. The empty sequence is the
/// unique permutation of length 0. Construction validates the invariant.
///
/// Positions in all reported data (pattern occurrences, left-to-right maxima)
/// are 1-based; `at()` indexes the underlying sequence 0-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int at(int index) const { return values_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& values() const { return values_; }

  /// Canonical text form: space-separated decimal values.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

/// Parses whitespace- or comma-separated decimal values.
/// Throws NotAPermutation naming the offending token.
Permutation parse_permutation(std::string_view text);

/// An occurrence of a pattern inside a host permutation: 1-based positions,
/// strictly increasing, order-isomorphic to the pattern.
struct PatternOccurrence {
  std::vector<int> positions;

  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

/// Finds the lexicographically least occurrence of `pattern` in `host`,
/// or nullopt if `host` avoids it. The pattern must be nonempty.
std::optional<PatternOccurrence> contains_pattern(const Permutation& host,
                                                  const Permutation& pattern);

/// True iff `host` contains none of `patterns`.
bool avoids_all(const Permutation& host, const std::vector<Permutation>& patterns);

/// Positions p (1-based) whose value exceeds every earlier value, with the
/// values; both components strictly increasing.
std::vector<std::pair<int, int>> left_to_right_maxima(const Permutation& perm);

/// One stage of the maxima decomposition: a left-to-right maximum and the
/// segment of smaller values following it.
struct Stage {
  int maximum = 0;
  std::vector<int> tail;

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Splits a permutation at its left-to-right maxima. Concatenating
/// maximum+tail over all stages reproduces the input.
struct StageDecomposition {
  std::vector<Stage> stages;
};

StageDecomposition stage_decompose(const Permutation& perm);

/// Single-pass 231-avoidance test: a running stack of candidate values plus
/// the largest value known to have a larger successor. Agrees with
/// contains_pattern(perm, 231) == nullopt.
bool is_231_avoiding(const Permutation& perm);

/// Streams all n! permutations of {1..n} exactly once, in lexicographic
/// order. Construction throws BoundExceeded when n > bound.
class PermutationStream {
public:
  explicit PermutationStream(int n, int bound = kBruteForceBound);

  /// Next permutation, or nullopt when exhausted.
  std::optional<Permutation> next();

private:
  std::vector<int> current_;
  bool done_ = false;
};

inline PermutationStream permutations_of(int n, int bound = kBruteForceBound) {
  return PermutationStream(n, bound);
}

} // namespace jumpq

#endif
