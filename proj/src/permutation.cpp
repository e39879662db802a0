#include "jumpq/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace jumpq {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw NotAPermutation("value " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw NotAPermutation("duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

std::string Permutation::str() const {
  std::string out;
  for (int v : values_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r' ||
        text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' &&
           text[j] != '\r' && text[j] != ',')
      ++j;
    const std::string_view token = text.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw NotAPermutation("token '" + std::string(token) + "' is not an integer");
    if (value < 1)
      throw NotAPermutation("token '" + std::string(token) + "' is not a positive integer");
    values.push_back(value);
    i = j;
  }
  return Permutation(std::move(values));
}

namespace {

// Order-isomorphism of a value tuple to a pattern; O(k^2), used to guard
// every occurrence returned by contains_pattern.
bool order_isomorphic(const std::vector<int>& vals, const Permutation& pattern) {
  const int k = pattern.size();
  if (static_cast<int>(vals.size()) != k) return false;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if ((vals[a] < vals[b]) != (pattern.at(a) < pattern.at(b))) return false;
  return true;
}

} // namespace

std::optional<PatternOccurrence> contains_pattern(const Permutation& host,
                                                  const Permutation& pattern) {
  const int k = pattern.size();
  const int n = host.size();
  if (k == 0) throw std::invalid_argument("contains_pattern: pattern must be nonempty");
  if (k > n) return std::nullopt;

  // Backtracking over host indices, ascending at each slot, so the first
  // complete embedding is the lexicographically least. A partial embedding
  // is abandoned as soon as one relative order disagrees.
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  std::function<bool(int, int)> extend = [&](int slot, int from) -> bool {
    if (slot == k) return true;
    for (int p = from; p <= n - (k - slot); ++p) {
      bool ok = true;
      for (int j = 0; j < slot && ok; ++j)
        ok = (pattern.at(j) < pattern.at(slot)) == (host.at(chosen[static_cast<std::size_t>(j)]) < host.at(p));
      if (!ok) continue;
      chosen.push_back(p);
      if (extend(slot + 1, p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(0, 0)) return std::nullopt;

  std::vector<int> vals;
  vals.reserve(chosen.size());
  for (int p : chosen) vals.push_back(host.at(p));
  if (!order_isomorphic(vals, pattern))
    throw std::logic_error("contains_pattern: returned occurrence not order-isomorphic");

  PatternOccurrence occ;
  occ.positions.reserve(chosen.size());
  for (int p : chosen) occ.positions.push_back(p + 1);
  return occ;
}

bool avoids_all(const Permutation& host, const std::vector<Permutation>& patterns) {
  for (const auto& pattern : patterns)
    if (contains_pattern(host, pattern)) return false;
  return true;
}

std::vector<std::pair<int, int>> left_to_right_maxima(const Permutation& perm) {
  std::vector<std::pair<int, int>> maxima;
  int best = 0;
  for (int i = 0; i < perm.size(); ++i) {
    if (perm.at(i) > best) {
      best = perm.at(i);
      maxima.emplace_back(i + 1, best);
    }
  }
  return maxima;
}

StageDecomposition stage_decompose(const Permutation& perm) {
  StageDecomposition dec;
  for (int i = 0; i < perm.size(); ++i) {
    const int v = perm.at(i);
    if (dec.stages.empty() || v > dec.stages.back().maximum)
      dec.stages.push_back(Stage{v, {}});
    else
      dec.stages.back().tail.push_back(v);
  }
  return dec;
}

bool is_231_avoiding(const Permutation& perm) {
  // `limit` is the largest value seen so far that has a larger value after
  // it; any later value below it completes a 231. The stack holds values
  // in decreasing order awaiting such a successor.
  std::vector<int> stack;
  int limit = 0;
  for (int i = 0; i < perm.size(); ++i) {
    const int v = perm.at(i);
    if (v < limit) return false;
    while (!stack.empty() && stack.back() < v) {
      limit = std::max(limit, stack.back());
      stack.pop_back();
    }
    stack.push_back(v);
  }
  return true;
}

PermutationStream::PermutationStream(int n, int bound) {
  if (n < 0) throw std::invalid_argument("permutations_of: n must be nonnegative");
  if (n > bound) throw BoundExceeded("permutations_of", n, bound);
  current_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current_[static_cast<std::size_t>(i)] = i + 1;
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  Permutation out{std::vector<int>(current_)};
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return out;
}

} // namespace jumpq
