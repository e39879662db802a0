#ifndef JUMPQ_ERRORS_HPP
#define JUMPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jumpq {

/// Input text does not describe a permutation of 1..n. The message names
/// the offending token (duplicate, out-of-range, zero or non-integer).
class NotAPermutation : public std::runtime_error {
public:
  explicit NotAPermutation(const std::string& what) : std::runtime_error(what) {}
};

/// A factorial-cost operation was asked to exceed its configured bound.
class BoundExceeded : public std::runtime_error {
public:
  BoundExceeded(const std::string& op, int n, int bound)
      : std::runtime_error(op + ": n=" + std::to_string(n) + " exceeds bound " +
                           std::to_string(bound)) {}
};

/// An operation was applied to a machine state that does not admit it.
/// The message names the violated rule.
class IllegalOperation : public std::runtime_error {
public:
  explicit IllegalOperation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jumpq

#endif
