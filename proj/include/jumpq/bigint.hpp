#ifndef JUMPQ_BIGINT_HPP
#define JUMPQ_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace jumpq {

/// Exact nonnegative counts; never truncated or rounded.
using BigCount = boost::multiprecision::cpp_int;

/// Exact ratio of counts, for growth diagnostics.
using BigRatio = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Every intermediate
/// division in the multiplicative evaluation is checked to be exact.
BigCount binomial(int n, int k);

/// Renders a nonnegative rational as "<integer>.<digits>" with exactly
/// `digits` fractional digits, truncated.
std::string decimal_string(const BigRatio& value, int digits = 12);

} // namespace jumpq

#endif
