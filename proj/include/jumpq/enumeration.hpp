#ifndef JUMPQ_ENUMERATION_HPP
#define JUMPQ_ENUMERATION_HPP

#include <string>
#include <vector>

#include "jumpq/bigint.hpp"
#include "jumpq/machine.hpp"

namespace jumpq {

/// Coefficients of a formal power series, indexed from 0. All three series
/// produced here (f, eta, catalan) have constant term 1.
struct SeriesTable {
  std::string name;
  std::vector<BigCount> coefficients;
};

/// Catalan numbers via the convolution c_0 = 1, c_{n+1} = sum c_i c_{n-i}.
SeriesTable catalan_series(int terms);
BigCount catalan(int n);

/// Number of ternary trees on i nodes: binomial(3i, i-1)/i for i >= 1, and
/// 1 for i = 0 (the empty-tree convention; it is what makes the cubic
/// t*eta^3 - eta + 1 = 0 hold with constant term 1, and the series cross-
/// checks below pin it).
BigCount ternary_count(int i);

/// eta_0..eta_N from the cubic alone: eta_0 = 1 and
/// eta_m = sum_{a+b+c=m-1} eta_a eta_b eta_c, evaluated as the coefficient
/// of t^(m-1) in eta^3 through a running table of eta^2. Independent of
/// ternary_count.
SeriesTable ternary_series(int terms);

/// f_0..f_N by f_0 = 1, f_n = sum_{i<n} eta_i f_{n-1-i} with eta from
/// ternary_count.
SeriesTable f_series_recurrence(int terms);

/// The two-index table pair
///   l(q,i) = [q=0][i=0] + l(q+1, i-1) + n(q-1, i)
///   n(q,i) = l(q,i) + sum_{j=1}^{q-1} c_{j-1} n(q-j, i)
/// over q + i <= bound, negative indices reading 0. q is the queue size and
/// i the remaining input; l restricts the next output to the rear of the
/// queue, n does not. f_n = l(0, n).
class DPTable {
public:
  explicit DPTable(int bound);

  int bound() const { return bound_; }
  BigCount l(int q, int i) const;
  BigCount n(int q, int i) const;

private:
  int bound_ = 0;
  // layer_[i][q], triangular: 0 <= q <= bound - i
  std::vector<std::vector<BigCount>> l_;
  std::vector<std::vector<BigCount>> n_;
};

DPTable dp_tables(int bound);

/// f_n read off the DP: dp_tables(n).l(0, n).
BigCount f_dp(int n);

/// |producible_set(n, Strict)|.
BigCount f_bruteforce(int n, int bound = kBruteForceBound);

/// One term of the growth diagnostic: f_{index+1}/f_index, exact, with a
/// 12-digit decimal rendering.
struct RatioTerm {
  int index = 0;
  BigRatio value;
  std::string decimal;
};

/// Terms for index = 1..terms-1. Requires terms >= 2.
std::vector<RatioTerm> growth_ratio(int terms);

} // namespace jumpq

#endif
