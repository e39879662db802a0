#include "jumpq/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jumpq {

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (int j = 1; j <= k; ++j) {
    result *= (n - k + j);
    BigCount quotient, remainder;
    boost::multiprecision::divide_qr(result, BigCount(j), quotient, remainder);
    if (remainder != 0)
      throw std::logic_error("binomial: intermediate division not exact");
    result = std::move(quotient);
  }
  return result;
}

std::string decimal_string(const BigRatio& value, int digits) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  BigCount integer_part = num / den;
  BigCount remainder = num % den;
  std::string out = integer_part.str();
  if (digits <= 0) return out;
  out += '.';
  for (int d = 0; d < digits; ++d) {
    remainder *= 10;
    const BigCount digit = remainder / den;
    out += digit.str();
    remainder -= digit * den;
  }
  return out;
}

SeriesTable catalan_series(int terms) {
  if (terms < 0) throw std::invalid_argument("catalan_series: terms must be nonnegative");
  std::vector<BigCount> c;
  c.reserve(static_cast<std::size_t>(terms) + 1);
  c.emplace_back(1);
  for (int n = 0; n < terms; ++n) {
    BigCount next = 0;
    for (int i = 0; i <= n; ++i)
      next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
    c.push_back(std::move(next));
  }
  return SeriesTable{"catalan", std::move(c)};
}

BigCount catalan(int n) {
  return catalan_series(n).coefficients[static_cast<std::size_t>(n)];
}

BigCount ternary_count(int i) {
  if (i < 0) throw std::invalid_argument("ternary_count: index must be nonnegative");
  if (i == 0) return 1;
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(binomial(3 * i, i - 1), BigCount(i), quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("ternary_count: binomial(3i, i-1) not divisible by i");
  return quotient;
}

SeriesTable ternary_series(int terms) {
  if (terms < 0) throw std::invalid_argument("ternary_series: terms must be nonnegative");
  std::vector<BigCount> eta;
  std::vector<BigCount> square; // coefficients of eta^2, kept in step with eta
  eta.reserve(static_cast<std::size_t>(terms) + 1);
  square.reserve(static_cast<std::size_t>(terms) + 1);
  eta.emplace_back(1);
  square.emplace_back(1);
  for (int m = 1; m <= terms; ++m) {
    // eta_m = [t^(m-1)] eta^3 = sum_a eta_a * square_{m-1-a}
    BigCount val = 0;
    for (int a = 0; a < m; ++a)
      val += eta[static_cast<std::size_t>(a)] * square[static_cast<std::size_t>(m - 1 - a)];
    eta.push_back(std::move(val));
    BigCount sq = 0;
    for (int i = 0; i <= m; ++i)
      sq += eta[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(m - i)];
    square.push_back(std::move(sq));
  }
  return SeriesTable{"eta", std::move(eta)};
}

SeriesTable f_series_recurrence(int terms) {
  if (terms < 0) throw std::invalid_argument("f_series_recurrence: terms must be nonnegative");
  std::vector<BigCount> eta;
  eta.reserve(static_cast<std::size_t>(terms));
  for (int i = 0; i < terms; ++i) eta.push_back(ternary_count(i));
  std::vector<BigCount> f;
  f.reserve(static_cast<std::size_t>(terms) + 1);
  f.emplace_back(1);
  for (int n = 1; n <= terms; ++n) {
    BigCount val = 0;
    for (int i = 0; i < n; ++i)
      val += eta[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(n - 1 - i)];
    f.push_back(std::move(val));
  }
  return SeriesTable{"f", std::move(f)};
}

DPTable::DPTable(int bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("dp_tables: bound must be nonnegative");
  const auto cat = catalan_series(bound).coefficients;
  l_.resize(static_cast<std::size_t>(bound) + 1);
  n_.resize(static_cast<std::size_t>(bound) + 1);
  // Layers in increasing i: l(q,i) reads the previous layer at q+1 and the
  // current layer's n at q-1, so q ascends with l before n per cell.
  for (int i = 0; i <= bound; ++i) {
    auto& l_layer = l_[static_cast<std::size_t>(i)];
    auto& n_layer = n_[static_cast<std::size_t>(i)];
    l_layer.assign(static_cast<std::size_t>(bound - i) + 1, BigCount(0));
    n_layer.assign(static_cast<std::size_t>(bound - i) + 1, BigCount(0));
    for (int q = 0; q <= bound - i; ++q) {
      BigCount lv = (q == 0 && i == 0) ? 1 : 0;
      if (i >= 1) lv += l_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q + 1)];
      if (q >= 1) lv += n_layer[static_cast<std::size_t>(q - 1)];
      l_layer[static_cast<std::size_t>(q)] = lv;
      BigCount nv = std::move(lv);
      for (int j = 1; j <= q - 1; ++j)
        nv += cat[static_cast<std::size_t>(j - 1)] * n_layer[static_cast<std::size_t>(q - j)];
      n_layer[static_cast<std::size_t>(q)] = std::move(nv);
    }
  }
}

BigCount DPTable::l(int q, int i) const {
  if (q < 0 || i < 0) return 0;
  if (q + i > bound_)
    throw std::out_of_range("DPTable::l: q + i exceeds bound " + std::to_string(bound_));
  return l_[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
}

BigCount DPTable::n(int q, int i) const {
  if (q < 0 || i < 0) return 0;
  if (q + i > bound_)
    throw std::out_of_range("DPTable::n: q + i exceeds bound " + std::to_string(bound_));
  return n_[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
}

DPTable dp_tables(int bound) { return DPTable(bound); }

BigCount f_dp(int n) { return dp_tables(n).l(0, n); }

BigCount f_bruteforce(int n, int bound) {
  return BigCount(producible_set(n, LockDiscipline::Strict, bound).size());
}

std::vector<RatioTerm> growth_ratio(int terms) {
  if (terms < 2) throw std::invalid_argument("growth_ratio: need terms >= 2");
  const auto f = f_series_recurrence(terms).coefficients;
  std::vector<RatioTerm> out;
  out.reserve(static_cast<std::size_t>(terms) - 1);
  for (int n = 1; n < terms; ++n) {
    BigRatio ratio(f[static_cast<std::size_t>(n) + 1], f[static_cast<std::size_t>(n)]);
    std::string dec = decimal_string(ratio);
    out.push_back(RatioTerm{n, std::move(ratio), std::move(dec)});
  }
  return out;
}

} // namespace jumpq
