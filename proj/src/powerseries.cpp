#include "gpalg/powerseries.hpp"

#include <cstdlib>

namespace gpalg {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw budget_error("integer overflow in power series addition");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw budget_error("integer overflow in power series multiplication");
  return r;
}

}  // namespace

IntegerPowerSeries IntegerPowerSeries::one(int truncation_degree) {
  IntegerPowerSeries s(truncation_degree);
  s[0] = 1;
  return s;
}

IntegerPowerSeries IntegerPowerSeries::one_minus_power(int k, int truncation_degree) {
  IntegerPowerSeries s = one(truncation_degree);
  if (k <= truncation_degree) s[k] = -1;
  return s;
}

IntegerPowerSeries IntegerPowerSeries::binomial_power(int k, int64_t e, int truncation_degree) {
  IntegerPowerSeries s = one(truncation_degree);
  if (k <= 0) throw input_error("binomial_power: k must be positive");
  if (e == 0) return s;
  if (e > 0) {
    // (1 - t^k)^e = sum_j (-1)^j C(e,j) t^{jk}
    int64_t c = 1;
    for (int j = 1; static_cast<int64_t>(j) <= e && j * k <= truncation_degree; ++j) {
      c = checked_mul(c, e - j + 1);
      c /= j;  // exact: running binomial
      s[j * k] = (j % 2 == 0) ? c : -c;
    }
  } else {
    // (1 - t^k)^{-d} = sum_j C(d+j-1, j) t^{jk}
    int64_t d = -e;
    int64_t c = 1;
    for (int j = 1; j * k <= truncation_degree; ++j) {
      c = checked_mul(c, d + j - 1);
      c /= j;  // exact
      s[j * k] = c;
    }
  }
  return s;
}

IntegerPowerSeries IntegerPowerSeries::operator+(const IntegerPowerSeries& other) const {
  size_t n = std::min(coeff_.size(), other.coeff_.size());
  IntegerPowerSeries r(static_cast<int>(n) - 1);
  for (size_t i = 0; i < n; ++i) r.coeff_[i] = checked_add(coeff_[i], other.coeff_[i]);
  return r;
}

IntegerPowerSeries IntegerPowerSeries::operator-(const IntegerPowerSeries& other) const {
  size_t n = std::min(coeff_.size(), other.coeff_.size());
  IntegerPowerSeries r(static_cast<int>(n) - 1);
  for (size_t i = 0; i < n; ++i) r.coeff_[i] = checked_add(coeff_[i], -other.coeff_[i]);
  return r;
}

IntegerPowerSeries IntegerPowerSeries::operator*(const IntegerPowerSeries& other) const {
  size_t n = std::min(coeff_.size(), other.coeff_.size());
  IntegerPowerSeries r(static_cast<int>(n) - 1);
  for (size_t i = 0; i < n; ++i) {
    if (coeff_[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (other.coeff_[j] == 0) continue;
      r.coeff_[i + j] = checked_add(r.coeff_[i + j], checked_mul(coeff_[i], other.coeff_[j]));
    }
  }
  return r;
}

IntegerPowerSeries IntegerPowerSeries::inverse() const {
  if (coeff_.empty() || (coeff_[0] != 1 && coeff_[0] != -1))
    throw input_error("power series inverse requires constant term 1 or -1");
  int64_t c0 = coeff_[0];
  size_t n = coeff_.size();
  IntegerPowerSeries r(static_cast<int>(n) - 1);
  r.coeff_[0] = c0;
  for (size_t k = 1; k < n; ++k) {
    // c0 * r_k + sum_{j=1..k} a_j r_{k-j} = 0
    int64_t acc = 0;
    for (size_t j = 1; j <= k; ++j)
      acc = checked_add(acc, checked_mul(coeff_[j], r.coeff_[k - j]));
    r.coeff_[k] = -c0 * acc;  // c0 in {1,-1} so 1/c0 == c0
  }
  return r;
}

}  // namespace gpalg
