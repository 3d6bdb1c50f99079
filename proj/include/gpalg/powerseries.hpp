#pragma once

#include <cstdint>
#include <vector>

#include "gpalg/errors.hpp"

namespace gpalg {

/// Truncated integer power series c_0 + c_1 t + ... + c_N t^N with exact
/// int64 coefficients.  Multiplication checks for overflow and throws
/// budget_error instead of wrapping.
class IntegerPowerSeries {
public:
  IntegerPowerSeries() = default;
  explicit IntegerPowerSeries(int truncation_degree)
      : coeff_(static_cast<size_t>(truncation_degree) + 1, 0) {}
  IntegerPowerSeries(std::vector<int64_t> coefficients)
      : coeff_(std::move(coefficients)) {}

  static IntegerPowerSeries one(int truncation_degree);
  /// 1 - t^k, truncated.
  static IntegerPowerSeries one_minus_power(int k, int truncation_degree);
  /// (1 - t^k)^e for e of either sign, via binomial expansion.
  static IntegerPowerSeries binomial_power(int k, int64_t e, int truncation_degree);

  int truncation_degree() const { return static_cast<int>(coeff_.size()) - 1; }
  int64_t operator[](int n) const { return coeff_[static_cast<size_t>(n)]; }
  int64_t& operator[](int n) { return coeff_[static_cast<size_t>(n)]; }
  const std::vector<int64_t>& coefficients() const { return coeff_; }

  IntegerPowerSeries operator+(const IntegerPowerSeries& other) const;
  IntegerPowerSeries operator-(const IntegerPowerSeries& other) const;
  IntegerPowerSeries operator*(const IntegerPowerSeries& other) const;
  /// Multiplicative inverse; requires c_0 = 1 or c_0 = -1.
  IntegerPowerSeries inverse() const;

  bool operator==(const IntegerPowerSeries& other) const { return coeff_ == other.coeff_; }

private:
  std::vector<int64_t> coeff_;
};

/// Per-degree dimension vector d_1..d_N (index 0 holds d_1).
struct GradedDims {
  std::vector<int64_t> dims;

  int64_t at_degree(int n) const { return dims.at(static_cast<size_t>(n) - 1); }
  int max_degree() const { return static_cast<int>(dims.size()); }
  bool operator==(const GradedDims& other) const { return dims == other.dims; }
};

}  // namespace gpalg
