#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gpalg/errors.hpp"

namespace gpalg {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Multiplicative inverse mod a prime p (p small, so a scan suffices).
inline int gf_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw input_error("gf_inverse of zero");
}

/// Incremental row echelon over GF(2) with bit-packed rows.  Rows are
/// inserted one at a time; insert() reports whether the row enlarged the
/// span.  Deterministic: pivots keep first-come order.
class Gf2Echelon {
public:
  explicit Gf2Echelon(size_t columns)
      : columns_(columns), words_((columns + 63) / 64) {}

  size_t rank() const { return rows_.size(); }

  /// cols: sorted column indices with coefficient 1.
  bool insert_sparse(const std::vector<uint32_t>& cols) {
    std::vector<uint64_t> row(words_, 0);
    for (uint32_t c : cols) row[c >> 6] ^= 1ull << (c & 63);
    return insert_packed(std::move(row));
  }

  bool insert_packed(std::vector<uint64_t> row) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      uint32_t p = pivots_[i];
      if (row[p >> 6] >> (p & 63) & 1)
        for (size_t w = 0; w < words_; ++w) row[w] ^= rows_[i][w];
    }
    uint32_t pivot = find_first(row);
    if (pivot == kNoPivot) return false;
    pivots_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
  }

private:
  static constexpr uint32_t kNoPivot = 0xffffffffu;

  uint32_t find_first(const std::vector<uint64_t>& row) const {
    for (size_t w = 0; w < words_; ++w)
      if (row[w]) return static_cast<uint32_t>(w * 64 + __builtin_ctzll(row[w]));
    return kNoPivot;
  }

  size_t columns_;
  size_t words_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<uint32_t> pivots_;
};

/// Incremental row echelon over GF(p), dense rows of uint8 residues.
class GfpEchelon {
public:
  GfpEchelon(size_t columns, int p) : columns_(columns), p_(p) {}

  size_t rank() const { return rows_.size(); }

  /// entries: sorted (column, coefficient) pairs, coefficients reduced mod p.
  bool insert_sparse(const std::vector<std::pair<uint32_t, int>>& entries) {
    std::vector<uint8_t> row(columns_, 0);
    for (auto& [c, v] : entries) row[c] = static_cast<uint8_t>(((v % p_) + p_) % p_);
    return insert_dense(std::move(row));
  }

  bool insert_dense(std::vector<uint8_t> row) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      int f = row[pivots_[i]];
      if (f == 0) continue;
      const auto& er = rows_[i];
      for (size_t c = pivots_[i]; c < columns_; ++c) {
        if (er[c] == 0) continue;
        int v = row[c] - f * er[c] % p_;
        if (v < 0) v += p_;
        row[c] = static_cast<uint8_t>(v);
      }
    }
    size_t pivot = columns_;
    for (size_t c = 0; c < columns_; ++c)
      if (row[c] != 0) { pivot = c; break; }
    if (pivot == columns_) return false;
    // normalize leading coefficient to 1
    int inv = gf_inverse(row[pivot], p_);
    for (size_t c = pivot; c < columns_; ++c)
      row[c] = static_cast<uint8_t>(row[c] * inv % p_);
    pivots_.push_back(static_cast<uint32_t>(pivot));
    rows_.push_back(std::move(row));
    return true;
  }

private:
  size_t columns_;
  int p_;
  std::vector<std::vector<uint8_t>> rows_;
  std::vector<uint32_t> pivots_;
};

/// Echelon over GF(p) whose column space may grow between insertions.
/// Rows carry the width they had when inserted; missing tail entries are
/// zero.  Valid because widths never shrink: a new row is at least as
/// wide as every stored pivot row.  p = 2 uses bit-packed words, other
/// primes byte residues.
class RaggedEchelon {
public:
  explicit RaggedEchelon(int p) : p_(p) {}

  size_t rank() const { return pivots_.size(); }

  /// entries: sorted (column, coefficient); width: current column count.
  /// Returns the fully reduced row (empty when dependent).
  std::vector<std::pair<uint32_t, int>> insert(
      const std::vector<std::pair<uint32_t, int>>& entries, size_t width) {
    if (p_ == 2) return insert2(entries, width);
    return insertp(entries, width);
  }

private:
  std::vector<std::pair<uint32_t, int>> insert2(
      const std::vector<std::pair<uint32_t, int>>& entries, size_t width) {
    std::vector<uint64_t> row((width + 63) / 64, 0);
    for (auto& [c, v] : entries)
      if (v % 2 != 0) row[c >> 6] ^= 1ull << (c & 63);
    for (size_t i = 0; i < bitrows_.size(); ++i) {
      uint32_t p = pivots_[i];
      if ((p >> 6) < row.size() && (row[p >> 6] >> (p & 63) & 1))
        for (size_t w = 0; w < bitrows_[i].size(); ++w) row[w] ^= bitrows_[i][w];
    }
    std::vector<std::pair<uint32_t, int>> reduced;
    for (size_t w = 0; w < row.size(); ++w) {
      uint64_t x = row[w];
      while (x) {
        int b = __builtin_ctzll(x);
        x &= x - 1;
        reduced.emplace_back(static_cast<uint32_t>(w * 64 + b), 1);
      }
    }
    if (reduced.empty()) return reduced;
    pivots_.push_back(reduced.front().first);
    bitrows_.push_back(std::move(row));
    return reduced;
  }

  std::vector<std::pair<uint32_t, int>> insertp(
      const std::vector<std::pair<uint32_t, int>>& entries, size_t width) {
    std::vector<uint8_t> row(width, 0);
    for (auto& [c, v] : entries) row[c] = static_cast<uint8_t>(((v % p_) + p_) % p_);
    for (size_t i = 0; i < byterows_.size(); ++i) {
      uint32_t pc = pivots_[i];
      if (pc >= row.size()) continue;
      int f = row[pc];
      if (f == 0) continue;
      const auto& er = byterows_[i];
      for (size_t c = pc; c < er.size(); ++c) {
        if (er[c] == 0) continue;
        int v = row[c] - f * er[c] % p_;
        if (v < 0) v += p_;
        row[c] = static_cast<uint8_t>(v);
      }
    }
    std::vector<std::pair<uint32_t, int>> reduced;
    size_t pivot = row.size();
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) { pivot = c; break; }
    if (pivot == row.size()) return reduced;
    int inv = gf_inverse(row[pivot], p_);
    for (size_t c = pivot; c < row.size(); ++c) {
      row[c] = static_cast<uint8_t>(row[c] * inv % p_);
      if (row[c] != 0) reduced.emplace_back(static_cast<uint32_t>(c), row[c]);
    }
    pivots_.push_back(static_cast<uint32_t>(pivot));
    byterows_.push_back(std::move(row));
    return reduced;
  }

  int p_;
  std::vector<uint32_t> pivots_;
  std::vector<std::vector<uint64_t>> bitrows_;
  std::vector<std::vector<uint8_t>> byterows_;
};

/// Rank accumulator that picks the GF(2) bitset path when p = 2 and the
/// generic dense path otherwise.
class GfEchelon {
public:
  GfEchelon(size_t columns, int p)
      : p_(p),
        gf2_(p == 2 ? std::make_unique<Gf2Echelon>(columns) : nullptr),
        gfp_(p == 2 ? nullptr : std::make_unique<GfpEchelon>(columns, p)) {}

  size_t rank() const { return gf2_ ? gf2_->rank() : gfp_->rank(); }

  bool insert(const std::vector<std::pair<uint32_t, int>>& entries) {
    if (gf2_) {
      std::vector<uint32_t> cols;
      cols.reserve(entries.size());
      for (auto& [c, v] : entries)
        if (v % 2 != 0) cols.push_back(c);
      return gf2_->insert_sparse(cols);
    }
    return gfp_->insert_sparse(entries);
  }

private:
  int p_;
  std::unique_ptr<Gf2Echelon> gf2_;
  std::unique_ptr<GfpEchelon> gfp_;
};

}  // namespace gpalg
