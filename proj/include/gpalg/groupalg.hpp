#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "gpalg/complexes.hpp"
#include "gpalg/words.hpp"

namespace gpalg {

/// Element of the group algebra GF(p)[G]: finite map from group elements
/// in normal form to nonzero coefficients in 1..p-1.
class GroupAlgebraElement {
public:
  GroupAlgebraElement(std::shared_ptr<const GroupSpec> spec, int p);

  const GroupSpec& spec() const { return *spec_; }
  const std::shared_ptr<const GroupSpec>& spec_ptr() const { return spec_; }
  int prime() const { return p_; }
  const std::map<GroupElement, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GroupElement& g, int coeff);

  bool operator==(const GroupAlgebraElement& o) const {
    return p_ == o.p_ && terms_ == o.terms_;
  }

private:
  std::shared_ptr<const GroupSpec> spec_;
  int p_;
  std::map<GroupElement, int> terms_;
};

GroupAlgebraElement ga_from_element(const GroupElement& g, int p);
GroupAlgebraElement ga_unit(std::shared_ptr<const GroupSpec> spec, int p);
GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const GroupAlgebraElement& a, int c);
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Coefficient sum in GF(p).
int augmentation(const GroupAlgebraElement& x);

/// (a_{i_1} - 1)(a_{i_2} - 1)...(a_{i_n} - 1) expanded in GF(p)[G].
/// Requires every generator order to equal the same prime p.
GroupAlgebraElement generator_minus_one_product(std::shared_ptr<const GroupSpec> spec,
                                                const std::vector<int>& indices);

struct OracleResult {
  int64_t dim = 0;
  bool stabilized = false;
  int truncation_used = 0;              // final K
  std::vector<int64_t> history;         // D_n(K) for K = n+1 .. truncation_used
};

/// Augmentation-ideal filtration of GF(p)[G] for a graph product with all
/// generator orders equal to the prime p.  Computes
///   D_n(K) = rank span{products of k factors (a_i - 1), n <= k <= K}
///          - rank span{the same for n+1 <= k <= K}
/// over GF(p), raising K from n+1 until three consecutive values agree
/// (then dim gr_n = that value, stabilized) or K reaches the cap.
///
/// The computation stays entirely in group-element coordinates: columns
/// are indexed by interned normal forms discovered while expanding the
/// products.  It never rewrites a_i as 1 + u_i against the presented
/// algebra, so it is independent of the ncalg route.
class AugmentationFiltration {
public:
  explicit AugmentationFiltration(std::shared_ptr<const GroupSpec> spec,
                                  size_t max_elements = 2'000'000);

  int prime() const { return p_; }
  size_t interned_count() const { return elements_.size(); }

  /// k_max <= 0 means the default n + 6.
  OracleResult gr_dim(int n, int k_max = 0);

private:
  using SparseRow = std::vector<std::pair<uint32_t, int>>;

  uint32_t intern(const GroupElement& g);
  uint32_t mul_by_generator(uint32_t id, int i);
  /// row * (a_i - 1)
  SparseRow shift_level(const SparseRow& row, int i);
  const std::vector<SparseRow>& level_basis(size_t k);

  std::shared_ptr<const GroupSpec> spec_;
  int p_;
  size_t max_elements_;
  std::vector<GroupElement> elements_;
  std::map<std::vector<Syllable>, uint32_t> ids_;
  std::vector<std::vector<uint32_t>> mulcache_;   // [generator-1][id] -> id
  std::vector<std::vector<SparseRow>> levels_;    // levels_[k] = basis of level k
};

/// One-shot oracle on a fresh filtration.
OracleResult gr_dim_oracle(std::shared_ptr<const GroupSpec> spec, int n, int k_max = 0,
                           size_t max_elements = 2'000'000);

struct QuillenRow {
  int degree = 0;
  int64_t oracle_dim = 0;
  bool stabilized = false;
  int oracle_truncation = 0;
  int64_t bruteforce_dim = 0;
  int64_t formula_coeff = 0;
  bool agree = false;
};

struct QuillenReport {
  int p = 0;
  std::vector<QuillenRow> rows;
  bool pass = false;
};

/// Three-way agreement per degree n = 1..N for the group with all orders
/// p over the one-skeleton of K: filtration oracle, first-principles rank
/// of the truncated-polynomial presentation, closed-form Hilbert series.
QuillenReport quillen_check(const SimplicialComplex& K, int p, int N,
                            size_t max_columns = 300'000, size_t max_elements = 2'000'000);

}  // namespace gpalg
