#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpalg/complexes.hpp"
#include "gpalg/words.hpp"

namespace gpalg {

/// Blueprint for one iterated commutator (g_{k_1},(...,(g_j,g_i)...)).
/// Conditions: k_1 < ... < k_l < j, i < j, i not among the k_s, and in
/// the full subcomplex on {k_1..k_l, j, i} the connected component of i
/// does not contain j and has i as its smallest vertex.
struct CommutatorDescriptor {
  std::vector<int> k_list;  // strictly increasing, possibly empty
  int j = 0;
  int i = 0;

  bool operator==(const CommutatorDescriptor& o) const {
    return k_list == o.k_list && j == o.j && i == o.i;
  }
  std::string to_string() const;
};

/// All descriptors for K, sorted by (size, k_list, j, i).  Their number
/// equals homology_count(K) (checked by the callers that care).
std::vector<CommutatorDescriptor> enumerate_generators(const SimplicialComplex& K);

/// True iff d satisfies every descriptor condition for K.
bool descriptor_valid(const SimplicialComplex& K, const CommutatorDescriptor& d);

/// The nested commutator the descriptor denotes, built innermost-out
/// from (g_j, g_i) = g_j^-1 g_i^-1 g_j g_i.
GroupElement realize_generator(std::shared_ptr<const GroupSpec> spec,
                               const CommutatorDescriptor& d);

struct GeneratorReport {
  std::vector<CommutatorDescriptor> descriptors;
  int64_t count = 0;
  int64_t homology_sum = 0;
  bool counts_agree = false;
  bool chordal = false;
  bool free_verdict = false;
  /// Same verdict transported to the commutator subalgebra; only
  /// meaningful when the complex is flag, absent otherwise.
  std::optional<bool> algebra_free_verdict;
};

/// Descriptors, counts, chordality of the one-skeleton, and the verdict:
/// the commutator subgroup is free iff the one-skeleton is chordal.
GeneratorReport freeness_report(const SimplicialComplex& K);

}  // namespace gpalg
