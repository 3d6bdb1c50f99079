#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gpalg/complexes.hpp"

namespace gpalg {

/// Graph product of cyclic groups: one generator a_i per vertex, a_i of
/// order orders[i-1] (0 = infinite), and a_i a_j = a_j a_i exactly when
/// {i,j} is an edge.  Depends only on the one-skeleton of a complex.
struct GroupSpec {
  int m = 0;
  std::vector<int> orders;  // 0 = infinite, otherwise >= 2
  Graph graph;

  bool commutes(int i, int j) const { return i != j && graph.has_edge(i, j); }

  static std::shared_ptr<const GroupSpec> create(int m, std::vector<int> orders,
                                                 const std::vector<std::pair<int, int>>& edges);

  /// Uniform order over the one-skeleton of K: 0 gives the right-angled
  /// Artin group, 2 the right-angled Coxeter group, p the mod-p variant.
  static std::shared_ptr<const GroupSpec> from_complex(const SimplicialComplex& K,
                                                       int uniform_order);

  bool same_group(const GroupSpec& o) const;

private:
  GroupSpec(int m_, std::vector<int> orders_, Graph graph_)
      : m(m_), orders(std::move(orders_)), graph(std::move(graph_)) {}
};

/// One maximal run of a single generator: vertex and nonzero exponent
/// (reduced to 1..n-1 when the vertex group is finite of order n).
using Syllable = std::pair<int, int>;

/// Group element held in canonical normal form: syllables are merged as
/// far as the commutation relations allow, then linearized so that at
/// every position the smallest movable vertex comes first.  Two elements
/// are equal in the group iff their normal forms are identical.
class GroupElement {
public:
  explicit GroupElement(std::shared_ptr<const GroupSpec> spec)
      : spec_(std::move(spec)) {}  // identity
  GroupElement(std::shared_ptr<const GroupSpec> spec, std::vector<Syllable> raw);

  const GroupSpec& spec() const { return *spec_; }
  const std::shared_ptr<const GroupSpec>& spec_ptr() const { return spec_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  bool operator==(const GroupElement& o) const { return syllables_ == o.syllables_; }
  bool operator<(const GroupElement& o) const { return syllables_ < o.syllables_; }

  std::string to_string() const;

private:
  std::shared_ptr<const GroupSpec> spec_;
  std::vector<Syllable> syllables_;
};

GroupElement generator(std::shared_ptr<const GroupSpec> spec, int i, int exponent = 1);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, int64_t e);

/// Geodesic word length: each syllable a_i^e costs |e| when the order is
/// infinite and min(e, n - e) when the order is n.
int64_t word_length(const GroupElement& a);

/// Exponent sums per generator, reduced mod the order when finite.
std::vector<int64_t> abelianization(const GroupElement& a);

/// (g, h) = g^-1 h^-1 g h.
GroupElement group_commutator(const GroupElement& g, const GroupElement& h);

/// True iff the abelianization vanishes.
bool is_in_commutator_subgroup(const GroupElement& a);

/// All elements of word length <= radius, sorted by (length, syllables).
/// Throws budget_error if more than max_elements would be produced.
std::vector<GroupElement> enumerate_ball(std::shared_ptr<const GroupSpec> spec, int radius,
                                         size_t max_elements = 2'000'000);

/// Parse "a3", "a1^2", "a2^-1 a1" (tokens split on whitespace or '*');
/// "1" or the empty string is the identity.
GroupElement parse_word(std::shared_ptr<const GroupSpec> spec, const std::string& text);

}  // namespace gpalg
