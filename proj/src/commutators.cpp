#include "gpalg/commutators.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gpalg/errors.hpp"

namespace gpalg {

std::string CommutatorDescriptor::to_string() const {
  std::ostringstream os;
  for (int k : k_list) os << "(g" << k << ",";
  os << "(g" << j << ",g" << i << ")";
  for (size_t t = 0; t < k_list.size(); ++t) os << ")";
  return os.str();
}

std::vector<CommutatorDescriptor> enumerate_generators(const SimplicialComplex& K) {
  int m = K.vertex_count();
  Graph g = one_skeleton(K);
  std::vector<CommutatorDescriptor> out;
  // For every vertex subset S with |S| >= 2: j = max S; one descriptor
  // per connected component of the induced one-skeleton on S that does
  // not contain j, with i = the component's smallest vertex and
  // k_list = S minus {i, j}.
  for (uint64_t S = 0; S < (1ull << m); ++S) {
    if (std::popcount(S) < 2) continue;
    int j = 64 - std::countl_zero(S);  // 1-based max vertex
    for (uint64_t comp : g.components_within(S)) {
      if (comp & (1ull << (j - 1))) continue;
      int i = std::countr_zero(comp) + 1;
      CommutatorDescriptor d;
      d.j = j;
      d.i = i;
      for (int v : mask_vertices(S & ~(1ull << (i - 1)) & ~(1ull << (j - 1))))
        d.k_list.push_back(v);
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CommutatorDescriptor& a, const CommutatorDescriptor& b) {
              if (a.k_list.size() != b.k_list.size()) return a.k_list.size() < b.k_list.size();
              if (a.k_list != b.k_list) return a.k_list < b.k_list;
              if (a.j != b.j) return a.j < b.j;
              return a.i < b.i;
            });
  return out;
}

bool descriptor_valid(const SimplicialComplex& K, const CommutatorDescriptor& d) {
  int m = K.vertex_count();
  if (d.i < 1 || d.i > m || d.j < 1 || d.j > m || d.i >= d.j) return false;
  uint64_t S = (1ull << (d.i - 1)) | (1ull << (d.j - 1));
  int prev = 0;
  for (int k : d.k_list) {
    if (k <= prev || k >= d.j || k == d.i || k < 1) return false;
    prev = k;
    S |= 1ull << (k - 1);
  }
  Graph g = one_skeleton(K);
  for (uint64_t comp : g.components_within(S)) {
    if (!(comp & (1ull << (d.i - 1)))) continue;
    if (comp & (1ull << (d.j - 1))) return false;        // i's component holds j
    return std::countr_zero(comp) + 1 == d.i;            // i must be its minimum
  }
  return false;
}

GroupElement realize_generator(std::shared_ptr<const GroupSpec> spec,
                               const CommutatorDescriptor& d) {
  if (d.j > spec->m || d.i > spec->m || (!d.k_list.empty() && d.k_list.back() > spec->m))
    throw input_error("descriptor vertex outside the group's generator range");
  GroupElement acc = group_commutator(generator(spec, d.j), generator(spec, d.i));
  for (auto it = d.k_list.rbegin(); it != d.k_list.rend(); ++it)
    acc = group_commutator(generator(spec, *it), acc);
  return acc;
}

GeneratorReport freeness_report(const SimplicialComplex& K) {
  GeneratorReport rep;
  rep.descriptors = enumerate_generators(K);
  rep.count = static_cast<int64_t>(rep.descriptors.size());
  rep.homology_sum = homology_count(K);
  rep.counts_agree = rep.count == rep.homology_sum;
  rep.chordal = is_chordal(one_skeleton(K));
  rep.free_verdict = rep.chordal;
  if (is_flag(K)) rep.algebra_free_verdict = rep.chordal;
  return rep;
}

}  // namespace gpalg
