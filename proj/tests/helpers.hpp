#pragma once

#include <random>
#include <string>
#include <vector>

#include "gpalg/complexes.hpp"
#include "gpalg/reports.hpp"
#include "gpalg/words.hpp"

namespace gpalg::testing {

inline std::string data_path(const std::string& name) {
  return std::string(GPALG_DATA_DIR) + "/" + name;
}

inline SimplicialComplex load_complex(const std::string& name) {
  return complex_from_document(load_complex_document(data_path(name)));
}

/// Random one-skeleton as a complex: each edge kept with probability 1/2.
inline SimplicialComplex random_graph_complex(std::mt19937_64& rng, int m) {
  std::vector<std::vector<int>> facets;
  for (int i = 1; i <= m; ++i) facets.push_back({i});
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (coin(rng)) facets.push_back({i, j});
  return SimplicialComplex::from_facets(m, facets);
}

/// Minimal non-faces by direct definition over the whole power set.
inline std::vector<uint64_t> oracle_missing_faces(const SimplicialComplex& K) {
  int m = K.vertex_count();
  std::vector<uint64_t> out;
  for (uint64_t S = 1; S < (1ull << m); ++S) {
    if (K.has_face(S)) continue;
    bool minimal = true;
    for (int v = 0; v < m && minimal; ++v)
      if ((S >> v & 1) && !K.has_face(S & ~(1ull << v))) minimal = false;
    if (minimal) out.push_back(S);
  }
  std::sort(out.begin(), out.end(), [](uint64_t a, uint64_t b) {
    return mask_vertices(a) < mask_vertices(b);
  });
  return out;
}

/// Connected components of the induced graph by label propagation.
inline int oracle_component_count(const Graph& g, uint64_t subset) {
  std::vector<int> verts = mask_vertices(subset);
  if (verts.empty()) return 0;
  std::vector<int> label(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) label[i] = static_cast<int>(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = 0; b < verts.size(); ++b)
        if (g.has_edge(verts[a], verts[b]) && label[a] != label[b]) {
          int lo = std::min(label[a], label[b]);
          label[a] = label[b] = lo;
          changed = true;
        }
  }
  std::vector<int> uniq(label);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  return static_cast<int>(uniq.size());
}

/// Chordality by exhaustive induced-cycle search: some vertex subset of
/// size >= 4 induces a connected 2-regular graph iff a chordless cycle
/// exists.
inline bool oracle_chordal(const Graph& g) {
  int m = g.vertex_count();
  for (uint64_t S = 0; S < (1ull << m); ++S) {
    if (mask_size(S) < 4) continue;
    bool two_regular = true;
    for (int v : mask_vertices(S)) {
      int deg = mask_size(g.neighbors_mask(v) & S);
      if (deg != 2) { two_regular = false; break; }
    }
    if (two_regular && oracle_component_count(g, S) == 1) return false;
  }
  return true;
}

inline std::vector<Syllable> random_raw_word(std::mt19937_64& rng, const GroupSpec& spec,
                                             int length) {
  std::uniform_int_distribution<int> vert(1, spec.m);
  std::uniform_int_distribution<int> expo(-4, 4);
  std::vector<Syllable> raw;
  for (int i = 0; i < length; ++i) raw.emplace_back(vert(rng), expo(rng));
  return raw;
}

/// One random rewrite that fixes the group element: swap an adjacent
/// commuting pair, split a syllable in two, merge an adjacent same-vertex
/// pair, or insert a relator (a full cycle of a finite generator, or an
/// x x^-1 pair).
inline void apply_element_preserving_move(std::mt19937_64& rng, const GroupSpec& spec,
                                          std::vector<Syllable>& raw) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> vert(1, spec.m);
  switch (kind(rng)) {
    case 0: {  // commuting swap
      if (raw.size() < 2) return;
      std::uniform_int_distribution<size_t> at(0, raw.size() - 2);
      size_t k = at(rng);
      if (raw[k].first != raw[k + 1].first &&
          spec.commutes(raw[k].first, raw[k + 1].first))
        std::swap(raw[k], raw[k + 1]);
      return;
    }
    case 1: {  // split one syllable
      if (raw.empty()) return;
      std::uniform_int_distribution<size_t> at(0, raw.size() - 1);
      std::uniform_int_distribution<int> part(-3, 3);
      size_t k = at(rng);
      int e1 = part(rng);
      Syllable rest{raw[k].first, raw[k].second - e1};
      raw[k].second = e1;
      raw.insert(raw.begin() + k + 1, rest);
      return;
    }
    case 2: {  // merge an adjacent same-vertex pair
      for (size_t k = 0; k + 1 < raw.size(); ++k)
        if (raw[k].first == raw[k + 1].first) {
          raw[k].second += raw[k + 1].second;
          raw.erase(raw.begin() + k + 1);
          return;
        }
      return;
    }
    default: {  // insert a relator
      std::uniform_int_distribution<size_t> at(0, raw.size());
      size_t k = at(rng);
      int v = vert(rng);
      int order = spec.orders[v - 1];
      if (order == 0) {
        std::uniform_int_distribution<int> part(1, 3);
        int t = part(rng);
        raw.insert(raw.begin() + k, {Syllable{v, t}, Syllable{v, -t}});
      } else {
        raw.insert(raw.begin() + k, Syllable{v, order});
      }
      return;
    }
  }
}

}  // namespace gpalg::testing
