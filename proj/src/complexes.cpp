#include "gpalg/complexes.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gpalg {

uint64_t face_mask(const std::vector<int>& vertices, int m) {
  uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 1 || v > m)
      throw input_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
    uint64_t bit = 1ull << (v - 1);
    if (mask & bit)
      throw input_error("duplicate vertex " + std::to_string(v) + " in face");
    mask |= bit;
  }
  return mask;
}

std::vector<int> mask_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    int b = std::countr_zero(mask);
    out.push_back(b + 1);
    mask &= mask - 1;
  }
  return out;
}

int mask_size(uint64_t mask) { return std::popcount(mask); }

namespace {

bool face_less(uint64_t a, uint64_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::vector<uint64_t> sorted_unique_faces(std::set<uint64_t>&& s) {
  std::vector<uint64_t> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), face_less);
  return v;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int m,
                                                 const std::vector<std::vector<int>>& facets) {
  if (m < 1 || m > kMaxVertices)
    throw input_error("vertex count must be in 1.." + std::to_string(kMaxVertices));
  std::set<uint64_t> closed;
  closed.insert(0);
  for (int v = 1; v <= m; ++v) closed.insert(1ull << (v - 1));
  for (const auto& f : facets) {
    uint64_t mask = face_mask(f, m);
    // downward closure: all submasks
    uint64_t sub = mask;
    while (true) {
      closed.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  return SimplicialComplex(m, sorted_unique_faces(std::move(closed)));
}

bool SimplicialComplex::has_face(uint64_t mask) const {
  return std::binary_search(faces_.begin(), faces_.end(), mask, face_less);
}

bool SimplicialComplex::has_edge(int i, int j) const {
  if (i == j) return false;
  return has_face((1ull << (i - 1)) | (1ull << (j - 1)));
}

std::vector<uint64_t> SimplicialComplex::facets() const {
  std::vector<uint64_t> out;
  for (uint64_t f : faces_) {
    if (f == 0 && faces_.size() > 1) continue;
    bool maximal = true;
    for (uint64_t g : faces_)
      if (g != f && (g & f) == f) { maximal = false; break; }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

int SimplicialComplex::dimension_plus_one() const {
  int best = 0;
  for (uint64_t f : faces_) best = std::max(best, std::popcount(f));
  return best;
}

Graph::Graph(int m, const std::vector<std::pair<int, int>>& edges) : m_(m), adj_(m, 0) {
  if (m < 0 || m > kMaxVertices)
    throw input_error("vertex count must be in 0.." + std::to_string(kMaxVertices));
  for (auto [i, j] : edges) {
    if (i < 1 || i > m || j < 1 || j > m)
      throw input_error("edge endpoint out of range");
    if (i == j) throw input_error("loop edge not allowed");
    adj_[i - 1] |= 1ull << (j - 1);
    adj_[j - 1] |= 1ull << (i - 1);
  }
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > m_) return false;
  return (adj_[i - 1] >> (j - 1)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m_; ++i)
    for (int j = i + 1; j <= m_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<uint64_t> Graph::components_within(uint64_t subset) const {
  std::vector<uint64_t> comps;
  uint64_t left = subset;
  while (left) {
    int start = std::countr_zero(left);
    uint64_t comp = 1ull << start;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[v] & subset & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  // BFS from lowest remaining bit already yields smallest-member order.
  return comps;
}

Graph one_skeleton(const SimplicialComplex& K) {
  std::vector<std::pair<int, int>> edges;
  int m = K.vertex_count();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (K.has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(m, edges);
}

SimplicialComplex clique_complex(const Graph& g) {
  int m = g.vertex_count();
  // grow cliques level by level; from_facets dedups via downward closure
  std::vector<uint64_t> level;
  for (int v = 1; v <= m; ++v) level.push_back(1ull << (v - 1));
  std::vector<uint64_t> all(level);
  while (!level.empty()) {
    std::vector<uint64_t> next;
    for (uint64_t c : level) {
      int top = 64 - std::countl_zero(c);  // highest vertex index in c
      for (int v = top + 1; v <= m; ++v) {
        uint64_t nb = g.neighbors_mask(v);
        if ((c & nb) == c) next.push_back(c | (1ull << (v - 1)));
      }
    }
    for (uint64_t c : next) all.push_back(c);
    level = std::move(next);
  }
  std::vector<std::vector<int>> facets;
  for (uint64_t c : all) facets.push_back(mask_vertices(c));
  return SimplicialComplex::from_facets(m, facets);
}

std::vector<uint64_t> missing_faces(const SimplicialComplex& K) {
  int m = K.vertex_count();
  std::set<uint64_t> cand;
  // every minimal non-face is (face) + one vertex
  for (uint64_t f : K.faces()) {
    for (int v = 1; v <= m; ++v) {
      uint64_t bit = 1ull << (v - 1);
      if (f & bit) continue;
      cand.insert(f | bit);
    }
  }
  std::vector<uint64_t> out;
  for (uint64_t s : cand) {
    if (K.has_face(s)) continue;
    bool minimal = true;
    uint64_t t = s;
    while (t && minimal) {
      int v = std::countr_zero(t);
      t &= t - 1;
      if (!K.has_face(s & ~(1ull << v))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](uint64_t a, uint64_t b) {
    return mask_vertices(a) < mask_vertices(b);
  });
  return out;
}

bool is_flag(const SimplicialComplex& K) {
  for (uint64_t s : missing_faces(K))
    if (std::popcount(s) != 2) return false;
  return true;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, uint64_t J) {
  std::vector<int> verts = mask_vertices(J);
  int mj = static_cast<int>(verts.size());
  std::vector<int> newindex(K.vertex_count() + 1, 0);
  for (int t = 0; t < mj; ++t) newindex[verts[t]] = t + 1;
  std::vector<std::vector<int>> facets;
  for (uint64_t f : K.faces()) {
    if ((f & J) != f) continue;
    std::vector<int> face;
    for (int v : mask_vertices(f)) face.push_back(newindex[v]);
    facets.push_back(face);
  }
  return SimplicialComplex::from_facets(mj, facets);
}

int reduced_h0_rank(const Graph& g, uint64_t subset) {
  if (subset == 0) return 0;
  return static_cast<int>(g.components_within(subset).size()) - 1;
}

int64_t homology_count(const SimplicialComplex& K) {
  Graph g = one_skeleton(K);
  int m = K.vertex_count();
  int64_t total = 0;
  for (uint64_t J = 1; J < (1ull << m); ++J)
    total += reduced_h0_rank(g, J);
  return total;
}

bool is_chordal(const Graph& g) {
  int m = g.vertex_count();
  if (m <= 3) return true;
  // Lex-BFS: labels as sets of already-visited neighbor ranks.
  std::vector<std::vector<int>> label(m);
  std::vector<int> order;                 // visit order, vertices 0-based
  std::vector<int> pos(m, -1);            // position in order, -1 = unvisited
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int v = 0; v < m; ++v) {
      if (pos[v] >= 0) continue;
      if (best == -1 || label[v] > label[best] ||
          (label[v] == label[best] && v < best))
        best = v;
    }
    pos[best] = step;
    order.push_back(best);
    uint64_t nb = g.neighbors_mask(best + 1);
    for (int v = 0; v < m; ++v)
      if (pos[v] < 0 && (nb >> v & 1)) label[v].push_back(m - step);
  }
  // reversed Lex-BFS order is a perfect elimination ordering iff chordal
  std::reverse(order.begin(), order.end());
  std::vector<int> rank(m);
  for (int i = 0; i < m; ++i) rank[order[i]] = i;
  for (int i = 0; i < m; ++i) {
    int v = order[i];
    // later neighbors = those eliminated after v
    uint64_t later = 0;
    uint64_t nb = g.neighbors_mask(v + 1);
    for (int u = 0; u < m; ++u)
      if ((nb >> u & 1) && rank[u] > i) later |= 1ull << u;
    if (!later) continue;
    // the earliest-eliminated later neighbor must see all the others
    int w = -1;
    for (int u = 0; u < m; ++u)
      if ((later >> u & 1) && (w == -1 || rank[u] < rank[w])) w = u;
    uint64_t rest = later & ~(1ull << w);
    if ((g.neighbors_mask(w + 1) & rest) != rest) return false;
  }
  return true;
}

SimplicialComplex substitution_complex(const SimplicialComplex& K,
                                       const std::vector<SimplicialComplex>& parts) {
  int m = K.vertex_count();
  if (static_cast<int>(parts.size()) != m)
    throw input_error("substitution needs one complex per vertex");
  std::vector<int> offset(m + 1, 0);  // offset[i] = first new index of block i, minus 1
  int total = 0;
  for (int i = 1; i <= m; ++i) {
    offset[i] = total;
    total += parts[i - 1].vertex_count();
  }
  if (total > kMaxVertices)
    throw input_error("substitution exceeds " + std::to_string(kMaxVertices) + " vertices");

  // a face of the substitution = union over i in F (F a face of K) of a
  // face of parts[i], nonempty exactly on F; facets suffice for closure
  std::vector<std::vector<int>> facets;
  for (uint64_t F : K.faces()) {
    std::vector<int> kverts = mask_vertices(F);
    std::vector<std::vector<uint64_t>> choices;  // nonempty faces per block
    bool any = true;
    for (int v : kverts) {
      std::vector<uint64_t> nonempty;
      for (uint64_t f : parts[v - 1].faces())
        if (f) nonempty.push_back(f);
      if (nonempty.empty()) any = false;
      choices.push_back(std::move(nonempty));
    }
    if (!any) continue;
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<int> face;
      for (size_t t = 0; t < choices.size(); ++t)
        for (int v : mask_vertices(choices[t][idx[t]]))
          face.push_back(offset[kverts[t]] + v);
      facets.push_back(face);
      size_t t = 0;
      while (t < idx.size() && ++idx[t] == choices[t].size()) idx[t++] = 0;
      if (t == idx.size()) break;
    }
  }
  return SimplicialComplex::from_facets(total, facets);
}

}  // namespace gpalg
