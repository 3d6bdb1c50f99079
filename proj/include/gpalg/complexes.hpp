#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpalg/errors.hpp"

namespace gpalg {

/// Vertices are 1..m externally and bits 0..m-1 internally, so m <= 63.
constexpr int kMaxVertices = 63;

uint64_t face_mask(const std::vector<int>& vertices, int m);
std::vector<int> mask_vertices(uint64_t mask);
int mask_size(uint64_t mask);

/// Abstract simplicial complex on vertex set {1..m}.  Every vertex is a
/// face and the empty face is always present.  Faces are stored as bit
/// masks, sorted by (popcount, value) so all listings are canonical.
class SimplicialComplex {
public:
  /// Downward closure of the given facets plus all singletons.
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);

  int vertex_count() const { return m_; }
  const std::vector<uint64_t>& faces() const { return faces_; }

  bool has_face(uint64_t mask) const;
  bool has_edge(int i, int j) const;

  /// Inclusion-maximal faces, sorted by (size, mask).
  std::vector<uint64_t> facets() const;

  /// Largest face size (0 for the complex with no vertices).
  int dimension_plus_one() const;

  bool operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && faces_ == o.faces_;
  }

private:
  SimplicialComplex(int m, std::vector<uint64_t> faces)
      : m_(m), faces_(std::move(faces)) {}

  int m_ = 0;
  std::vector<uint64_t> faces_;  // sorted by (popcount, value), includes 0
};

/// Undirected graph on {1..m}: the one-skeleton view of a complex.
class Graph {
public:
  Graph(int m, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return m_; }
  bool has_edge(int i, int j) const;
  uint64_t neighbors_mask(int i) const { return adj_[i - 1]; }

  /// Edges {i,j} with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Vertex sets of connected components of the induced subgraph on
  /// `subset` (a vertex bit mask), sorted by smallest member.
  std::vector<uint64_t> components_within(uint64_t subset) const;

private:
  int m_;
  std::vector<uint64_t> adj_;
};

Graph one_skeleton(const SimplicialComplex& K);

/// Flag complex of a graph: faces are exactly the cliques.
SimplicialComplex clique_complex(const Graph& g);

/// Minimal non-faces: S not a face, every proper subset a face.  Sorted
/// lexicographically by vertex list.
std::vector<uint64_t> missing_faces(const SimplicialComplex& K);

/// A complex is flag iff every missing face is an edge (size 2).
bool is_flag(const SimplicialComplex& K);

/// Full subcomplex on vertex subset J (bit mask), re-indexed to 1..|J| by
/// the order-preserving bijection.
SimplicialComplex full_subcomplex(const SimplicialComplex& K, uint64_t J);

/// rank of reduced 0-homology = (number of connected components) - 1,
/// and 0 for the empty vertex set.
int reduced_h0_rank(const Graph& g, uint64_t subset);

/// Sum over all vertex subsets J of rank H~_0 of the one-skeleton of K_J.
int64_t homology_count(const SimplicialComplex& K);

/// Chordal: every cycle of length >= 4 has a chord.  Decided via Lex-BFS
/// and verification of the resulting elimination ordering.
bool is_chordal(const Graph& g);

/// Substitution: replace vertex i of K by the vertex set of L_i.  The new
/// vertex set is the concatenation of the L_i vertex sets in order of i,
/// re-indexed consecutively; a set is a face iff its projection to each
/// L_i is a face of L_i and the set of i with nonempty projection is a
/// face of K.
SimplicialComplex substitution_complex(const SimplicialComplex& K,
                                       const std::vector<SimplicialComplex>& parts);

}  // namespace gpalg
