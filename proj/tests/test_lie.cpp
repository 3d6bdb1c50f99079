#include <algorithm>
#include <set>

#include "doctest.h"
#include "gpalg/errors.hpp"
#include "gpalg/lie.hpp"
#include "gpalg/ncalg.hpp"
#include "helpers.hpp"

using namespace gpalg;
using namespace gpalg::testing;

namespace {

/// Lyndon test by definition: strictly smaller than all proper rotations.
bool is_lyndon(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  for (int r = 1; r < n; ++r) {
    std::vector<int> rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<std::vector<int>> brute_lyndon(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 1);
  while (true) {
    if (is_lyndon(w)) out.push_back(w);
    int k = n - 1;
    while (k >= 0 && w[k] == m) { w[k] = 1; --k; }
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

/// 1/(1 - m t) truncated at degree N.
IntegerPowerSeries geometric(int64_t m, int N) {
  std::vector<int64_t> lin(static_cast<size_t>(N) + 1, 0);
  lin[0] = 1;
  lin[1] = -m;
  return IntegerPowerSeries(std::move(lin)).inverse();
}

/// 1 + t truncated at degree N.
IntegerPowerSeries one_plus_t(int N) {
  std::vector<int64_t> c(static_cast<size_t>(N) + 1, 0);
  c[0] = 1;
  c[1] = 1;
  return IntegerPowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("Lyndon enumeration matches the rotation definition") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= (m == 3 ? 5 : 7); ++n) {
      CAPTURE(m);
      CAPTURE(n);
      auto words = lyndon_words(m, n);
      CHECK(words == brute_lyndon(m, n));
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(static_cast<int64_t>(words.size()) == witt_dimension(m, n));
    }
}

TEST_CASE("free Lie dimensions satisfy the generating identity") {
  // prod_n (1 - t^n)^(-witt(m,n)) = 1/(1 - m t)
  for (int64_t m : {1, 2, 3}) {
    int N = 10;
    auto prod = IntegerPowerSeries::one(N);
    for (int n = 1; n <= N; ++n)
      prod = prod * IntegerPowerSeries::binomial_power(n, -witt_dimension(m, n), N);
    CHECK(prod == geometric(m, N));
  }
}

TEST_CASE("known free Lie dimension values") {
  CHECK(witt_dimension(2, 1) == 2);
  CHECK(witt_dimension(2, 2) == 1);
  CHECK(witt_dimension(2, 3) == 2);
  CHECK(witt_dimension(2, 4) == 3);
  CHECK(witt_dimension(2, 5) == 6);
  CHECK(witt_dimension(3, 2) == 3);
  CHECK(witt_dimension(3, 3) == 8);
}

TEST_CASE("free restricted dimensions stack ordinary ones along p-powers") {
  CHECK(free_restricted_dim(2, 1, 2) == 2);
  CHECK(free_restricted_dim(2, 2, 2) == 3);   // witt(2,2) + witt(2,1)
  CHECK(free_restricted_dim(2, 3, 2) == 2);
  CHECK(free_restricted_dim(2, 4, 2) == 6);   // 3 + 1 + 2
  CHECK(free_restricted_dim(2, 3, 3) == 4);   // witt(2,3) + witt(2,1)
  CHECK(free_restricted_dim(3, 2, 2) == 6);   // witt(3,2) + witt(3,1)
  // prod_n ((1 - t^(pn))/(1 - t^n))^(r_n) = 1/(1 - m t)
  for (int p : {2, 3}) {
    for (int64_t m : {2, 3}) {
      int N = 8;
      auto prod = IntegerPowerSeries::one(N);
      for (int n = 1; n <= N; ++n) {
        int64_t r = free_restricted_dim(m, n, p);
        prod = prod * IntegerPowerSeries::binomial_power(p * n, r, N) *
               IntegerPowerSeries::binomial_power(n, -r, N);
      }
      CHECK(prod == geometric(m, N));
    }
  }
}

TEST_CASE("ordinary extraction recovers free and abelian dimensions") {
  int N = 7;
  auto d = pbw_extract(geometric(2, N), N);
  for (int n = 1; n <= N; ++n) CHECK(d.at_degree(n) == witt_dimension(2, n));
  // 1/(1-t)^2 has d_1 = 2 and nothing else
  auto ab = pbw_extract(IntegerPowerSeries::binomial_power(1, -1, N) *
                            IntegerPowerSeries::binomial_power(1, -1, N),
                        N);
  CHECK(ab.at_degree(1) == 2);
  for (int n = 2; n <= N; ++n) CHECK(ab.at_degree(n) == 0);
}

TEST_CASE("extraction rejects series that are not enveloping-shaped") {
  int N = 4;
  // 1 + t + t^2 + ... truncated with a dip: d_2 would be negative
  IntegerPowerSeries bad(std::vector<int64_t>{1, 2, 1, 0, 0});
  CHECK_THROWS_AS(pbw_extract(bad, N), verification_error);
  try {
    pbw_extract(bad, N);
  } catch (const verification_error& e) {
    CHECK(e.degree() == 2);
  }
}

TEST_CASE("restricted extraction recovers free restricted dimensions") {
  int N = 7;
  for (int p : {2, 3}) {
    auto d = restricted_pbw_extract(geometric(2, N), p, N);
    for (int n = 1; n <= N; ++n) CHECK(d.at_degree(n) == free_restricted_dim(2, n, p));
  }
  // (1+t)^3: three generators that square to zero, p = 2
  auto cube = one_plus_t(N) * one_plus_t(N) * one_plus_t(N);
  auto d = restricted_pbw_extract(cube, 2, N);
  CHECK(d.at_degree(1) == 3);
  for (int n = 2; n <= N; ++n) CHECK(d.at_degree(n) == 0);
}

TEST_CASE("restricted extraction on the infinite dihedral series") {
  // (1+t)/(1-t): d = 2,1,0,1,0,0,0,1 up to degree 8
  int N = 8;
  auto H = one_plus_t(N) * IntegerPowerSeries::binomial_power(1, -1, N);
  auto d = restricted_pbw_extract(H, 2, N);
  std::vector<int64_t> expect{2, 1, 0, 1, 0, 0, 0, 1};
  for (int n = 1; n <= N; ++n) CHECK(d.at_degree(n) == expect[static_cast<size_t>(n) - 1]);
}

TEST_CASE("graph Lie dimensions on the corpus") {
  auto edge = graph_lie_dims(load_complex("edge.json"), 5);
  CHECK(edge.at_degree(1) == 2);
  for (int n = 2; n <= 5; ++n) CHECK(edge.at_degree(n) == 0);

  auto two = graph_lie_dims(load_complex("two_points.json"), 6);
  for (int n = 1; n <= 6; ++n) CHECK(two.at_degree(n) == witt_dimension(2, n));

  auto path = graph_lie_dims(load_complex("path3.json"), 6);
  CHECK(path.at_degree(1) == 3);
  CHECK(path.at_degree(2) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(path.at_degree(n) >= 0);

  auto cyc = graph_lie_dims(load_complex("four_cycle.json"), 6);
  CHECK(cyc.at_degree(1) == 4);
  CHECK(cyc.at_degree(2) == 2);
  for (int n = 1; n <= 6; ++n) CHECK(cyc.at_degree(n) >= 0);

  auto simplex = graph_lie_dims(load_complex("simplex3.json"), 5);
  CHECK(simplex.at_degree(1) == 3);
  for (int n = 2; n <= 5; ++n) CHECK(simplex.at_degree(n) == 0);
}

TEST_CASE("graph Lie dimensions add over graph joins") {
  // joining every vertex of one block to every vertex of the other makes
  // cliques factor into pairs of block cliques, so the closed-form series
  // multiply and the extracted dims add degreewise
  auto cyc = load_complex("four_cycle.json");
  auto pts = load_complex("two_points.json");
  std::vector<std::vector<int>> facets;
  for (uint64_t f : cyc.facets())
    facets.push_back(mask_vertices(f));
  for (int i = 1; i <= 4; ++i)
    for (int j = 5; j <= 6; ++j)
      facets.push_back({i, j});
  auto joined = SimplicialComplex::from_facets(6, facets);
  int N = 5;
  auto djoin = graph_lie_dims(joined, N);
  auto dcyc = graph_lie_dims(cyc, N);
  auto dpts = graph_lie_dims(pts, N);
  for (int n = 1; n <= N; ++n)
    CHECK(djoin.at_degree(n) == dcyc.at_degree(n) + dpts.at_degree(n));
  for (int p : {2, 3}) {
    auto rjoin = graph_restricted_lie_dims(joined, p, N);
    auto rcyc = graph_restricted_lie_dims(cyc, p, N);
    auto rpts = graph_restricted_lie_dims(pts, p, N);
    for (int n = 1; n <= N; ++n)
      CHECK(rjoin.at_degree(n) == rcyc.at_degree(n) + rpts.at_degree(n));
  }
}

TEST_CASE("restricted degree two counts missing edges when p = 2") {
  for (const char* file : {"two_points.json", "three_points.json", "four_points.json",
                           "path3.json", "four_cycle.json", "simplex3.json"}) {
    CAPTURE(file);
    auto K = load_complex(file);
    auto d = graph_restricted_lie_dims(K, 2, 3);
    CHECK(d.at_degree(1) == K.vertex_count());
    int64_t missing_edges = 0;
    for (uint64_t s : missing_faces(K))
      if (mask_size(s) == 2) ++missing_edges;
    CHECK(d.at_degree(2) == missing_edges);
  }
}

TEST_CASE("restricted dimensions of an elementary abelian square") {
  // edge with p = 2: group (Z/2)^2, H = (1+t)^2, dims 2 then 0
  auto d = graph_restricted_lie_dims(load_complex("edge.json"), 2, 5);
  CHECK(d.at_degree(1) == 2);
  for (int n = 2; n <= 5; ++n) CHECK(d.at_degree(n) == 0);
  // two points with p = 2: infinite dihedral
  auto dd = graph_restricted_lie_dims(load_complex("two_points.json"), 2, 8);
  std::vector<int64_t> expect{2, 1, 0, 1, 0, 0, 0, 1};
  for (int n = 1; n <= 8; ++n) CHECK(dd.at_degree(n) == expect[static_cast<size_t>(n) - 1]);
}

TEST_CASE("characteristic-p power expansion holds on random polynomials") {
  CHECK(p_power_axiom_check(2, 100, 12345));
  CHECK(p_power_axiom_check(3, 100, 12345));
  CHECK_THROWS_AS(p_power_axiom_check(5, 1, 1), input_error);
}
