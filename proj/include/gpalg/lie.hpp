#pragma once

#include <cstdint>
#include <vector>

#include "gpalg/complexes.hpp"
#include "gpalg/powerseries.hpp"

namespace gpalg {

/// All Lyndon words of length n over {1..m} (words strictly smaller than
/// every proper cyclic rotation), in lexicographic order.
std::vector<std::vector<int>> lyndon_words(int m, int n);

/// (1/n) sum over d | n of mu(d) m^(n/d): the number of Lyndon words of
/// length n, i.e. the degree-n dimension of the free Lie algebra.
int64_t witt_dimension(int64_t m, int n);

/// Degree-n dimension of the free restricted Lie algebra over GF(p) on m
/// generators: sum of witt_dimension(m, d) over factorizations n = d p^i.
int64_t free_restricted_dim(int64_t m, int n, int p);

/// Invert H = prod_n (1 - t^n)^(-d_n) for d_1..d_N.  Throws
/// verification_error when some d_n comes out negative (H is not the
/// series of an enveloping algebra).
GradedDims pbw_extract(const IntegerPowerSeries& H, int max_degree);

/// Invert H = prod_n ((1 - t^(pn)) / (1 - t^n))^(d_n).
GradedDims restricted_pbw_extract(const IntegerPowerSeries& H, int p, int max_degree);

/// Graded dimensions of the graph Lie algebra of K: pbw_extract applied
/// to the closed-form series of the polynomial-type presentation.
GradedDims graph_lie_dims(const SimplicialComplex& K, int max_degree);

/// Graded dimensions of the graph restricted Lie algebra over GF(p):
/// restricted extraction from the truncated-polynomial series.
GradedDims graph_restricted_lie_dims(const SimplicialComplex& K, int p, int max_degree);

/// Checks the characteristic-p power expansion of (x + y)^p on random
/// homogeneous free-algebra polynomials over GF(p):
///   p=2: (x+y)^2 = x^2 + y^2 + [x,y]
///   p=3: (x+y)^3 = x^3 + y^3 + [[x,y],y] - [[x,y],x]
/// Only p = 2 and p = 3 are supported.
bool p_power_axiom_check(int p, int trials, uint64_t seed);

}  // namespace gpalg
