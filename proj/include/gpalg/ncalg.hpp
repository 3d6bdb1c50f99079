#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gpalg/complexes.hpp"
#include "gpalg/powerseries.hpp"

namespace gpalg {

/// Quadratic-monomial presentations attached to a graph: generators
/// u_1..u_m, commutation relations u_i u_j = s u_j u_i for edges {i,j},
/// and power relations u_i^e = 0 depending on the kind.
///   poly   e absent, s = +1   (polynomial-type graph product)
///   ext    e = 2,    s = -1   (exterior-type graph product)
///   trunc  e = p,    s = +1   (truncated polynomial graph product)
/// Coefficients live in GF(p); p is prime and equals the truncation for
/// the trunc kind.
enum class AlgebraKind { poly, ext, trunc };

class AlgebraPresentation {
public:
  static AlgebraPresentation create(int m, AlgebraKind kind, int p,
                                    const std::vector<std::pair<int, int>>& edges);

  int generator_count() const { return m_; }
  AlgebraKind kind() const { return kind_; }
  int characteristic() const { return p_; }
  const Graph& graph() const { return graph_; }

  /// 0 when the kind has no power relation, else its degree.
  int power_degree() const;
  /// s in u_i u_j = s u_j u_i: -1 for ext, +1 otherwise.
  int commutation_sign() const { return kind_ == AlgebraKind::ext ? -1 : 1; }

  /// True when built by presentation_from_complex; the closed-form
  /// Hilbert series is only defined for those.
  bool built_from_complex() const { return from_complex_; }

  /// Equality of the defining data; built_from_complex is not compared.
  bool same_presentation(const AlgebraPresentation& o) const {
    return m_ == o.m_ && kind_ == o.kind_ && p_ == o.p_ && graph_.edges() == o.graph_.edges();
  }

private:
  AlgebraPresentation(int m, AlgebraKind kind, int p, Graph graph, bool from_complex)
      : m_(m), kind_(kind), p_(p), graph_(std::move(graph)), from_complex_(from_complex) {}
  friend AlgebraPresentation presentation_from_complex(const SimplicialComplex&, AlgebraKind,
                                                       int);

  int m_;
  AlgebraKind kind_;
  int p_;
  Graph graph_;
  bool from_complex_;
};

/// The presentation read off the one-skeleton of K.
AlgebraPresentation presentation_from_complex(const SimplicialComplex& K, AlgebraKind kind,
                                              int p);

/// Dimension of the degree-n component, computed from first principles:
/// m^n minus the GF(p)-rank of all relation rows w1 r w2 of degree n.
/// Throws budget_error when m^n exceeds max_columns.
int64_t graded_dim_bruteforce(const AlgebraPresentation& P, int n,
                              size_t max_columns = 300'000);

/// All degree-n relation rows as sparse (column, coefficient) vectors,
/// in the canonical generation order.  Exposed so tests can verify the
/// rank is insertion-order independent.
std::vector<std::vector<std::pair<uint32_t, int>>> relation_rows(const AlgebraPresentation& P,
                                                                 int n,
                                                                 size_t max_columns = 300'000);

/// Closed-form Hilbert series: 1/H = sum over cliques I of the graph
/// (empty included) of prod_{i in I}(1/H_i - 1), H_i the one-generator
/// series of the kind.  Requires built_from_complex().
IntegerPowerSeries hilbert_series_formula(const AlgebraPresentation& P, int max_degree);

/// Free associative polynomials over GF(p), used for identity checks.
/// Words are generator index sequences; coefficients are kept in 1..p-1.
using NCWord = std::vector<int>;

struct NCPolynomial {
  int p = 2;
  std::map<NCWord, int> terms;
};

NCPolynomial nc_zero(int p);
NCPolynomial nc_monomial(int p, NCWord word, int coeff = 1);
NCPolynomial nc_add(const NCPolynomial& a, const NCPolynomial& b);
NCPolynomial nc_scale(const NCPolynomial& a, int c);
/// Product with all words longer than max_degree dropped.
NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b, int max_degree);
/// ab - ba, truncated the same way.
NCPolynomial nc_commutator(const NCPolynomial& a, const NCPolynomial& b, int max_degree);

}  // namespace gpalg
