#include "gpalg/ncalg.hpp"

#include <algorithm>
#include <functional>

#include "gpalg/errors.hpp"
#include "gpalg/gf.hpp"

namespace gpalg {

AlgebraPresentation AlgebraPresentation::create(int m, AlgebraKind kind, int p,
                                                const std::vector<std::pair<int, int>>& edges) {
  if (m < 1 || m > kMaxVertices)
    throw input_error("generator count must be in 1.." + std::to_string(kMaxVertices));
  if (!is_prime(p)) throw input_error("coefficient characteristic must be prime");
  return AlgebraPresentation(m, kind, p, Graph(m, edges), false);
}

int AlgebraPresentation::power_degree() const {
  switch (kind_) {
    case AlgebraKind::poly: return 0;
    case AlgebraKind::ext: return 2;
    case AlgebraKind::trunc: return p_;
  }
  return 0;
}

AlgebraPresentation presentation_from_complex(const SimplicialComplex& K, AlgebraKind kind,
                                              int p) {
  if (!is_prime(p)) throw input_error("coefficient characteristic must be prime");
  AlgebraPresentation P(K.vertex_count(), kind, p, one_skeleton(K), true);
  return P;
}

namespace {

/// Column index of a degree-n word, big-endian base m.
uint32_t word_index(const std::vector<int>& w, int m) {
  uint64_t idx = 0;
  for (int v : w) idx = idx * static_cast<uint64_t>(m) + static_cast<uint64_t>(v - 1);
  return static_cast<uint32_t>(idx);
}

bool next_word(std::vector<int>& w, int m) {
  for (size_t k = w.size(); k-- > 0;) {
    if (w[k] < m) { ++w[k]; return true; }
    w[k] = 1;
  }
  return false;
}

/// A homogeneous relation: list of (word, coefficient) terms.
using Relation = std::vector<std::pair<std::vector<int>, int>>;

std::vector<Relation> relations_of(const AlgebraPresentation& P) {
  std::vector<Relation> rels;
  int d = P.power_degree();
  if (d > 0)
    for (int i = 1; i <= P.generator_count(); ++i)
      rels.push_back({{std::vector<int>(static_cast<size_t>(d), i), 1}});
  for (auto [i, j] : P.graph().edges())
    rels.push_back({{{i, j}, 1}, {{j, i}, -P.commutation_sign()}});
  return rels;
}

uint64_t checked_pow(int m, int n, size_t limit) {
  uint64_t r = 1;
  for (int k = 0; k < n; ++k) {
    r *= static_cast<uint64_t>(m);
    if (r > limit)
      throw budget_error("degree " + std::to_string(n) + " needs " + std::to_string(r) +
                             " columns, over the budget of " + std::to_string(limit),
                         n);
  }
  return r;
}

void for_each_relation_row(
    const AlgebraPresentation& P, int n, size_t max_columns,
    const std::function<bool(const std::vector<std::pair<uint32_t, int>>&)>& emit) {
  int m = P.generator_count();
  if (n < 0) throw input_error("degree must be >= 0");
  checked_pow(m, n, max_columns);
  if (m == 0) return;
  std::vector<std::pair<uint32_t, int>> row;
  for (const Relation& rel : relations_of(P)) {
    int d = static_cast<int>(rel[0].first.size());
    if (d > n) continue;
    for (int left = 0; left + d <= n; ++left) {
      int right = n - d - left;
      std::vector<int> w1(static_cast<size_t>(left), 1);
      do {
        std::vector<int> w2(static_cast<size_t>(right), 1);
        do {
          row.clear();
          for (auto& [mid, c] : rel) {
            std::vector<int> w(w1);
            w.insert(w.end(), mid.begin(), mid.end());
            w.insert(w.end(), w2.begin(), w2.end());
            row.emplace_back(word_index(w, m), c);
          }
          std::sort(row.begin(), row.end());
          if (!emit(row)) return;
        } while (next_word(w2, m));
      } while (next_word(w1, m));
    }
  }
}

}  // namespace

std::vector<std::vector<std::pair<uint32_t, int>>> relation_rows(const AlgebraPresentation& P,
                                                                 int n, size_t max_columns) {
  std::vector<std::vector<std::pair<uint32_t, int>>> rows;
  for_each_relation_row(P, n, max_columns, [&](const auto& row) {
    rows.push_back(row);
    return true;
  });
  return rows;
}

int64_t graded_dim_bruteforce(const AlgebraPresentation& P, int n, size_t max_columns) {
  int m = P.generator_count();
  if (n == 0) return 1;
  if (m == 0) return 0;
  uint64_t columns = checked_pow(m, n, max_columns);
  GfEchelon ech(columns, P.characteristic());
  for_each_relation_row(P, n, max_columns, [&](const auto& row) {
    ech.insert(row);
    return ech.rank() < columns;  // span is everything; no row can add more
  });
  return static_cast<int64_t>(columns) - static_cast<int64_t>(ech.rank());
}

IntegerPowerSeries hilbert_series_formula(const AlgebraPresentation& P, int max_degree) {
  if (!P.built_from_complex())
    throw input_error("closed-form Hilbert series requires a presentation built from a complex");
  int N = max_degree;
  // g = 1/H_i - 1 for the one-generator algebra of this kind
  IntegerPowerSeries g(N);
  if (P.kind() == AlgebraKind::poly) {
    if (N >= 1) g[1] = -1;  // g = -t
  } else {
    // g = -t (1 - t^(e-1)) / (1 - t^e), e the power degree
    int e = P.power_degree();
    IntegerPowerSeries num(N);
    if (N >= 1) num[1] = -1;
    num = num * IntegerPowerSeries::one_minus_power(e - 1, N);
    g = num * IntegerPowerSeries::one_minus_power(e, N).inverse();
  }
  // clique counts of the graph
  SimplicialComplex flags = clique_complex(P.graph());
  std::vector<int64_t> clique_count(static_cast<size_t>(P.generator_count()) + 1, 0);
  for (uint64_t f : flags.faces()) ++clique_count[static_cast<size_t>(mask_size(f))];
  IntegerPowerSeries inv_h(N);
  IntegerPowerSeries gk = IntegerPowerSeries::one(N);
  for (size_t k = 0; k < clique_count.size(); ++k) {
    if (clique_count[k] != 0) {
      IntegerPowerSeries term = gk;
      for (int d = 0; d <= N; ++d) term[d] *= clique_count[k];
      inv_h = inv_h + term;
    }
    gk = gk * g;
  }
  IntegerPowerSeries h = inv_h.inverse();
  for (int d = 0; d <= N; ++d)
    if (h[d] < 0)
      throw verification_error("Hilbert series has a negative coefficient at degree " +
                                   std::to_string(d),
                               d);
  return h;
}

namespace {

int norm_coeff(int c, int p) {
  c %= p;
  return c < 0 ? c + p : c;
}

}  // namespace

NCPolynomial nc_zero(int p) { return NCPolynomial{p, {}}; }

NCPolynomial nc_monomial(int p, NCWord word, int coeff) {
  NCPolynomial r{p, {}};
  int c = norm_coeff(coeff, p);
  if (c != 0) r.terms.emplace(std::move(word), c);
  return r;
}

NCPolynomial nc_add(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.p != b.p) throw input_error("mixed characteristics");
  NCPolynomial r{a.p, a.terms};
  for (auto& [w, c] : b.terms) {
    int v = norm_coeff(r.terms[w] + c, a.p);
    if (v == 0)
      r.terms.erase(w);
    else
      r.terms[w] = v;
  }
  return r;
}

NCPolynomial nc_scale(const NCPolynomial& a, int c) {
  NCPolynomial r{a.p, {}};
  int cc = norm_coeff(c, a.p);
  if (cc == 0) return r;
  for (auto& [w, v] : a.terms) {
    int nv = norm_coeff(v * cc, a.p);
    if (nv != 0) r.terms.emplace(w, nv);
  }
  return r;
}

NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b, int max_degree) {
  if (a.p != b.p) throw input_error("mixed characteristics");
  NCPolynomial r{a.p, {}};
  for (auto& [wa, ca] : a.terms) {
    for (auto& [wb, cb] : b.terms) {
      if (static_cast<int>(wa.size() + wb.size()) > max_degree) continue;
      NCWord w(wa);
      w.insert(w.end(), wb.begin(), wb.end());
      int v = norm_coeff(r.terms[w] + ca * cb, a.p);
      if (v == 0)
        r.terms.erase(w);
      else
        r.terms[w] = v;
    }
  }
  return r;
}

NCPolynomial nc_commutator(const NCPolynomial& a, const NCPolynomial& b, int max_degree) {
  return nc_add(nc_multiply(a, b, max_degree), nc_scale(nc_multiply(b, a, max_degree), -1));
}

}  // namespace gpalg
