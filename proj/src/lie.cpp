#include "gpalg/lie.hpp"

#include <random>

#include "gpalg/errors.hpp"
#include "gpalg/gf.hpp"
#include "gpalg/ncalg.hpp"

namespace gpalg {

std::vector<std::vector<int>> lyndon_words(int m, int n) {
  if (m < 1 || n < 1) throw input_error("alphabet size and length must be >= 1");
  // Duval's generation of Lyndon words of length <= n, filtered to = n.
  std::vector<std::vector<int>> out;
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    size_t k = w.size();
    while (w.size() < static_cast<size_t>(n)) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == m) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

int64_t ipow_checked(int64_t m, int e) {
  int64_t r = 1;
  for (int k = 0; k < e; ++k)
    if (__builtin_mul_overflow(r, m, &r)) throw budget_error("integer overflow in power");
  return r;
}

int moebius(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

int64_t witt_dimension(int64_t m, int n) {
  if (m < 1 || n < 1) throw input_error("alphabet size and degree must be >= 1");
  int64_t sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    sum += moebius(d) * ipow_checked(m, n / d);
  }
  if (sum % n != 0) throw verification_error("Witt sum not divisible by the degree", n);
  return sum / n;
}

int64_t free_restricted_dim(int64_t m, int n, int p) {
  if (!is_prime(p)) throw input_error("p must be prime");
  if (n < 1) throw input_error("degree must be >= 1");
  int64_t total = 0;
  for (int64_t q = 1; q <= n; q *= p) {
    if (n % q == 0) total += witt_dimension(m, static_cast<int>(n / q));
    if (q > n / p) break;
  }
  return total;
}

GradedDims pbw_extract(const IntegerPowerSeries& H, int max_degree) {
  if (H[0] != 1) throw input_error("series must have constant term 1");
  int N = max_degree;
  IntegerPowerSeries r = H;
  GradedDims out;
  for (int n = 1; n <= N; ++n) {
    int64_t d = r[n];
    if (d < 0)
      throw verification_error("extraction yields negative dimension " + std::to_string(d) +
                                   " at degree " + std::to_string(n),
                               n);
    out.dims.push_back(d);
    if (d != 0) r = r * IntegerPowerSeries::binomial_power(n, d, N);
  }
  return out;
}

GradedDims restricted_pbw_extract(const IntegerPowerSeries& H, int p, int max_degree) {
  if (H[0] != 1) throw input_error("series must have constant term 1");
  if (!is_prime(p)) throw input_error("p must be prime");
  int N = max_degree;
  IntegerPowerSeries r = H;
  GradedDims out;
  for (int n = 1; n <= N; ++n) {
    int64_t d = r[n];
    if (d < 0)
      throw verification_error("extraction yields negative dimension " + std::to_string(d) +
                                   " at degree " + std::to_string(n),
                               n);
    out.dims.push_back(d);
    if (d != 0) {
      // divide by ((1 - t^(pn)) / (1 - t^n))^d
      r = r * IntegerPowerSeries::binomial_power(p * n, -d, N);
      r = r * IntegerPowerSeries::binomial_power(n, d, N);
    }
  }
  return out;
}

GradedDims graph_lie_dims(const SimplicialComplex& K, int max_degree) {
  AlgebraPresentation P = presentation_from_complex(K, AlgebraKind::poly, 2);
  return pbw_extract(hilbert_series_formula(P, max_degree), max_degree);
}

GradedDims graph_restricted_lie_dims(const SimplicialComplex& K, int p, int max_degree) {
  AlgebraPresentation P = presentation_from_complex(K, AlgebraKind::trunc, p);
  return restricted_pbw_extract(hilbert_series_formula(P, max_degree), p, max_degree);
}

namespace {

NCPolynomial random_homogeneous(std::mt19937_64& rng, int p, int m, int degree, int max_terms) {
  NCPolynomial x = nc_zero(p);
  std::uniform_int_distribution<int> letter(1, m);
  std::uniform_int_distribution<int> coeff(1, p - 1);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    NCWord w(static_cast<size_t>(degree));
    for (auto& v : w) v = letter(rng);
    x = nc_add(x, nc_monomial(p, std::move(w), coeff(rng)));
  }
  return x;
}

NCPolynomial nc_pow(const NCPolynomial& x, int e, int max_degree) {
  NCPolynomial acc = nc_monomial(x.p, {}, 1);
  for (int k = 0; k < e; ++k) acc = nc_multiply(acc, x, max_degree);
  return acc;
}

}  // namespace

bool p_power_axiom_check(int p, int trials, uint64_t seed) {
  if (p != 2 && p != 3) throw input_error("only p = 2 and p = 3 are supported");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(1, 3);
  const int m = 3;
  for (int t = 0; t < trials; ++t) {
    int dx = deg(rng), dy = deg(rng);
    int cap = p * std::max(dx, dy) + 1;  // no truncation below this
    NCPolynomial x = random_homogeneous(rng, p, m, dx, 3);
    NCPolynomial y = random_homogeneous(rng, p, m, dy, 3);
    NCPolynomial lhs = nc_pow(nc_add(x, y), p, cap);
    NCPolynomial rhs = nc_add(nc_pow(x, p, cap), nc_pow(y, p, cap));
    if (p == 2) {
      rhs = nc_add(rhs, nc_commutator(x, y, cap));
    } else {
      NCPolynomial xy = nc_commutator(x, y, cap);
      rhs = nc_add(rhs, nc_commutator(xy, y, cap));
      rhs = nc_add(rhs, nc_scale(nc_commutator(xy, x, cap), -1));
    }
    if (!(lhs.terms == rhs.terms)) return false;
  }
  return true;
}

}  // namespace gpalg
