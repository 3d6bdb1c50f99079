#include "gpalg/groupalg.hpp"

#include <algorithm>

#include "gpalg/errors.hpp"
#include "gpalg/gf.hpp"
#include "gpalg/ncalg.hpp"

namespace gpalg {

namespace {

int norm_coeff(int c, int p) {
  c %= p;
  return c < 0 ? c + p : c;
}

int uniform_prime_order(const GroupSpec& spec) {
  if (spec.m == 0) throw input_error("group has no generators");
  int p = spec.orders[0];
  for (int n : spec.orders)
    if (n != p) throw input_error("generator orders are not uniform");
  if (!is_prime(p)) throw input_error("generator order " + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(std::shared_ptr<const GroupSpec> spec, int p)
    : spec_(std::move(spec)), p_(p) {
  if (!is_prime(p)) throw input_error("coefficient characteristic must be prime");
}

void GroupAlgebraElement::add_term(const GroupElement& g, int coeff) {
  int c = norm_coeff(coeff, p_);
  if (c == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  int v = norm_coeff(it->second + c, p_);
  if (v == 0)
    terms_.erase(it);
  else
    it->second = v;
}

GroupAlgebraElement ga_from_element(const GroupElement& g, int p) {
  GroupAlgebraElement x(g.spec_ptr(), p);
  x.add_term(g, 1);
  return x;
}

GroupAlgebraElement ga_unit(std::shared_ptr<const GroupSpec> spec, int p) {
  GroupElement e(spec);
  return ga_from_element(e, p);
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.prime() != b.prime()) throw input_error("mixed characteristics");
  if (!a.spec().same_group(b.spec())) throw input_error("elements of different group algebras");
  GroupAlgebraElement r = a;
  for (auto& [g, c] : b.terms()) r.add_term(g, c);
  return r;
}

GroupAlgebraElement ga_scale(const GroupAlgebraElement& a, int c) {
  GroupAlgebraElement r(a.spec_ptr(), a.prime());
  for (auto& [g, v] : a.terms()) r.add_term(g, v * c);
  return r;
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.prime() != b.prime()) throw input_error("mixed characteristics");
  if (!a.spec().same_group(b.spec())) throw input_error("elements of different group algebras");
  GroupAlgebraElement r(a.spec_ptr(), a.prime());
  for (auto& [g, cg] : a.terms())
    for (auto& [h, ch] : b.terms()) r.add_term(multiply(g, h), cg * ch);
  return r;
}

int augmentation(const GroupAlgebraElement& x) {
  int s = 0;
  for (auto& [g, c] : x.terms()) s = norm_coeff(s + c, x.prime());
  return s;
}

GroupAlgebraElement generator_minus_one_product(std::shared_ptr<const GroupSpec> spec,
                                                const std::vector<int>& indices) {
  int p = uniform_prime_order(*spec);
  GroupAlgebraElement acc = ga_unit(spec, p);
  for (int i : indices) {
    if (i < 1 || i > spec->m) throw input_error("generator index out of range");
    GroupAlgebraElement factor = ga_from_element(generator(spec, i), p);
    factor.add_term(GroupElement(spec), -1);
    acc = ga_multiply(acc, factor);
  }
  return acc;
}

AugmentationFiltration::AugmentationFiltration(std::shared_ptr<const GroupSpec> spec,
                                               size_t max_elements)
    : spec_(std::move(spec)),
      p_(uniform_prime_order(*spec_)),
      max_elements_(max_elements),
      mulcache_(static_cast<size_t>(spec_->m)) {
  intern(GroupElement(spec_));  // id 0 = identity
}

uint32_t AugmentationFiltration::intern(const GroupElement& g) {
  auto it = ids_.find(g.syllables());
  if (it != ids_.end()) return it->second;
  if (elements_.size() >= max_elements_)
    throw budget_error("interned group elements exceed " + std::to_string(max_elements_));
  uint32_t id = static_cast<uint32_t>(elements_.size());
  elements_.push_back(g);
  ids_.emplace(g.syllables(), id);
  for (auto& cache : mulcache_) cache.push_back(UINT32_MAX);
  return id;
}

uint32_t AugmentationFiltration::mul_by_generator(uint32_t id, int i) {
  uint32_t cached = mulcache_[static_cast<size_t>(i - 1)][id];
  if (cached != UINT32_MAX) return cached;
  GroupElement prod = multiply(elements_[id], generator(spec_, i));
  uint32_t pid = intern(prod);  // may grow the cache vectors
  mulcache_[static_cast<size_t>(i - 1)][id] = pid;
  return pid;
}

AugmentationFiltration::SparseRow AugmentationFiltration::shift_level(const SparseRow& row,
                                                                      int i) {
  std::map<uint32_t, int> acc;
  for (auto& [id, c] : row) {
    acc[mul_by_generator(id, i)] += c;
    acc[id] -= c;
  }
  SparseRow out;
  for (auto& [id, c] : acc) {
    int v = norm_coeff(c, p_);
    if (v != 0) out.emplace_back(id, v);
  }
  return out;
}

const std::vector<AugmentationFiltration::SparseRow>& AugmentationFiltration::level_basis(
    size_t k) {
  if (levels_.empty()) levels_.push_back({SparseRow{{0, 1}}});  // level 0: the unit
  while (levels_.size() <= k) {
    const std::vector<SparseRow>& prev = levels_.back();
    RaggedEchelon ech(p_);
    std::vector<SparseRow> basis;
    for (const SparseRow& b : prev) {
      for (int i = 1; i <= spec_->m; ++i) {
        SparseRow shifted = shift_level(b, i);
        if (shifted.empty()) continue;
        SparseRow reduced = ech.insert(shifted, elements_.size());
        if (!reduced.empty()) basis.push_back(std::move(reduced));
      }
    }
    levels_.push_back(std::move(basis));
  }
  return levels_[k];
}

OracleResult AugmentationFiltration::gr_dim(int n, int k_max) {
  if (n < 1) throw input_error("degree must be >= 1");
  if (k_max <= 0) k_max = n + 6;
  if (k_max < n + 1) throw input_error("truncation cap below n + 1");
  OracleResult res;
  RaggedEchelon upper(p_);   // levels n .. K
  RaggedEchelon lower(p_);   // levels n+1 .. K
  for (const SparseRow& b : level_basis(static_cast<size_t>(n)))
    upper.insert(b, elements_.size());
  for (int K = n + 1; K <= k_max; ++K) {
    for (const SparseRow& b : level_basis(static_cast<size_t>(K))) {
      upper.insert(b, elements_.size());
      lower.insert(b, elements_.size());
    }
    int64_t d = static_cast<int64_t>(upper.rank()) - static_cast<int64_t>(lower.rank());
    res.history.push_back(d);
    res.truncation_used = K;
    size_t h = res.history.size();
    if (h >= 3 && res.history[h - 1] == res.history[h - 2] &&
        res.history[h - 2] == res.history[h - 3]) {
      res.stabilized = true;
      break;
    }
  }
  res.dim = res.history.back();
  return res;
}

OracleResult gr_dim_oracle(std::shared_ptr<const GroupSpec> spec, int n, int k_max,
                           size_t max_elements) {
  AugmentationFiltration filt(std::move(spec), max_elements);
  return filt.gr_dim(n, k_max);
}

QuillenReport quillen_check(const SimplicialComplex& K, int p, int N, size_t max_columns,
                            size_t max_elements) {
  QuillenReport rep;
  rep.p = p;
  auto spec = GroupSpec::from_complex(K, p);
  AugmentationFiltration filt(spec, max_elements);
  AlgebraPresentation pres = presentation_from_complex(K, AlgebraKind::trunc, p);
  IntegerPowerSeries h = hilbert_series_formula(pres, N);
  rep.pass = true;
  for (int n = 1; n <= N; ++n) {
    QuillenRow row;
    row.degree = n;
    OracleResult oracle = filt.gr_dim(n);
    row.oracle_dim = oracle.dim;
    row.stabilized = oracle.stabilized;
    row.oracle_truncation = oracle.truncation_used;
    row.bruteforce_dim = graded_dim_bruteforce(pres, n, max_columns);
    row.formula_coeff = h[n];
    row.agree = row.stabilized && row.oracle_dim == row.bruteforce_dim &&
                row.bruteforce_dim == row.formula_coeff;
    if (!row.agree) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace gpalg
