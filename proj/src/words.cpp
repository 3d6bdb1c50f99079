#include "gpalg/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gpalg/errors.hpp"

namespace gpalg {

std::shared_ptr<const GroupSpec> GroupSpec::create(
    int m, std::vector<int> orders, const std::vector<std::pair<int, int>>& edges) {
  if (m < 1 || m > kMaxVertices)
    throw input_error("vertex count must be in 1.." + std::to_string(kMaxVertices));
  if (static_cast<int>(orders.size()) != m)
    throw input_error("need one order per generator");
  for (int n : orders)
    if (n != 0 && n < 2) throw input_error("generator order must be 0 or >= 2");
  Graph g(m, edges);
  return std::shared_ptr<const GroupSpec>(new GroupSpec(m, std::move(orders), std::move(g)));
}

std::shared_ptr<const GroupSpec> GroupSpec::from_complex(const SimplicialComplex& K,
                                                         int uniform_order) {
  Graph g = one_skeleton(K);
  std::vector<int> orders(K.vertex_count(), uniform_order);
  return create(K.vertex_count(), std::move(orders), g.edges());
}

bool GroupSpec::same_group(const GroupSpec& o) const {
  return m == o.m && orders == o.orders && graph.edges() == o.graph.edges();
}

namespace {

/// Reduce an exponent to the canonical range: nonzero for infinite order,
/// 1..n-1 for order n; returns 0 when the syllable vanishes.
int reduce_exponent(int n, int64_t e) {
  if (n == 0) {
    if (e < INT32_MIN || e > INT32_MAX) throw budget_error("exponent overflow");
    return static_cast<int>(e);
  }
  int64_t r = e % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

/// Merge pass: find a pair of same-vertex syllables separated only by
/// commuting (different-vertex) syllables and combine them; repeat until
/// no such pair remains.
void merge_syllables(const GroupSpec& spec, std::vector<Syllable>& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < s.size() && !changed; ++k) {
      int v = s[k].first;
      for (size_t l = k + 1; l < s.size(); ++l) {
        if (s[l].first == v) {
          int e = reduce_exponent(spec.orders[v - 1],
                                  static_cast<int64_t>(s[k].second) + s[l].second);
          s.erase(s.begin() + static_cast<ptrdiff_t>(l));
          if (e == 0)
            s.erase(s.begin() + static_cast<ptrdiff_t>(k));
          else
            s[k].second = e;
          changed = true;
          break;
        }
        if (!spec.commutes(v, s[l].first)) break;
      }
    }
  }
}

/// Canonical linearization: repeatedly emit the smallest-vertex syllable
/// among those that can be moved to the front (all earlier syllables
/// commute with it; same-vertex occurrences block each other).
std::vector<Syllable> linearize(const GroupSpec& spec, std::vector<Syllable> s) {
  std::vector<Syllable> out;
  out.reserve(s.size());
  while (!s.empty()) {
    size_t best = s.size();
    for (size_t k = 0; k < s.size(); ++k) {
      bool movable = true;
      for (size_t j = 0; j < k && movable; ++j)
        if (!spec.commutes(s[j].first, s[k].first)) movable = false;
      if (movable && (best == s.size() || s[k].first < s[best].first)) best = k;
    }
    out.push_back(s[best]);
    s.erase(s.begin() + static_cast<ptrdiff_t>(best));
  }
  return out;
}

std::vector<Syllable> normalize(const GroupSpec& spec, std::vector<Syllable> raw) {
  std::vector<Syllable> s;
  s.reserve(raw.size());
  for (auto& [v, e] : raw) {
    if (v < 1 || v > spec.m)
      throw input_error("generator index " + std::to_string(v) + " out of range");
    int r = reduce_exponent(spec.orders[v - 1], e);
    if (r != 0) s.emplace_back(v, r);
  }
  merge_syllables(spec, s);
  return linearize(spec, std::move(s));
}

}  // namespace

GroupElement::GroupElement(std::shared_ptr<const GroupSpec> spec, std::vector<Syllable> raw)
    : spec_(std::move(spec)), syllables_(normalize(*spec_, std::move(raw))) {}

std::string GroupElement::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < syllables_.size(); ++k) {
    if (k) os << ' ';
    os << 'a' << syllables_[k].first;
    if (syllables_[k].second != 1) os << '^' << syllables_[k].second;
  }
  return os.str();
}

GroupElement generator(std::shared_ptr<const GroupSpec> spec, int i, int exponent) {
  return GroupElement(std::move(spec), {{i, exponent}});
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (!a.spec().same_group(b.spec())) throw input_error("elements of different groups");
  std::vector<Syllable> s = a.syllables();
  s.insert(s.end(), b.syllables().begin(), b.syllables().end());
  return GroupElement(a.spec_ptr(), std::move(s));
}

GroupElement inverse(const GroupElement& a) {
  std::vector<Syllable> s(a.syllables().rbegin(), a.syllables().rend());
  for (auto& [v, e] : s) e = -e;
  return GroupElement(a.spec_ptr(), std::move(s));
}

GroupElement power(const GroupElement& a, int64_t e) {
  GroupElement base = e < 0 ? inverse(a) : a;
  uint64_t k = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
  GroupElement acc(a.spec_ptr());
  while (k) {
    if (k & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

int64_t word_length(const GroupElement& a) {
  int64_t total = 0;
  for (auto& [v, e] : a.syllables()) {
    int n = a.spec().orders[v - 1];
    if (n == 0)
      total += e < 0 ? -static_cast<int64_t>(e) : e;
    else
      total += std::min(e, n - e);
  }
  return total;
}

std::vector<int64_t> abelianization(const GroupElement& a) {
  std::vector<int64_t> out(a.spec().m, 0);
  for (auto& [v, e] : a.syllables()) out[v - 1] += e;
  for (int i = 0; i < a.spec().m; ++i) {
    int n = a.spec().orders[i];
    if (n != 0) {
      out[i] %= n;
      if (out[i] < 0) out[i] += n;
    }
  }
  return out;
}

GroupElement group_commutator(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

bool is_in_commutator_subgroup(const GroupElement& a) {
  for (int64_t c : abelianization(a))
    if (c != 0) return false;
  return true;
}

std::vector<GroupElement> enumerate_ball(std::shared_ptr<const GroupSpec> spec, int radius,
                                         size_t max_elements) {
  if (radius < 0) throw input_error("radius must be >= 0");
  std::set<std::vector<Syllable>> seen;
  std::vector<GroupElement> out;
  std::vector<GroupElement> queue;
  GroupElement id(spec);
  seen.insert(id.syllables());
  out.push_back(id);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    GroupElement cur = queue[head];
    if (word_length(cur) >= radius) continue;
    for (int i = 1; i <= spec->m; ++i) {
      for (int e : {1, -1}) {
        GroupElement next = multiply(cur, generator(spec, i, e));
        if (word_length(next) > radius) continue;
        if (!seen.insert(next.syllables()).second) continue;
        if (out.size() >= max_elements)
          throw budget_error("ball enumeration exceeds " + std::to_string(max_elements) +
                             " elements");
        out.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
    int64_t la = word_length(a), lb = word_length(b);
    if (la != lb) return la < lb;
    return a.syllables() < b.syllables();
  });
  return out;
}

GroupElement parse_word(std::shared_ptr<const GroupSpec> spec, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), '*', ' ');
  std::istringstream is(cleaned);
  std::vector<Syllable> sylls;
  std::string tok;
  while (is >> tok) {
    if (tok == "1" || tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 'a')
      throw input_error("bad word token '" + tok + "'");
    size_t caret = tok.find('^');
    std::string istr = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::string estr = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    try {
      size_t pos = 0;
      int i = std::stoi(istr, &pos);
      if (pos != istr.size()) throw std::invalid_argument("trailing");
      int e = std::stoi(estr, &pos);
      if (pos != estr.size()) throw std::invalid_argument("trailing");
      sylls.emplace_back(i, e);
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error("bad word token '" + tok + "'");
    }
  }
  return GroupElement(std::move(spec), std::move(sylls));
}

}  // namespace gpalg
