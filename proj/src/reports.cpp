#include "gpalg/reports.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "gpalg/commutators.hpp"
#include "gpalg/errors.hpp"
#include "gpalg/groupalg.hpp"
#include "gpalg/lie.hpp"
#include "gpalg/ncalg.hpp"
#include "gpalg/words.hpp"

namespace gpalg {

namespace {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  int64_t elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json report_header(const std::string& command, const std::string& path,
                   const std::string& bytes, const ComplexDocument& doc,
                   const CliOptions& opt) {
  Json j;
  j["command"] = command;
  j["input"] = Json::object();
  j["input"]["path"] = path;
  j["input"]["digest"] = digest_bytes(bytes);
  if (!doc.name.empty()) j["input"]["name"] = doc.name;
  j["seed"] = opt.seed;
  return j;
}

void finish(Json& j, bool pass, const Stopwatch& sw, const CliOptions& opt) {
  j["pass"] = pass;
  if (opt.timing) j["timing_ms"] = sw.elapsed_ms();
}

Json faces_json(const std::vector<uint64_t>& faces) {
  Json arr = Json::array();
  for (uint64_t f : faces) arr.push_back(mask_vertices(f));
  return arr;
}

AlgebraKind parse_kind(const std::string& algebra) {
  if (algebra == "poly") return AlgebraKind::poly;
  if (algebra == "ext") return AlgebraKind::ext;
  if (algebra == "trunc") return AlgebraKind::trunc;
  throw input_error("unknown algebra kind '" + algebra + "' (expected poly, ext, trunc)");
}

std::vector<int> parse_orders(const std::string& orders, int m) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(orders);
  while (std::getline(is, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("trailing");
      out.push_back(v);
    } catch (const std::exception&) {
      throw input_error("bad order token '" + tok + "'");
    }
  }
  if (out.size() == 1) out.assign(static_cast<size_t>(m), out[0]);
  if (static_cast<int>(out.size()) != m)
    throw input_error("orders list must have one entry or one per vertex");
  return out;
}

bool is_full_simplex(const SimplicialComplex& K) {
  return missing_faces(K).empty();
}

}  // namespace

std::string digest_bytes(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

ComplexDocument parse_complex_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("complex file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
    throw input_error("complex file needs fields 'm' and 'facets'");
  ComplexDocument doc;
  if (!j["m"].is_number_integer()) throw input_error("'m' must be an integer");
  doc.m = j["m"].get<int>();
  if (!j["facets"].is_array()) throw input_error("'facets' must be a list of integer lists");
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw input_error("'facets' must be a list of integer lists");
    std::vector<int> face;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw input_error("facet entries must be integers");
      face.push_back(v.get<int>());
    }
    doc.facets.push_back(std::move(face));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw input_error("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

ComplexDocument load_complex_document(const std::string& path) {
  return parse_complex_document(read_file(path));
}

SimplicialComplex complex_from_document(const ComplexDocument& doc) {
  return SimplicialComplex::from_facets(doc.m, doc.facets);
}

Json document_to_json(const ComplexDocument& doc) {
  Json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["m"] = doc.m;
  j["facets"] = doc.facets;
  return j;
}

CliResult error_report(const std::string& command, const std::string& kind,
                       const std::string& message, std::optional<int> degree, int exit_code) {
  Json j;
  j["command"] = command;
  j["error"] = Json::object();
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  if (degree && *degree >= 0) j["error"]["degree"] = *degree;
  j["pass"] = false;
  return CliResult{std::move(j), exit_code};
}

CliResult run_analyze(const std::string& path, const CliOptions& opt) {
  Stopwatch sw;
  std::string bytes = read_file(path);
  ComplexDocument doc = parse_complex_document(bytes);
  SimplicialComplex K = complex_from_document(doc);
  Json j = report_header("analyze", path, bytes, doc, opt);

  Json result;
  result["m"] = K.vertex_count();
  result["face_count"] = K.faces().size() - 1;  // empty face not counted
  std::vector<int64_t> by_size(static_cast<size_t>(K.dimension_plus_one()) + 1, 0);
  for (uint64_t f : K.faces()) ++by_size[static_cast<size_t>(mask_size(f))];
  result["faces_by_size"] = std::vector<int64_t>(by_size.begin() + 1, by_size.end());
  result["facets"] = faces_json(K.facets());
  result["missing_faces"] = faces_json(missing_faces(K));
  result["is_flag"] = is_flag(K);
  Graph g = one_skeleton(K);
  result["edges"] = Json::array();
  for (auto [a, b] : g.edges()) result["edges"].push_back(Json::array({a, b}));
  result["is_chordal"] = is_chordal(g);
  SimplicialComplex flagged = clique_complex(g);
  result["equals_flag_closure"] = K == flagged;
  // groups and algebras read only the one-skeleton, which the flag
  // closure preserves by construction
  AlgebraPresentation pk = presentation_from_complex(K, AlgebraKind::trunc, 2);
  AlgebraPresentation pf = presentation_from_complex(flagged, AlgebraKind::trunc, 2);
  result["presentation_matches_flag_closure"] = pk.same_presentation(pf);
  j["result"] = std::move(result);

  bool pass = j["result"]["presentation_matches_flag_closure"].get<bool>();
  finish(j, pass, sw, opt);
  return CliResult{std::move(j), pass ? 0 : 4};
}

CliResult run_hilbert(const std::string& path, const std::string& algebra, int p, int degree,
                      bool oracle, const CliOptions& opt) {
  Stopwatch sw;
  std::string bytes = read_file(path);
  ComplexDocument doc = parse_complex_document(bytes);
  SimplicialComplex K = complex_from_document(doc);
  if (degree < 0) throw input_error("degree must be >= 0");
  Json j = report_header("hilbert", path, bytes, doc, opt);
  j["params"] = Json::object();
  j["params"]["algebra"] = algebra;
  j["params"]["p"] = p;
  j["params"]["degree"] = degree;
  j["params"]["oracle"] = oracle;

  AlgebraPresentation P = presentation_from_complex(K, parse_kind(algebra), p);
  IntegerPowerSeries h = hilbert_series_formula(P, degree);
  Json result;
  result["coefficients"] = h.coefficients();
  bool pass = true;
  if (oracle) {
    Json table = Json::array();
    for (int n = 0; n <= degree; ++n) {
      int64_t brute = graded_dim_bruteforce(P, n, opt.max_words);
      bool agree = brute == h[n];
      pass = pass && agree;
      Json row;
      row["degree"] = n;
      row["formula"] = h[n];
      row["bruteforce"] = brute;
      row["agree"] = agree;
      table.push_back(std::move(row));
    }
    result["oracle"] = Json::object();
    result["oracle"]["table"] = std::move(table);
    result["oracle"]["all_agree"] = pass;
  }
  j["result"] = std::move(result);
  finish(j, pass, sw, opt);
  return CliResult{std::move(j), pass ? 0 : 4};
}

CliResult run_lie_dims(const std::string& path, std::optional<int> p, int degree,
                       bool verify_group_oracle, const CliOptions& opt) {
  Stopwatch sw;
  std::string bytes = read_file(path);
  ComplexDocument doc = parse_complex_document(bytes);
  SimplicialComplex K = complex_from_document(doc);
  if (degree < 1) throw input_error("degree must be >= 1");
  Json j = report_header("lie-dims", path, bytes, doc, opt);
  j["params"] = Json::object();
  if (p) j["params"]["p"] = *p;
  j["params"]["degree"] = degree;
  j["params"]["verify_group_oracle"] = verify_group_oracle;

  Json result;
  bool pass = true;
  if (p) {
    GradedDims d = graph_restricted_lie_dims(K, *p, degree);
    result["kind"] = "restricted";
    result["dims"] = d.dims;
  } else {
    GradedDims d = graph_lie_dims(K, degree);
    result["kind"] = "ordinary";
    result["dims"] = d.dims;
  }
  if (verify_group_oracle) {
    if (!p) throw input_error("--verify-group-oracle needs --p");
    QuillenReport rep = quillen_check(K, *p, degree, opt.max_words, opt.max_ball);
    Json table = Json::array();
    for (const QuillenRow& r : rep.rows) {
      Json row;
      row["degree"] = r.degree;
      row["group_oracle"] = r.oracle_dim;
      row["stabilized"] = r.stabilized;
      row["truncation"] = r.oracle_truncation;
      row["bruteforce"] = r.bruteforce_dim;
      row["formula"] = r.formula_coeff;
      row["agree"] = r.agree;
      table.push_back(std::move(row));
    }
    result["group_oracle"] = Json::object();
    result["group_oracle"]["table"] = std::move(table);
    result["group_oracle"]["pass"] = rep.pass;
    pass = rep.pass;
  }
  j["result"] = std::move(result);
  finish(j, pass, sw, opt);
  return CliResult{std::move(j), pass ? 0 : 4};
}

CliResult run_comm_gens(const std::string& path, const CliOptions& opt) {
  Stopwatch sw;
  std::string bytes = read_file(path);
  ComplexDocument doc = parse_complex_document(bytes);
  SimplicialComplex K = complex_from_document(doc);
  Json j = report_header("comm-gens", path, bytes, doc, opt);

  GeneratorReport rep = freeness_report(K);
  auto spec = GroupSpec::from_complex(K, 2);
  bool members_ok = true;
  Json desc = Json::array();
  for (const CommutatorDescriptor& d : rep.descriptors) {
    GroupElement g = realize_generator(spec, d);
    bool in_comm = is_in_commutator_subgroup(g);
    members_ok = members_ok && in_comm;
    Json row;
    row["k_list"] = d.k_list;
    row["j"] = d.j;
    row["i"] = d.i;
    row["text"] = d.to_string();
    row["realized"] = g.to_string();
    row["in_commutator_subgroup"] = in_comm;
    desc.push_back(std::move(row));
  }
  Json result;
  result["descriptors"] = std::move(desc);
  result["count"] = rep.count;
  result["homology_sum"] = rep.homology_sum;
  result["counts_agree"] = rep.counts_agree;
  result["chordal"] = rep.chordal;
  result["free_verdict"] = rep.free_verdict;
  if (rep.algebra_free_verdict) result["algebra_free_verdict"] = *rep.algebra_free_verdict;
  j["result"] = std::move(result);

  bool pass = rep.counts_agree && members_ok;
  finish(j, pass, sw, opt);
  return CliResult{std::move(j), pass ? 0 : 4};
}

CliResult run_word(const std::string& path, const std::string& orders,
                   const std::string& word_text, const CliOptions& opt) {
  Stopwatch sw;
  std::string bytes = read_file(path);
  ComplexDocument doc = parse_complex_document(bytes);
  SimplicialComplex K = complex_from_document(doc);
  Json j = report_header("word", path, bytes, doc, opt);
  j["params"] = Json::object();
  j["params"]["orders"] = orders;
  j["params"]["word"] = word_text;

  Graph g = one_skeleton(K);
  auto spec = GroupSpec::create(K.vertex_count(), parse_orders(orders, K.vertex_count()),
                                g.edges());
  GroupElement w = parse_word(spec, word_text);
  Json result;
  result["normal_form"] = w.to_string();
  result["is_identity"] = w.is_identity();
  result["word_length"] = word_length(w);
  result["abelianization"] = abelianization(w);
  result["in_commutator_subgroup"] = is_in_commutator_subgroup(w);
  j["result"] = std::move(result);
  finish(j, true, sw, opt);
  return CliResult{std::move(j), 0};
}

CliResult run_subst(const std::string& path_k, const std::vector<std::string>& part_paths,
                    int p, int degree, const CliOptions& opt) {
  Stopwatch sw;
  std::string bytes = read_file(path_k);
  ComplexDocument doc = parse_complex_document(bytes);
  SimplicialComplex K = complex_from_document(doc);
  if (static_cast<int>(part_paths.size()) != K.vertex_count())
    throw input_error("substitution needs exactly one part per vertex (" +
                      std::to_string(K.vertex_count()) + " expected, " +
                      std::to_string(part_paths.size()) + " given)");
  Json j = report_header("subst", path_k, bytes, doc, opt);
  j["params"] = Json::object();
  j["params"]["parts"] = part_paths;
  j["params"]["p"] = p;
  j["params"]["degree"] = degree;

  std::vector<SimplicialComplex> parts;
  bool all_simplices = true;
  for (const std::string& pp : part_paths) {
    ComplexDocument pd = load_complex_document(pp);
    SimplicialComplex part = complex_from_document(pd);
    all_simplices = all_simplices && is_full_simplex(part);
    parts.push_back(std::move(part));
  }
  SimplicialComplex S = substitution_complex(K, parts);

  ComplexDocument out;
  out.m = S.vertex_count();
  for (uint64_t f : S.facets()) out.facets.push_back(mask_vertices(f));
  out.name = doc.name.empty() ? std::string("substitution") : doc.name + "-substitution";
  Json result;
  result["complex"] = document_to_json(out);

  bool pass = true;
  if (all_simplices) {
    // independent construction: one generator block per vertex of K,
    // commuting inside blocks and across edges of K
    std::vector<std::pair<int, int>> edges;
    std::vector<int> offset(static_cast<size_t>(K.vertex_count()) + 1, 0);
    int total = 0;
    for (int i = 1; i <= K.vertex_count(); ++i) {
      offset[static_cast<size_t>(i)] = total;
      total += parts[static_cast<size_t>(i - 1)].vertex_count();
    }
    for (int i = 1; i <= K.vertex_count(); ++i) {
      int mi = parts[static_cast<size_t>(i - 1)].vertex_count();
      for (int a = 1; a <= mi; ++a)
        for (int b = a + 1; b <= mi; ++b)
          edges.emplace_back(offset[static_cast<size_t>(i)] + a,
                             offset[static_cast<size_t>(i)] + b);
      for (int i2 = i + 1; i2 <= K.vertex_count(); ++i2) {
        if (!K.has_edge(i, i2)) continue;
        int mi2 = parts[static_cast<size_t>(i2 - 1)].vertex_count();
        for (int a = 1; a <= mi; ++a)
          for (int b = 1; b <= mi2; ++b)
            edges.emplace_back(offset[static_cast<size_t>(i)] + a,
                               offset[static_cast<size_t>(i2)] + b);
      }
    }
    AlgebraPresentation direct = AlgebraPresentation::create(total, AlgebraKind::trunc, p,
                                                             edges);
    AlgebraPresentation via_subst = presentation_from_complex(S, AlgebraKind::trunc, p);
    Json table = Json::array();
    for (int n = 0; n <= degree; ++n) {
      int64_t a = graded_dim_bruteforce(via_subst, n, opt.max_words);
      int64_t b = graded_dim_bruteforce(direct, n, opt.max_words);
      bool agree = a == b;
      pass = pass && agree;
      Json row;
      row["degree"] = n;
      row["substitution"] = a;
      row["direct_blocks"] = b;
      row["agree"] = agree;
      table.push_back(std::move(row));
    }
    result["elementary_abelian_check"] = Json::object();
    result["elementary_abelian_check"]["p"] = p;
    result["elementary_abelian_check"]["table"] = std::move(table);
    result["elementary_abelian_check"]["all_agree"] = pass;
  }
  j["result"] = std::move(result);
  finish(j, pass, sw, opt);
  return CliResult{std::move(j), pass ? 0 : 4};
}

}  // namespace gpalg
