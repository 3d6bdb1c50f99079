#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpalg/complexes.hpp"

namespace gpalg {

using Json = nlohmann::ordered_json;

/// Parsed complex file: JSON object with fields "m" (integer) and
/// "facets" (list of 1-based integer lists), optional "name".
struct ComplexDocument {
  int m = 0;
  std::vector<std::vector<int>> facets;
  std::string name;
};

ComplexDocument parse_complex_document(const std::string& text);
ComplexDocument load_complex_document(const std::string& path);
SimplicialComplex complex_from_document(const ComplexDocument& doc);
Json document_to_json(const ComplexDocument& doc);

/// FNV-1a 64-bit digest of the raw bytes, rendered "fnv1a64:<hex>".
std::string digest_bytes(const std::string& bytes);

struct CliOptions {
  uint64_t seed = 0;
  bool timing = false;
  bool pretty = false;
  size_t max_words = 300'000;   // column budget for first-principles ranks
  size_t max_ball = 2'000'000;  // element budget for ball/filtration work
};

struct CliResult {
  Json doc;
  int exit_code = 0;
};

/// Exit codes: 0 pass, 2 input error, 3 budget exceeded, 4 verification
/// failure.  Each run_* builds the full report document; exceptions are
/// translated by the caller via error_report.
CliResult run_analyze(const std::string& path, const CliOptions& opt);
CliResult run_hilbert(const std::string& path, const std::string& algebra, int p, int degree,
                      bool oracle, const CliOptions& opt);
CliResult run_lie_dims(const std::string& path, std::optional<int> p, int degree,
                       bool verify_group_oracle, const CliOptions& opt);
CliResult run_comm_gens(const std::string& path, const CliOptions& opt);
CliResult run_word(const std::string& path, const std::string& orders,
                   const std::string& word_text, const CliOptions& opt);
CliResult run_subst(const std::string& path_k, const std::vector<std::string>& part_paths,
                    int p, int degree, const CliOptions& opt);

/// Report document + exit code for a failed invocation.
CliResult error_report(const std::string& command, const std::string& kind,
                       const std::string& message, std::optional<int> degree, int exit_code);

}  // namespace gpalg
