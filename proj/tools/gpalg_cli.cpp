#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gpalg/errors.hpp"
#include "gpalg/reports.hpp"

namespace {

void emit(const gpalg::CliResult& res, bool pretty) {
  if (pretty)
    std::cout << res.doc.dump(2) << "\n";
  else
    std::cout << res.doc.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph products of groups and graded algebras: analysis and verification"};
  app.require_subcommand(1);

  gpalg::CliOptions opt;
  app.add_option("--seed", opt.seed, "seed recorded in the report and used by seeded checks");
  app.add_flag("--timing", opt.timing, "include wall-clock timing in the report");
  app.add_flag("--pretty", opt.pretty, "indent the report for humans");
  app.add_option("--max-words", opt.max_words,
                 "column budget for first-principles rank computations");
  app.add_option("--max-ball", opt.max_ball,
                 "element budget for group-element enumeration and filtration");

  std::string file;
  std::string algebra = "trunc";
  int p = 2;
  int degree = 6;
  bool oracle = false;
  std::optional<int> lie_p;
  bool verify_group_oracle = false;
  std::string orders = "2";
  std::string word_text;
  std::vector<std::string> part_paths;

  CLI::App* analyze = app.add_subcommand("analyze", "face structure, flagness, chordality");
  analyze->add_option("file", file, "complex file")->required();

  CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimensions of the presented algebra");
  hilbert->add_option("file", file, "complex file")->required();
  hilbert->add_option("--algebra", algebra, "poly, ext, or trunc (default trunc)");
  hilbert->add_option("--p", p, "coefficient prime (default 2)");
  hilbert->add_option("--degree", degree, "top degree (default 6)");
  hilbert->add_flag("--oracle", oracle, "cross-check each degree against brute-force rank");

  CLI::App* lie = app.add_subcommand("lie-dims", "graded Lie algebra dimensions");
  lie->add_option("file", file, "complex file")->required();
  lie->add_option("--p", [&lie_p](const std::vector<std::string>& vals) {
        lie_p = std::stoi(vals.at(0));
        return true;
      },
      "prime: restricted dims mod p; omit for ordinary dims");
  lie->add_option("--degree", degree, "top degree (default 6)");
  lie->add_flag("--verify-group-oracle", verify_group_oracle,
                "embed the three-way group-algebra agreement table");

  CLI::App* comm = app.add_subcommand("comm-gens", "commutator subgroup generators");
  comm->add_option("file", file, "complex file")->required();

  CLI::App* word = app.add_subcommand("word", "normal form and membership for one word");
  word->add_option("file", file, "complex file")->required();
  word->add_option("--orders", orders,
                   "generator orders: one integer for all, or comma list; 0 = infinite");
  word->add_option("word", word_text, "word like \"a1 a2^-1 a1\"")->required();

  CLI::App* subst = app.add_subcommand("subst", "substitution complex of parts into K");
  subst->add_option("file", file, "complex file for K")->required();
  subst->add_option("parts", part_paths, "one complex file per vertex of K")->required();
  subst->add_option("--p", p, "prime for the elementary-abelian cross-check (default 2)");
  subst->add_option("--degree", degree, "top degree for the cross-check (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    gpalg::CliResult res;
    if (analyze->parsed()) {
      res = gpalg::run_analyze(file, opt);
    } else if (hilbert->parsed()) {
      res = gpalg::run_hilbert(file, algebra, p, degree, oracle, opt);
    } else if (lie->parsed()) {
      res = gpalg::run_lie_dims(file, lie_p, degree, verify_group_oracle, opt);
    } else if (comm->parsed()) {
      res = gpalg::run_comm_gens(file, opt);
    } else if (word->parsed()) {
      res = gpalg::run_word(file, orders, word_text, opt);
    } else if (subst->parsed()) {
      if (subst->count("--degree") == 0) degree = 5;
      res = gpalg::run_subst(file, part_paths, p, degree, opt);
    } else {
      return 2;
    }
    emit(res, opt.pretty);
    return res.exit_code;
  } catch (const gpalg::input_error& e) {
    emit(gpalg::error_report(command, "input", e.what(), std::nullopt, 2), opt.pretty);
    return 2;
  } catch (const gpalg::budget_error& e) {
    emit(gpalg::error_report(command, "budget", e.what(), e.degree(), 3), opt.pretty);
    return 3;
  } catch (const gpalg::verification_error& e) {
    emit(gpalg::error_report(command, "verification", e.what(), e.degree(), 4), opt.pretty);
    return 4;
  } catch (const std::exception& e) {
    emit(gpalg::error_report(command, "internal", e.what(), std::nullopt, 1), opt.pretty);
    return 1;
  }
}
