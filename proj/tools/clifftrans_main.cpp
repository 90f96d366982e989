// clifftrans: exact Clifford algebra kernel with a transposition-centric
// verification suite. See README.md for the expression grammar and output
// schemas.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "cliff/cli.hpp"

namespace {

// --sig p,q
bool parse_sig(const std::string& text, std::pair<int, int>& out) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    out.first = std::stoi(text.substr(0, comma));
    out.second = std::stoi(text.substr(comma + 1));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in real Clifford algebras Cl(p,q)"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  std::string sig_text;
  std::string format_text = "pretty";
  cliff::RunConfig cfg;

  if (const char* env = std::getenv("CLIFFTRANS_MAX_N")) {
    try {
      cfg.max_n = std::stoi(env);
    } catch (...) {
      std::cerr << "error: CLIFFTRANS_MAX_N is not a number\n";
      return cliff::kExitBadInput;
    }
  }

  app.add_option("--sig", sig_text, "signature p,q of the quadratic form");
  app.add_option("--format", format_text, "output format: pretty|json|csv");
  app.add_option("--seed", cfg.seed, "seed for randomized verification");
  app.add_option("--trials", cfg.trials, "random trials per verification case");
  app.add_option("--max-n", cfg.max_n, "dimension cap (overrides CLIFFTRANS_MAX_N)");

  std::string expr_text;
  std::string suite = "all";

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  cmd_eval->add_option("expression", expr_text, "multivector expression")->required();

  CLI::App* cmd_matrix =
      app.add_subcommand("matrix", "left-multiplication matrix of an expression");
  cmd_matrix->add_option("expression", expr_text, "multivector expression")->required();

  CLI::App* cmd_tp = app.add_subcommand("tp", "transposition anti-involution");
  cmd_tp->add_option("expression", expr_text, "multivector expression")->required();

  CLI::App* cmd_split =
      app.add_subcommand("split", "graded tensor factorisation of an expression");
  cmd_split->add_option("expression", expr_text, "multivector expression")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option(
      "suite", suite, "involutions|duality|transpose|recursion|split|spinor|all");

  app.add_subcommand("table", "generator matrix families for a signature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cliff::kExitOk : cliff::kExitBadInput;
  }

  if (!sig_text.empty()) {
    std::pair<int, int> pq;
    if (!parse_sig(sig_text, pq)) {
      std::cerr << "error: --sig expects p,q\n";
      return cliff::kExitBadInput;
    }
    cfg.sig = pq;
  }

  try {
    cfg.format = cliff::parse_format(format_text);
  } catch (const cliff::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cliff::kExitBadInput;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "verify") {
    cfg.args = {suite};
  } else if (cfg.command != "table") {
    cfg.args = {expr_text};
  }

  return cliff::run(cfg, std::cout, std::cerr);
}
