#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cliff/expr.hpp"
#include "cliff/format.hpp"
#include "cliff/verify.hpp"

namespace cliff {

// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 bad input (syntax, range, usage).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

struct RunConfig {
  std::optional<std::pair<int, int>> sig;  // --sig p,q
  std::string command;                     // eval|matrix|tp|split|verify|table
  std::vector<std::string> args;           // expression, or suite name for verify
  Format format = Format::pretty;
  std::uint64_t seed = 1;
  int trials = 25;
  int max_n = kDefaultDimensionCap;        // cap; env/flag may lower or raise it
};

namespace detail {

inline Signature config_signature(const RunConfig& cfg) {
  if (!cfg.sig) throw range_error("this command needs --sig p,q");
  return Signature(cfg.sig->first, cfg.sig->second, cfg.max_n);
}

inline nlohmann::json base_json(const RunConfig& cfg) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["command"] = cfg.command;
  if (cfg.sig) {
    doc["signature"] = {cfg.sig->first, cfg.sig->second};
  } else {
    doc["signature"] = nullptr;
  }
  return doc;
}

inline int run_expression_command(const RunConfig& cfg, std::ostream& out) {
  const Signature sig = config_signature(cfg);
  if (cfg.args.size() != 1) throw range_error("expected exactly one expression");
  const std::string& text = cfg.args.front();
  const Multivector u = eval_text(text, sig);

  nlohmann::json doc = base_json(cfg);
  doc["input"] = text;

  if (cfg.command == "eval" || cfg.command == "tp") {
    const Multivector result = cfg.command == "tp" ? tp(u) : u;
    switch (cfg.format) {
      case Format::pretty:
        out << to_string(result) << "\n";
        break;
      case Format::json:
        doc["result"] = multivector_to_json(result);
        out << doc.dump(2) << "\n";
        break;
      case Format::csv:
        print_multivector_csv(out, result);
        break;
    }
    return kExitOk;
  }

  if (cfg.command == "matrix") {
    const RepMatrix m = left_matrix(u);
    switch (cfg.format) {
      case Format::pretty:
        print_matrix_pretty(out, m);
        break;
      case Format::json:
        doc["matrix"] = matrix_to_json(m);
        out << doc.dump(2) << "\n";
        break;
      case Format::csv:
        print_matrix_csv(out, m);
        break;
    }
    return kExitOk;
  }

  // split
  const SplitElement s = split(u);
  switch (cfg.format) {
    case Format::pretty:
      out << to_string(s) << "\n";
      break;
    case Format::json:
      doc["split"] = split_to_json(s);
      out << doc.dump(2) << "\n";
      break;
    case Format::csv:
      print_split_csv(out, s);
      break;
  }
  return kExitOk;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  std::string suite = cfg.args.empty() ? std::string("all") : cfg.args.front();

  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.trials = cfg.trials;
  opts.cap = cfg.max_n;
  opts.exhaustive_max_n = std::min(4, cfg.max_n);
  opts.random_max_n = std::min(6, cfg.max_n);
  opts.transpose_spot_n = cfg.max_n >= 8 ? 8 : 0;
  if (cfg.sig) opts.only_sig = Signature(cfg.sig->first, cfg.sig->second, cfg.max_n);

  const std::vector<VerifyCase> cases = verify_suite(suite, opts);
  std::size_t failed = 0;
  for (const auto& c : cases) {
    if (!c.pass) ++failed;
  }

  switch (cfg.format) {
    case Format::pretty: {
      for (const auto& c : cases) {
        out << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
        if (!c.pass && !c.note.empty()) out << "     " << c.note << "\n";
      }
      out << "suite=" << suite << " seed=" << cfg.seed << " trials=" << cfg.trials
          << " exhaustive<=" << opts.exhaustive_max_n << " random<=" << opts.random_max_n
          << " spot=" << opts.transpose_spot_n << "\n";
      out << "passed " << (cases.size() - failed) << "/" << cases.size() << "\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc = base_json(cfg);
      doc["suite"] = suite;
      doc["seed"] = cfg.seed;
      doc["trials"] = cfg.trials;
      doc["caps"] = {{"exhaustive_max_n", opts.exhaustive_max_n},
                     {"random_max_n", opts.random_max_n},
                     {"transpose_spot_n", opts.transpose_spot_n}};
      doc["cases"] = cases_to_json(cases);
      doc["passed"] = cases.size() - failed;
      doc["failed"] = failed;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "id,pass,note\n";
      for (const auto& c : cases) {
        out << c.id << "," << (c.pass ? "true" : "false") << "," << c.note << "\n";
      }
      break;
    }
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

inline int run_table(const RunConfig& cfg, std::ostream& out) {
  const Signature sig = config_signature(cfg);

  switch (cfg.format) {
    case Format::pretty: {
      for (int i = 1; i <= sig.n(); ++i) {
        out << "generator matrix E[" << sig.n() << "," << i << "]\n";
        print_matrix_pretty(out, generator_matrix(i, sig));
        out << "reciprocal matrix F[" << sig.n() << "," << i << "]\n";
        print_matrix_pretty(out, dual_generator_matrix(i, sig));
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc = base_json(cfg);
      nlohmann::json gens = nlohmann::json::array();
      for (int i = 1; i <= sig.n(); ++i) {
        gens.push_back({{"index", i},
                        {"matrix", matrix_to_json(generator_matrix(i, sig))},
                        {"reciprocal", matrix_to_json(dual_generator_matrix(i, sig))}});
      }
      doc["generators"] = gens;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      for (int i = 1; i <= sig.n(); ++i) {
        const RepMatrix E = generator_matrix(i, sig);
        const RepMatrix F = dual_generator_matrix(i, sig);
        for (std::size_t r = 0; r < E.dim(); ++r) {
          out << "E," << i << "," << r;
          for (std::size_t c = 0; c < E.dim(); ++c) out << "," << fraction_string(E.at(r, c));
          out << "\n";
        }
        for (std::size_t r = 0; r < F.dim(); ++r) {
          out << "F," << i << "," << r;
          for (std::size_t c = 0; c < F.dim(); ++c) out << "," << fraction_string(F.at(r, c));
          out << "\n";
        }
      }
      break;
    }
  }
  return kExitOk;
}

}  // namespace detail

// Execute one command; diagnostics go to err (pretty/csv) or out as a JSON
// error document, and the exit status mirrors success/failure.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "eval" || cfg.command == "matrix" || cfg.command == "tp" ||
        cfg.command == "split") {
      return detail::run_expression_command(cfg, out);
    }
    if (cfg.command == "verify") return detail::run_verify(cfg, out);
    if (cfg.command == "table") return detail::run_table(cfg, out);
    throw range_error("unknown command '" + cfg.command + "'");
  } catch (const error& e) {
    if (cfg.format == Format::json) {
      nlohmann::json doc = detail::base_json(cfg);
      doc["error"] = e.what();
      out << doc.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kExitBadInput;
  }
}

}  // namespace cliff
