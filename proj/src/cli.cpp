#include "braidqp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "braidqp/json_io.hpp"
#include "braidqp/oracle.hpp"
#include "braidqp/quasipositivity.hpp"

namespace braidqp::cli {

namespace {

struct RunConfig {
  int n = 1;
  std::string input;
  long long state_cap = 1'000'000;
  bool json = false;
  bool oracle = false;
  bool positive_conjugators = false;
  std::string witness_file;
};

int exit_code(Quasipositivity q) {
  switch (q) {
    case Quasipositivity::yes: return kExitYes;
    case Quasipositivity::no: return kExitNo;
    case Quasipositivity::unknown: return kExitUnknown;
  }
  return kExitUsage;
}

void print_verdict(const Verdict& v, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json) {
    out << to_json(v).dump() << '\n';
    return;
  }
  switch (v.result) {
    case Quasipositivity::yes: out << "quasipositive\n"; break;
    case Quasipositivity::no: out << "not quasipositive\n"; break;
    case Quasipositivity::unknown: out << "unknown (state cap reached)\n"; break;
  }
  out << "k = " << v.k << '\n';
  if (v.witness) {
    out << "bands (" << v.witness->bands.size() << "):\n";
    for (const Band& band : v.witness->bands)
      out << "  conjugator \"" << render_word(band.conjugator) << "\"  generator "
          << band.generator << '\n';
  }
  out << "states explored = " << v.states_explored << '\n';
}

int cmd_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SignedWord b = parse_word(cfg.input, cfg.n);
  DecideConfig dc{cfg.state_cap, cfg.positive_conjugators};
  Verdict v = decide(b, dc);
  if (cfg.oracle && v.result != Quasipositivity::unknown) {
    bool expected = oracle::quasipositive_by_reachability(b);
    if (expected != (v.result == Quasipositivity::yes)) {
      err << "oracle cross-check disagrees: decide says "
          << (v.result == Quasipositivity::yes ? "yes" : "no") << ", oracle says "
          << (expected ? "yes" : "no") << '\n';
      return kExitUsage;
    }
    if (!cfg.json) out << "oracle cross-check: agreed\n";
  }
  print_verdict(v, cfg, out);
  return exit_code(v.result);
}

int cmd_nf(const RunConfig& cfg, std::ostream& out) {
  NormalForm nf = normal_form(parse_word(cfg.input, cfg.n));
  if (cfg.json) {
    out << to_json(nf).dump() << '\n';
    return kExitYes;
  }
  out << "delta_power = " << nf.delta_power << '\n';
  out << "factors:";
  for (const auto& f : nf.factors) out << ' ' << render_word(word_from_simple(f)) << " |";
  out << (nf.factors.empty() ? " (none)\n" : "\n");
  return kExitYes;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out,
               std::ostream& err) {
  SignedWord b = parse_word(cfg.input, cfg.n);
  nlohmann::json doc;
  if (!cfg.witness_file.empty()) {
    std::ifstream f(cfg.witness_file);
    if (!f) {
      err << "cannot open " << cfg.witness_file << '\n';
      return kExitUsage;
    }
    f >> doc;
  } else {
    in >> doc;
  }

  if (doc.contains("k") && doc.at("k").get<int>() != exponent_sum(b)) {
    out << "mismatch: k = " << doc.at("k").get<int>() << " but the word has exponent sum "
        << exponent_sum(b) << '\n';
    return kExitNo;
  }
  bool claims_yes = doc.contains("quasipositive") && doc.at("quasipositive").is_boolean() &&
                    doc.at("quasipositive").get<bool>();
  if (!doc.contains("witness")) {
    if (claims_yes) {
      out << "mismatch: quasipositive claim without a witness\n";
      return kExitNo;
    }
    out << "consistent (no witness to check)\n";
    return kExitYes;
  }
  Witness w = witness_from_json(doc.at("witness"), cfg.n);
  if (!verify_witness(w, b)) {
    out << "witness does not reproduce the word\n";
    return kExitNo;
  }
  out << "witness verified: " << w.bands.size() << " band(s)\n";
  return kExitYes;
}

int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  SignedWord b = parse_word(cfg.input, cfg.n);
  bool qp = oracle::quasipositive_by_reachability(b);
  if (cfg.json)
    out << nlohmann::json{{"quasipositive", qp}, {"k", exponent_sum(b)}}.dump() << '\n';
  else
    out << (qp ? "quasipositive" : "not quasipositive") << " (by reachability)\n";
  return qp ? kExitYes : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"quasipositivity of braid words via Garside normal forms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_search_flags) {
    sub->add_option("-n,--strands-minus-one", cfg.n, "number of generators (strands - 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("word", cfg.input,
                    "braid word; may be empty, prefix with -- if it starts with '-'");
    sub->add_flag("--json", cfg.json, "machine-readable output");
    if (with_search_flags) {
      sub->add_option("--state-cap", cfg.state_cap, "search state cap")
          ->envname("BRAIDQP_STATE_CAP")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide quasipositivity");
  add_common(decide_cmd, true);
  decide_cmd->add_flag("--oracle", cfg.oracle, "cross-check against the reachability oracle");
  decide_cmd->add_flag("--positive-conjugators", cfg.positive_conjugators,
                       "rewrite witness conjugators as positive words");

  CLI::App* nf_cmd = app.add_subcommand("nf", "print the left normal form");
  add_common(nf_cmd, false);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a witness JSON against a word");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--witness", cfg.witness_file,
                         "witness JSON file (default: stdin)");

  CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "reachability-oracle verdict");
  add_common(oracle_cmd, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitYes;
    }
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(cfg, out, err);
    if (nf_cmd->parsed()) return cmd_nf(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, in, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle_check(cfg, out);
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const nlohmann::json::exception& e) {
    err << "json error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace braidqp::cli
