#include "voa/io.hpp"
#include "voa/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using voa::Json;
using voa::LatticeParams;
using voa::Rational;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int k = 3;
  std::string max_weight = "6";
  int samples = 200;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string out;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + cfg.out);
  }
  file << text;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string render_report_text(const voa::SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " (k = " << report.k << ")\n";
  for (const auto& check : report.checks) {
    out << (check.passed ? "  pass  " : "  FAIL  ") << check.id;
    if (!check.passed && !check.witness.empty()) {
      out << "  [" << check.witness << "]";
    }
    out << "\n";
  }
  out << (report.all_passed() ? "all checks passed"
                              : std::to_string(report.failures()) +
                                    " check(s) failed")
      << "\n";
  return out.str();
}

int finish_report(const RunConfig& cfg, const voa::SuiteReport& report) {
  if (cfg.format == "json") {
    emit(cfg, render_json(voa::report_to_json(report)));
  } else {
    emit(cfg, render_report_text(report));
  }
  return report.all_passed() ? kExitPass : kExitCheckFailed;
}

Json read_json_file(const std::string& path) {
  if (path == "-") {
    return Json::parse(std::cin);
  }
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  return Json::parse(file);
}

int run_table1(const RunConfig& cfg) {
  const LatticeParams p(cfg.k);
  const voa::LowestWeightSet set = voa::lowest_weight_set(p);
  if (cfg.format == "json") {
    emit(cfg, render_json(voa::lowest_weights_to_json(set)));
  } else {
    std::ostringstream out;
    out << "lowest weights for k = " << p.k << ":\n";
    for (const auto& entry : set.entries) {
      out << "  " << voa::to_string(entry.weight) << "  <-";
      for (const auto& name : entry.realized_by) {
        out << " " << name;
      }
      out << "\n";
    }
    out << "distinct: {";
    bool first = true;
    for (const Rational& w : set.distinct_sorted()) {
      out << (first ? "" : ", ") << voa::to_string(w);
      first = false;
    }
    out << "}\n";
    emit(cfg, out.str());
  }
  return kExitPass;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
  const LatticeParams p(cfg.k);
  const Rational max_weight = voa::parse_rational(cfg.max_weight);
  const voa::SampleConfig sample_cfg{max_weight, cfg.samples, cfg.seed};
  if (suite == "commutators") {
    return finish_report(cfg, voa::commutator_suite(p, sample_cfg));
  }
  if (suite == "virasoro") {
    return finish_report(cfg, voa::virasoro_suite(p, sample_cfg));
  }
  if (suite == "derivative") {
    return finish_report(cfg, voa::derivative_suite(p, sample_cfg));
  }
  if (suite == "identities") {
    return finish_report(cfg, voa::identity_suite(p));
  }
  if (suite == "zhu") {
    return finish_report(cfg, voa::zhu_suite(p, max_weight, 4, Rational(6)));
  }
  if (suite == "lemma5") {
    return finish_report(cfg, voa::e_mode_vanishing_suite(p, max_weight));
  }
  throw CLI::ValidationError("unknown suite: " + suite);
}

int run_weights(const RunConfig& cfg) {
  const LatticeParams p(cfg.k);
  const voa::WeightGapReport report = voa::weight_gap_report(p);
  std::optional<voa::CompositeGapWitness> witness;
  if (!voa::is_prime(p.k)) {
    witness = voa::composite_gap_witness(p.k);
  }
  if (cfg.format == "json") {
    emit(cfg, render_json(voa::weight_gaps_to_json(report, witness)));
  } else {
    std::ostringstream out;
    out << "k = " << p.k << (voa::is_prime(p.k) ? " (prime)" : " (composite)")
        << "\n";
    out << "distinct lowest weights: " << (report.all_distinct ? "yes" : "NO")
        << "\n";
    for (const auto& [lambda, ok] : report.gap_free) {
      out << "  lambda = " << voa::to_string(lambda) << ": "
          << (ok ? "no positive integer gap" : "integer gap present") << "\n";
    }
    if (witness) {
      out << "composite witness: r = " << witness->r << ", s = " << witness->s
          << ", (s^2 - r^2)/4k = " << witness->difference << "\n";
    }
    emit(cfg, out.str());
  }
  if (voa::is_prime(p.k) &&
      (!report.all_distinct || !report.gaps_hold_away_from_zero())) {
    return kExitCheckFailed;
  }
  return kExitPass;
}

int run_decompose(const RunConfig& cfg, const std::string& input,
                  int max_degree) {
  const LatticeParams p(cfg.k);
  const voa::DirectSumSpec spec =
      voa::parse_direct_sum_spec(read_json_file(input));
  const voa::DirectSumModule sum = voa::build_direct_sum(p, spec, max_degree);
  const voa::DecompositionResult result = voa::decompose(
      sum, voa::default_candidates(p), cfg.samples, cfg.seed);
  if (cfg.format == "json") {
    emit(cfg, render_json(voa::decomposition_to_json(result)));
  } else {
    std::ostringstream out;
    out << "decomposition (T = " << result.T
        << ", degrees 0.." << result.max_degree << ")\n";
    for (const auto& family : result.families) {
      if (family.total_dim() == 0) {
        continue;
      }
      out << "  family " << voa::to_string(family.lowest) << ": dims";
      for (int d : family.dims) {
        out << " " << d;
      }
      out << "\n";
    }
    out << "residual: " << (result.residual_empty() ? "empty" : "NONEMPTY")
        << "\n";
    out << "stability: " << result.stability_failures.size() << " failure(s) in "
        << result.stability_samples << " samples\n";
    emit(cfg, out.str());
  }
  const bool ok = result.residual_empty() && result.stable();
  return ok ? kExitPass : kExitCheckFailed;
}

int run_character(const RunConfig& cfg, std::optional<int> coset,
                  std::optional<int> twisted, const std::string& sign_text) {
  const LatticeParams p(cfg.k);
  if (coset.has_value() == twisted.has_value()) {
    throw CLI::ValidationError("choose exactly one of --coset/--twisted");
  }
  const voa::Sector sector = coset ? voa::Sector::untwisted(p, *coset)
                                   : voa::Sector::twisted(*twisted);
  std::optional<int> sign;
  if (!sign_text.empty()) {
    if (sign_text == "+" || sign_text == "+1") {
      sign = 1;
    } else if (sign_text == "-" || sign_text == "-1") {
      sign = -1;
    } else {
      throw CLI::ValidationError("sign must be +1 or -1");
    }
  }
  const voa::CharacterReport report = voa::character_crosscheck(
      p, sector, sign, voa::parse_rational(cfg.max_weight));
  if (cfg.format == "json") {
    emit(cfg, render_json(voa::character_to_json(p, report)));
  } else {
    std::ostringstream out;
    out << "graded dimensions (two independent counts)\n";
    for (const auto& row : report.rows) {
      out << "  weight " << voa::to_string(row.weight) << ": "
          << row.dim_direct << " / " << row.dim_formula << "\n";
    }
    out << (report.consistent ? "counts agree" : "COUNTS DISAGREE") << "\n";
    emit(cfg, out.str());
  }
  return report.consistent ? kExitPass : kExitCheckFailed;
}

int run_mode(const RunConfig& cfg, const std::string& op,
             const std::string& mode_text, long long beta_multiple,
             const std::string& sign_text, const std::string& input) {
  const LatticeParams p(cfg.k);
  const voa::State state = voa::state_from_json(p, read_json_file(input));
  voa::State result = state;
  if (op == "theta") {
    result = voa::theta(p, state);
  } else if (op == "project") {
    const int sign = (sign_text == "-" || sign_text == "-1") ? -1 : 1;
    result = voa::project_pm(p, state, sign);
  } else {
    const Rational mode_value = voa::parse_rational(mode_text);
    if (op == "alpha") {
      const Rational doubled = mode_value * 2;
      result = voa::apply_alpha(
          p, voa::ModeIndex{voa::to_long(doubled)}, state);
    } else if (op == "L") {
      result = voa::virasoro(p, voa::to_long(mode_value), state);
    } else if (op == "exp") {
      result = voa::apply_lattice_exponential(
          p, beta_multiple, voa::to_long(mode_value), state);
    } else {
      voa::State element = voa::make_vacuum(p);
      if (op == "E") {
        element = voa::make_E(p);
      } else if (op == "F") {
        element = voa::make_F(p);
      } else if (op == "omega") {
        element = voa::make_virasoro_element(p);
      } else if (op != "vacuum") {
        throw CLI::ValidationError("unknown operator: " + op);
      }
      result = voa::apply_mode(p, element, voa::to_long(mode_value), state);
    }
  }
  emit(cfg, render_json(voa::state_to_json(p, result)));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the rank-one lattice vertex "
               "operator algebra and its charge-conjugation orbifold"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--k", cfg.k, "lattice parameter k (half the norm)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-weight", cfg.max_weight,
                 "weight cap for bases and samples (rational)");
  app.add_option("--samples", cfg.samples, "sample count for seeded suites")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "seed for all random sampling");
  auto* format_opt = app.add_option("--format", cfg.format, "output format")
                         ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "write output to this path");

  auto* table1 = app.add_subcommand("table1", "lowest weights per module");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "one of commutators, virasoro, "
                                       "derivative, identities, zhu, lemma5")
      ->required();

  auto* weights = app.add_subcommand(
      "weights", "distinctness and integer gaps of the lowest weights");

  std::string decompose_input;
  int decompose_degree = 6;
  auto* decompose =
      app.add_subcommand("decompose", "generalized L(0) decomposition of a "
                                      "direct sum described in a JSON file");
  decompose->add_option("--input", decompose_input, "module description file")
      ->required();
  decompose->add_option("--max-degree", decompose_degree,
                        "truncation degree for the summands")
      ->check(CLI::NonNegativeNumber);

  std::optional<int> character_coset;
  std::optional<int> character_twisted;
  std::string character_sign;
  auto* character = app.add_subcommand(
      "character", "graded dimensions with an independent cross-count");
  character->add_option("--coset", character_coset, "untwisted coset label");
  character->add_option("--twisted", character_twisted,
                        "twisted sector index (1 or 2)");
  character->add_option("--sign", character_sign, "theta eigenspace sign");

  std::string mode_op;
  std::string mode_index = "0";
  long long mode_beta = 1;
  std::string mode_sign = "+1";
  std::string mode_input = "-";
  auto* mode = app.add_subcommand(
      "mode", "apply a named operator to a serialized state");
  mode->add_option("--op", mode_op,
                   "alpha | L | E | F | omega | vacuum | exp | theta | project")
      ->required();
  mode->add_option("--n", mode_index, "mode index (rational for alpha)");
  mode->add_option("--m", mode_beta, "lattice multiple for --op exp");
  mode->add_option("--sign", mode_sign, "sign for --op project");
  mode->add_option("--in", mode_input, "state JSON path, or - for stdin");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (table1->parsed()) {
      return run_table1(cfg);
    }
    if (verify->parsed()) {
      if (format_opt->count() == 0) {
        cfg.format = "json";  // verification reports default to JSON
      }
      return run_verify(cfg, suite);
    }
    if (weights->parsed()) {
      return run_weights(cfg);
    }
    if (decompose->parsed()) {
      return run_decompose(cfg, decompose_input, decompose_degree);
    }
    if (character->parsed()) {
      return run_character(cfg, character_coset, character_twisted,
                           character_sign);
    }
    if (mode->parsed()) {
      return run_mode(cfg, mode_op, mode_index, mode_beta, mode_sign,
                      mode_input);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
