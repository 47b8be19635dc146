#include "voa/io.hpp"

#include <stdexcept>

namespace voa {

namespace {

std::string part_to_string(int part2) {
  if (part2 % 2 == 0) {
    return std::to_string(part2 / 2);
  }
  return std::to_string(part2) + "/2";
}

int part_from_string(const std::string& text) {
  const Rational value = parse_rational(text);
  const Rational doubled = value * 2;
  if (!is_integer(doubled) || doubled <= 0) {
    throw std::invalid_argument("invalid mode depth: " + text);
  }
  return static_cast<int>(to_long(doubled));
}

}  // namespace

Json sector_to_json(const Sector& sector) {
  Json j;
  if (sector.is_twisted()) {
    j["kind"] = "twisted";
    j["i"] = sector.twist_index();
  } else {
    j["kind"] = "untwisted";
    j["coset"] = sector.coset();
  }
  return j;
}

Sector sector_from_json(const LatticeParams& p, const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "twisted") {
    return Sector::twisted(j.at("i").get<int>());
  }
  if (kind == "untwisted") {
    return Sector::untwisted(p, j.at("coset").get<long long>());
  }
  throw std::invalid_argument("unknown sector kind: " + kind);
}

Json state_to_json(const LatticeParams&, const State& s) {
  Json j;
  j["sector"] = sector_to_json(s.sector());
  Json terms = Json::array();
  for (const auto& [monomial, coeff] : s.terms()) {
    Json term;
    Json parts = Json::array();
    for (int part2 : monomial.parts2) {
      parts.push_back(part_to_string(part2));
    }
    term["parts"] = std::move(parts);
    if (s.sector().is_twisted()) {
      term["label"] = "T" + std::to_string(s.sector().twist_index());
    } else {
      term["label"] = monomial.label;
    }
    term["coeff"] = to_string(coeff);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

State state_from_json(const LatticeParams& p, const Json& j) {
  const Sector sector = sector_from_json(p, j.at("sector"));
  State s(sector);
  for (const Json& term : j.at("terms")) {
    FockMonomial monomial;
    for (const Json& part : term.at("parts")) {
      monomial.parts2.push_back(part_from_string(part.get<std::string>()));
    }
    std::sort(monomial.parts2.begin(), monomial.parts2.end(),
              std::greater<int>());
    if (!sector.is_twisted()) {
      monomial.label = term.at("label").get<long long>();
      if (Sector::untwisted(p, monomial.label) != sector) {
        throw std::invalid_argument("term label outside the state's coset");
      }
    }
    for (int part2 : monomial.parts2) {
      if ((part2 % 2 != 0) != sector.is_twisted()) {
        throw std::invalid_argument("part parity does not match sector");
      }
    }
    s.add_term(monomial, parse_rational(term.at("coeff").get<std::string>()));
  }
  return s;
}

std::string state_witness(const LatticeParams& p, const State& s) {
  return state_to_json(p, s).dump();
}

Json report_to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["k"] = report.k;
  j["status"] = report.all_passed() ? "pass" : "fail";
  j["failures"] = report.failures();
  Json checks = Json::array();
  for (const CheckRecord& record : report.checks) {
    Json c;
    c["id"] = record.id;
    c["anchor"] = record.anchor;
    c["k"] = record.k;
    c["status"] = record.passed ? "pass" : "fail";
    if (!record.witness.empty()) {
      c["witness"] = record.witness;
    }
    if (!record.caps.empty()) {
      Json caps;
      for (const auto& [key, value] : record.caps) {
        caps[key] = value;
      }
      c["caps"] = std::move(caps);
    }
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json lowest_weights_to_json(const LowestWeightSet& set) {
  Json j;
  j["k"] = set.k;
  Json entries = Json::array();
  for (const auto& entry : set.entries) {
    Json e;
    e["weight"] = to_string(entry.weight);
    e["realized_by"] = entry.realized_by;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  Json distinct = Json::array();
  for (const Rational& w : set.distinct_sorted()) {
    distinct.push_back(to_string(w));
  }
  j["distinct"] = std::move(distinct);
  return j;
}

Json weight_gaps_to_json(const WeightGapReport& report,
                         const std::optional<CompositeGapWitness>& witness) {
  Json j;
  j["k"] = report.k;
  j["prime"] = is_prime(report.k);
  j["all_distinct"] = report.all_distinct;
  Json gaps = Json::array();
  for (const auto& [weight, ok] : report.gap_free) {
    Json g;
    g["lambda"] = to_string(weight);
    g["gap_free"] = ok;
    gaps.push_back(std::move(g));
  }
  j["gaps"] = std::move(gaps);
  if (witness) {
    Json w;
    w["r"] = witness->r;
    w["s"] = witness->s;
    w["difference"] = witness->difference;
    j["composite_witness"] = std::move(w);
  }
  return j;
}

Json decomposition_to_json(const DecompositionResult& result) {
  Json j;
  j["grading_denominator"] = result.T;
  j["max_degree"] = result.max_degree;
  Json families = Json::array();
  for (const DecompositionFamily& family : result.families) {
    Json f;
    f["lowest"] = to_string(family.lowest);
    f["dims"] = family.dims;
    f["total_dim"] = family.total_dim();
    families.push_back(std::move(f));
  }
  j["families"] = std::move(families);
  Json residual = Json::array();
  for (const auto& [degree, vectors] : result.residual) {
    Json r;
    r["degree"] = degree;
    r["dim"] = vectors.size();
    residual.push_back(std::move(r));
  }
  j["residual"] = std::move(residual);
  j["residual_empty"] = result.residual_empty();
  j["stability"] = Json{{"samples", result.stability_samples},
                        {"skipped", result.stability_skipped},
                        {"failures", result.stability_failures}};
  return j;
}

Json character_to_json(const LatticeParams& p, const CharacterReport& report) {
  Json j;
  j["k"] = p.k;
  j["sector"] = sector_to_json(report.sector);
  if (report.theta_sign) {
    j["theta_sign"] = *report.theta_sign;
  }
  Json rows = Json::array();
  for (const CharacterRow& row : report.rows) {
    Json r;
    r["weight"] = to_string(row.weight);
    r["dim"] = row.dim_direct;
    r["dim_formula"] = row.dim_formula;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["consistent"] = report.consistent;
  return j;
}

DirectSumSpec parse_direct_sum_spec(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument(
        "direct-sum description must be a JSON list");
  }
  DirectSumSpec spec;
  for (const Json& entry : j) {
    if (entry.contains("jordan")) {
      if (spec.jordan) {
        throw std::invalid_argument("only one jordan insertion is supported");
      }
      const Json& inner = entry.at("jordan");
      spec.jordan = JordanInsertion{
          inner.at("degree").get<int>(),
          parse_rational(inner.at("lambda").get<std::string>())};
      continue;
    }
    const std::string name = entry.at("module").get<std::string>();
    const int mult = entry.value("mult", 1);
    if (mult < 1) {
      throw std::invalid_argument("multiplicity must be >= 1");
    }
    spec.modules.emplace_back(name, mult);
  }
  if (spec.modules.empty()) {
    throw std::invalid_argument("direct-sum description lists no modules");
  }
  return spec;
}

DirectSumModule build_direct_sum(const LatticeParams& p,
                                 const DirectSumSpec& spec, int max_degree) {
  std::vector<std::pair<ModuleTruncation, int>> summands;
  for (const auto& [name, mult] : spec.modules) {
    summands.emplace_back(build_catalogue_module(p, name, max_degree), mult);
  }
  return DirectSumModule(p, std::move(summands), spec.jordan);
}

}  // namespace voa
