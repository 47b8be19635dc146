#pragma once

#include "voa/module.hpp"
#include "voa/orbifold.hpp"
#include "voa/report.hpp"
#include "voa/suites.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace voa {

// Insertion-ordered JSON keeps command output byte-stable for a fixed
// configuration.
using Json = nlohmann::ordered_json;

Json sector_to_json(const Sector& sector);
Sector sector_from_json(const LatticeParams& p, const Json& j);

/// {"sector": ..., "terms": [{"parts": [...], "label": ..., "coeff": ...}]}
/// with rationals rendered as "p/q" strings and terms in canonical
/// monomial order.
Json state_to_json(const LatticeParams& p, const State& s);
State state_from_json(const LatticeParams& p, const Json& j);

/// Compact single-line serialization for check witnesses.
std::string state_witness(const LatticeParams& p, const State& s);

Json report_to_json(const SuiteReport& report);
Json lowest_weights_to_json(const LowestWeightSet& set);
Json weight_gaps_to_json(const WeightGapReport& report,
                         const std::optional<CompositeGapWitness>& witness);
Json decomposition_to_json(const DecompositionResult& result);
Json character_to_json(const LatticeParams& p, const CharacterReport& report);

// Direct-sum description files: a JSON list of {"module": name, "mult": n}
// entries, optionally with one {"jordan": {"degree": n, "lambda": "p/q"}}.
struct DirectSumSpec {
  std::vector<std::pair<std::string, int>> modules;
  std::optional<JordanInsertion> jordan;
};

DirectSumSpec parse_direct_sum_spec(const Json& j);
DirectSumModule build_direct_sum(const LatticeParams& p,
                                 const DirectSumSpec& spec, int max_degree);

}  // namespace voa
