#pragma once

#include "voa/module.hpp"
#include "voa/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace voa {

// The multiset {0, 1, r^2/4k (1 <= r <= k), 1/16, 9/16} with, per entry,
// the catalogue modules realizing it. Every weight is read off a built
// truncation's grading, never hard-coded.
struct LowestWeightEntry {
  Rational weight;
  std::vector<std::string> realized_by;
};

struct LowestWeightSet {
  int k = 0;
  std::vector<LowestWeightEntry> entries;

  std::vector<Rational> distinct_sorted() const;
};

LowestWeightSet lowest_weight_set(const LatticeParams& p);

// Exact distinctness and integer-gap data for the lowest-weight set.
struct WeightGapReport {
  int k = 0;
  bool all_distinct = false;
  // Per distinct weight lambda: true iff no mu in the set has
  // mu - lambda a positive integer.
  std::vector<std::pair<Rational, bool>> gap_free;

  bool gaps_hold_away_from_zero() const;
};

WeightGapReport weight_gap_report(const LatticeParams& p);

// For composite k = p q n (p, q prime, q <= p): the pair r = n(p-q),
// s = n(p+q) has (s^2 - r^2)/4k = n, a positive integer.
struct CompositeGapWitness {
  long long r = 0;
  long long s = 0;
  long long difference = 0;
};

/// Throws std::invalid_argument for prime (or < 4) k.
CompositeGapWitness composite_gap_witness(int k);

bool is_prime(int n);

// Generalized L(0) eigenspace decomposition of a truncated direct sum into
// 1/T-coherent families, one per candidate lowest weight.
struct DecompositionFamily {
  Rational lowest;
  std::vector<int> dims;  // per common degree
  std::vector<std::vector<std::vector<Rational>>> bases;

  int total_dim() const;
};

struct DecompositionResult {
  int T = 1;
  int max_degree = 0;
  std::vector<DecompositionFamily> families;
  // Degree -> complement representatives not captured by any candidate.
  std::vector<std::pair<int, std::vector<std::vector<Rational>>>> residual;
  int stability_samples = 0;
  int stability_skipped = 0;
  std::vector<std::string> stability_failures;

  bool residual_empty() const { return residual.empty(); }
  bool stable() const { return stability_failures.empty(); }
};

/// Runs generalized_eigenspaces degree by degree against the candidates
/// lambda_i + degree/T, groups the results into families, reports whatever
/// is left over, and spot-checks that sampled shifted modes map each family
/// into itself at the shifted degree.
DecompositionResult decompose(const DirectSumModule& m,
                              const std::vector<Rational>& candidates,
                              int stability_samples = 50,
                              std::uint64_t seed = 42);

/// Default candidate set: the distinct lowest weights for the given k.
std::vector<Rational> default_candidates(const LatticeParams& p);

// Smallest mode-stable graded subspace containing the seed vector, grown by
// repeated application of shifted modes of a theta-even spanning set, up to
// the truncation cap.
struct GradedSubspace {
  std::vector<std::vector<std::vector<Rational>>> degree_vectors;

  std::vector<int> dims() const;
  int total_dim() const;
};

GradedSubspace generate_submodule(const DirectSumModule& m, int seed_degree,
                                  const std::vector<Rational>& seed_coords,
                                  const Rational& spanning_weight_cap);

}  // namespace voa
