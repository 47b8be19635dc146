#pragma once

#include "voa/orbifold.hpp"
#include "voa/report.hpp"
#include "voa/zhu.hpp"

#include <cstdint>
#include <optional>

namespace voa {

struct SampleConfig {
  Rational max_weight = Rational(6);
  int samples = 200;
  std::uint64_t seed = 42;
};

/// The explicit E/F mode identities and lowest-space instances, checked
/// exactly in the coset-0 sector. Needs k >= 2.
SuiteReport identity_suite(const LatticeParams& p);

/// E(n)a = 0 for n >= wt(a) over the theta-even label-0 basis up to
/// weight_cap (the modes of E start no lower than z^{-wt(a)} there).
SuiteReport e_mode_vanishing_suite(const LatticeParams& p,
                                   const Rational& weight_cap);

/// Seeded samples of the commutator formula, both sides computed
/// independently and compared exactly.
SuiteReport commutator_suite(const LatticeParams& p, const SampleConfig& cfg);

/// Virasoro bracket relations for |m|, |n| <= 3 on sampled vectors from
/// both sectors, against the central charge the engine computes from
/// L(2)L(-2)vac.
SuiteReport virasoro_suite(const LatticeParams& p, const SampleConfig& cfg);

/// Seeded samples of the L(-1)-derivative property.
SuiteReport derivative_suite(const LatticeParams& p, const SampleConfig& cfg);

/// Module-axiom checks on every untwisted catalogue module plus the
/// centrality certificates star(omega,a) - star(a,omega) in O(V).
SuiteReport zhu_suite(const LatticeParams& p, const Rational& pair_weight_cap,
                      int module_degree_cap, const Rational& omega_testing_cap);

// Graded dimensions counted two independent ways: direct basis enumeration
// versus (dim +- trace)/2 from integer partition arithmetic.
struct CharacterRow {
  Rational weight;
  long long dim_direct = 0;
  long long dim_formula = 0;
};

struct CharacterReport {
  Sector sector;
  std::optional<int> theta_sign;
  std::vector<CharacterRow> rows;
  bool consistent = true;
};

CharacterReport character_crosscheck(const LatticeParams& p, Sector sector,
                                     std::optional<int> theta_sign,
                                     const Rational& max_weight);

// Integer-only counting oracles, independent of the Fock enumeration path.
long long partition_count(int n);
long long signed_partition_count(int n);  // weighted by (-1)^{#parts}
long long half_odd_partition_count(int doubled_total);
long long signed_half_odd_partition_count(int doubled_total);

}  // namespace voa
