#pragma once

#include "voa/module.hpp"
#include "voa/report.hpp"

#include <utility>
#include <vector>

namespace voa {

/// Zhu circle product a o b = sum_{i>=0} C(wt a, i) a(i-2) b, extended
/// linearly over the weight components of a. Always a finite exact sum.
State zhu_circ(const LatticeParams& p, const State& a, const State& b);

/// Zhu star product a * b = sum_{i>=0} C(wt a, i) a(i-1) b.
State zhu_star(const LatticeParams& p, const State& a, const State& b);

// Truncated generating set for the span O(V) of all circle products,
// restricted to a theta eigenspace: every a o b over homogeneous basis
// pairs with wt(a) + wt(b) + 1 <= weight_cap.
struct OVTruncation {
  LatticeParams lat;
  Rational weight_cap;
  int theta_sign = 1;
  std::vector<State> generators;
};

OVTruncation build_ov_truncation(const LatticeParams& p,
                                 const Rational& weight_cap,
                                 int theta_sign = 1);

// Membership certificates are one-sided: the span is not weight-graded, so
// a finite truncation can certify membership but never refute it.
enum class SpanCertificate { certified_true, not_certified };

SpanCertificate ov_membership(const State& x, const OVTruncation& trunc);

// Joint kernel of the shifted modes a~(n), n >= 1, over a spanning set of
// theta-even coset-0 elements up to testing_cap, per degree. A superset of
// the true lowest-weight subspace that stabilizes as the cap grows.
struct OmegaSubspace {
  Rational testing_cap;
  bool reduced_oracle_blocks = false;  // twisted blocks tested with L(n) only
  std::vector<std::vector<std::vector<Rational>>> degree_vectors;

  int total_dim() const {
    int total = 0;
    for (const auto& vectors : degree_vectors) {
      total += static_cast<int>(vectors.size());
    }
    return total;
  }
};

OmegaSubspace omega_subspace(const DirectSumModule& m,
                             const Rational& testing_cap);

/// Verifies the induced-action laws on the computed lowest-weight subspace
/// of one untwisted catalogue module: o(a o b) acts by zero, o(a * b) =
/// o(a)o(b), and o(omega) acts by the module's lowest weight.
SuiteReport check_module_axioms(const LatticeParams& p,
                                const ModuleTruncation& m,
                                const Rational& pair_weight_cap,
                                const Rational& omega_testing_cap);

}  // namespace voa
