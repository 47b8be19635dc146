#pragma once

#include "voa/basis.hpp"
#include "voa/matrix.hpp"
#include "voa/modes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace voa {

// A weight-graded, finitely truncated admissible module: per-degree bases
// with weight lowest + degree/T, the degree operator acting by the degree,
// and the mode engine as action oracle.
struct ModuleTruncation {
  std::string name;
  LatticeParams lat;
  Sector sector;
  std::optional<int> theta_sign;
  int grading_denom = 1;  // T
  int max_degree = 0;
  Rational lowest_weight;
  std::vector<std::vector<State>> degree_basis;

  int dim(int degree) const {
    return (degree < 0 || degree > max_degree)
               ? 0
               : static_cast<int>(degree_basis[degree].size());
  }
  Rational degree_weight(int degree) const {
    return lowest_weight + Rational(degree, grading_denom);
  }
};

/// Canonical catalogue names: Vplus, Vminus, V(r=1)...V(r=2k-1) skipping
/// r=k, Valpha2plus, Valpha2minus, T1plus, T1minus, T2plus, T2minus.
/// All 2k untwisted cosets appear (the self-dual cosets 0 and k split into
/// theta eigenspaces), plus the four twisted eigenspace entries: 2k+6 total.
std::vector<std::string> catalogue_names(const LatticeParams& p);

ModuleTruncation build_catalogue_module(const LatticeParams& p,
                                        const std::string& name,
                                        int max_degree);

std::vector<ModuleTruncation> catalogue(const LatticeParams& p,
                                        int max_degree);

/// Coordinates of a state in the degree-d basis. Exact; throws if the state
/// is not in the spanned subspace.
std::vector<Rational> module_coordinates(const ModuleTruncation& m,
                                         int degree, const State& s);

State module_state(const ModuleTruncation& m, int degree,
                   const std::vector<Rational>& coords);

/// L(0) on the degree-d basis, computed through the Virasoro action (for
/// catalogue modules it comes out diagonal with the degree weight).
RationalMatrix module_l0_matrix(const ModuleTruncation& m, int degree);

// Synthetic nilpotent chain added to L(0) inside one degree's lambda
// eigenspace; the generalized eigenspaces are unchanged but L(0) stops
// being diagonalizable there.
struct JordanInsertion {
  int degree = 0;
  Rational lambda;
};

// Finite direct sum of catalogue truncations with multiplicities, graded by
// the common denominator T = lcm of the summand gradings. Degree-d
// coordinates are the concatenation over summand copies of the local bases
// at the matching local degree (summands with coarser grading skip the
// degrees they cannot reach).
class DirectSumModule {
 public:
  struct Block {
    std::size_t summand = 0;
    int copy = 0;
    int local_degree = 0;
    int offset = 0;
    int dim = 0;
  };

  struct ModeImage {
    bool overflow = false;  // target degree above the truncation cap
    int degree = 0;
    std::vector<Rational> coords;  // empty <=> zero image
  };

  enum class UnsupportedPolicy {
    raise,       // propagate unsupported_operation from twisted blocks
    skip_block,  // treat unsupported blocks as contributing no constraint
  };

  DirectSumModule(LatticeParams p,
                  std::vector<std::pair<ModuleTruncation, int>> summands,
                  std::optional<JordanInsertion> jordan = std::nullopt);

  const LatticeParams& lat() const { return lat_; }
  int T() const { return common_T_; }
  int max_degree() const { return max_degree_; }
  const std::vector<std::pair<ModuleTruncation, int>>& summands() const {
    return summands_;
  }
  const std::optional<JordanInsertion>& jordan() const { return jordan_; }

  int dim(int degree) const;
  const std::vector<Block>& blocks(int degree) const;

  RationalMatrix l0_matrix(int degree) const;

  /// a~(j) applied blockwise to a degree-d coordinate vector.
  ModeImage apply_shifted(const State& a, long long j, int degree,
                          const std::vector<Rational>& coords,
                          UnsupportedPolicy policy,
                          bool* skipped_blocks = nullptr) const;

 private:
  LatticeParams lat_;
  std::vector<std::pair<ModuleTruncation, int>> summands_;
  std::optional<JordanInsertion> jordan_;
  int common_T_ = 1;
  int max_degree_ = 0;
  std::vector<std::vector<Block>> layout_;  // per common degree
};

/// Convenience wrapper: a sum with one summand of multiplicity 1.
DirectSumModule as_direct_sum(const ModuleTruncation& m);

}  // namespace voa
