#pragma once

#include "voa/rational.hpp"
#include "voa/sparse_vector.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace voa {

// Rank-one even lattice L = Z.alpha with <alpha, alpha> = 2k. Dual-lattice
// points r.alpha/2k are encoded by the integer r, so every inner product
// <r.alpha/2k, s.alpha/2k> = rs/2k stays rational and the unit-norm
// generator never has to be materialized.
struct LatticeParams {
  int k;

  explicit LatticeParams(int k_value);

  // <alpha, alpha>
  long long gram() const { return 2LL * k; }
};

// Carrier tag: one of the 2k untwisted cosets of L in its dual, or one of
// the two twisted sectors.
class Sector {
 public:
  enum class Kind { untwisted, twisted };

  static Sector untwisted(const LatticeParams& p, long long label);
  static Sector twisted(int i);

  Kind kind() const { return kind_; }
  bool is_twisted() const { return kind_ == Kind::twisted; }
  /// Coset representative in [0, 2k) (untwisted only).
  int coset() const;
  /// Twist index in {1, 2} (twisted only).
  int twist_index() const;

  /// theta maps coset c to -c; only cosets 0 and k (and the twisted
  /// sectors) are preserved.
  bool theta_stable(const LatticeParams& p) const;
  Sector theta_image(const LatticeParams& p) const;

  auto operator<=>(const Sector&) const = default;

 private:
  Sector(Kind kind, int index) : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

// One basis monomial alpha(-n_1)...alpha(-n_l) applied to a lattice label
// e_{r.alpha/2k} or a twisted ground vector t_i. Mode depths are stored
// doubled so the twisted half-odd depths stay integral: untwisted depths
// are even entries, twisted ones odd. Parts are kept sorted descending;
// the derived lexicographic order (parts, then label) is the canonical
// serialization order.
struct FockMonomial {
  std::vector<int> parts2;
  long long label = 0;

  int length() const { return static_cast<int>(parts2.size()); }
  long long parts2_sum() const;
  FockMonomial with_part2(int part2) const;
  FockMonomial without_part_index(std::size_t index) const;

  auto operator<=>(const FockMonomial&) const = default;
};

// Finite rational combination of monomials within a single sector.
class State {
 public:
  explicit State(Sector sector) : sector_(sector) {}

  const Sector& sector() const { return sector_; }
  const SparseVector<FockMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  void add_term(const FockMonomial& monomial, const Rational& coeff);
  Rational coefficient(const FockMonomial& monomial) const {
    return terms_.coefficient(monomial);
  }

  State& operator+=(const State& other);
  State& operator-=(const State& other);
  State& operator*=(const Rational& scalar);
  friend State operator+(State lhs, const State& rhs) { return lhs += rhs; }
  friend State operator-(State lhs, const State& rhs) { return lhs -= rhs; }
  friend State operator*(const Rational& scalar, State state) {
    return state *= scalar;
  }
  bool operator==(const State& other) const = default;

 private:
  Sector sector_;
  SparseVector<FockMonomial> terms_;
};

Rational monomial_weight(const LatticeParams& p, const FockMonomial& m,
                         bool twisted);

/// Weight of the (nonzero, homogeneous) state; nullopt for zero or mixed.
std::optional<Rational> homogeneous_weight(const LatticeParams& p,
                                           const State& s);

/// Splits into homogeneous components keyed by weight.
std::map<Rational, State> weight_components(const LatticeParams& p,
                                            const State& s);

/// The involution from the -1 isometry: scales each monomial by
/// (-1)^{#parts}; negates untwisted labels, fixes twisted ground vectors.
State theta(const LatticeParams& p, const State& s);

/// (s + sign.theta(s))/2; requires a theta-stable sector.
State project_pm(const LatticeParams& p, const State& s, int sign);

// Distinguished elements (all untwisted, coset 0 unless noted).
State make_vacuum(const LatticeParams& p);                    // e_0
State make_lattice_state(const LatticeParams& p, long long r);  // e_{r.a/2k}
State make_alpha_vacuum(const LatticeParams& p);  // alpha(-1) e_0
State make_virasoro_element(const LatticeParams& p);  // (1/4k) alpha(-1)^2 e_0
State make_E(const LatticeParams& p);             // e_alpha + e_{-alpha}
State make_F(const LatticeParams& p);             // e_alpha - e_{-alpha}
State make_twisted_ground(int i);                 // t_i
State make_monomial_state(const LatticeParams& p, Sector sector,
                          std::vector<int> parts2, long long label,
                          const Rational& coeff = Rational(1));

}  // namespace voa
