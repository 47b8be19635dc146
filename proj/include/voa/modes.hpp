#pragma once

#include "voa/fock.hpp"

#include <stdexcept>

namespace voa {

/// Raised when an operation is outside the twisted-sector scope (only
/// Heisenberg half-modes, Virasoro and theta act there).
struct unsupported_operation : std::domain_error {
  using std::domain_error::domain_error;
};

// Mode index for the Heisenberg current, stored doubled so half-odd
// twisted modes stay integral: integer n <-> 2n, half-odd n <-> odd value.
struct ModeIndex {
  long long num2 = 0;

  static ModeIndex integer(long long n) { return ModeIndex{2 * n}; }
  static ModeIndex half_odd(long long odd_numerator);

  bool is_integer() const { return num2 % 2 == 0; }
  long long as_integer() const;
};

/// Heisenberg mode alpha(n). Negative modes create, positive modes contract
/// with factor <alpha,alpha>.n per matching part, alpha(0) multiplies by the
/// label pairing <alpha, r.alpha/2k> = r. Integer modes act on untwisted
/// states, half-odd modes on twisted states; the mismatch is rejected.
State apply_alpha(const LatticeParams& p, ModeIndex n, const State& s);

/// Mode n of Y(e_beta, z) for beta = beta_multiple.alpha, evaluated exactly:
/// z^{beta(0)} contributes per original label, e_beta shifts labels by
/// 2k.beta_multiple, the annihilation exponential has finitely many terms on
/// any monomial, and the creation exponential is expanded to exactly the
/// degree the requested coefficient needs.
State apply_lattice_exponential(const LatticeParams& p, long long beta_multiple,
                                long long n, const State& s);

/// Mode n of the vertex operator of a general element a (a finite
/// combination of alpha(-n_1)...alpha(-n_l) e_beta), i.e. of the
/// normal-ordered product of derived Heisenberg currents against the
/// lattice exponential. Linear in both arguments; exact. `slack` widens the
/// internal creator-mode window past the weight-derived bound (the extra
/// terms are provably zero; the knob exists so tests can confirm that).
State apply_mode(const LatticeParams& p, const State& a, long long n,
                 const State& s, int slack = 0);

/// Drops the memoized monomial-mode cache (used by truncation-soundness
/// tests to force recomputation).
void clear_mode_cache();

/// L(n). Untwisted states: the omega mode apply_mode(omega, n+1, s).
/// Twisted states: the normal-ordered half-integer quadratic sum plus the
/// 1/16 shift at n = 0.
State virasoro(const LatticeParams& p, long long n, const State& s);

/// a~(n) = a(wt(a)+n-1) for homogeneous a; rejects non-homogeneous input.
/// On twisted states only multiples of the vacuum and of omega act.
State shifted_mode(const LatticeParams& p, const State& a, long long n,
                   const State& s);

/// o(a) = a~(0), extended linearly over weight components.
State zero_mode(const LatticeParams& p, const State& a, const State& s);

/// Checks [a(m), b(n)]u = sum_i C(m,i) (a(i)b)(m+n-i) u exactly, computing
/// the left side by sequential application and the right side through the
/// same mode path applied inside V.
bool check_commutator(const LatticeParams& p, const State& a, const State& b,
                      long long m, long long n, const State& u);

/// Checks (L(-1)a)(n) s = -n a(n-1) s exactly.
bool check_l_minus1_derivative(const LatticeParams& p, const State& a,
                               long long n, const State& s);

}  // namespace voa
