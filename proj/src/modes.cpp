#include "voa/modes.hpp"

#include "voa/basis.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace voa {

ModeIndex ModeIndex::half_odd(long long odd_numerator) {
  if (odd_numerator % 2 == 0) {
    throw std::invalid_argument("half_odd mode needs an odd numerator");
  }
  return ModeIndex{odd_numerator};
}

long long ModeIndex::as_integer() const {
  if (!is_integer()) {
    throw std::invalid_argument("mode index is not an integer");
  }
  return num2 / 2;
}

State apply_alpha(const LatticeParams& p, ModeIndex n, const State& s) {
  const bool twisted = s.sector().is_twisted();
  if (twisted == n.is_integer()) {
    throw unsupported_operation(
        twisted ? "integer Heisenberg modes do not act on twisted states"
                : "half-odd Heisenberg modes do not act on untwisted states");
  }
  State out(s.sector());
  for (const auto& [monomial, coeff] : s.terms()) {
    if (n.num2 < 0) {
      out.add_term(monomial.with_part2(static_cast<int>(-n.num2)), coeff);
    } else if (n.num2 == 0) {
      out.add_term(monomial, coeff * Rational(monomial.label));
    } else {
      // [alpha(n), alpha(-n)] = n <alpha,alpha> = k * (2n), once per part.
      const auto& parts = monomial.parts2;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] != n.num2) {
          continue;
        }
        if (i > 0 && parts[i - 1] == parts[i]) {
          continue;  // count each part value once, scaled by multiplicity
        }
        const long long mult = std::count(parts.begin(), parts.end(), parts[i]);
        out.add_term(monomial.without_part_index(i),
                     coeff * Rational(mult * p.k * n.num2));
      }
    }
  }
  return out;
}

namespace {

// Coefficient of alpha(j) z^{-j-d} in the (d-1)-th divided-power derivative
// of the current alpha(z).
Rational current_coeff(long long d, long long j) {
  Rational c = binomial(j + d - 1, d - 1);
  if (d % 2 == 0) {
    c = -c;
  }
  return c;
}

// Smallest weight occurring in the untwisted coset of the given label.
Rational coset_min_weight(const LatticeParams& p, long long label) {
  const long long period = p.gram();
  const long long c = ((label % period) + period) % period;
  const long long alt = period - c;
  const long long best = std::min(c * c, alt * alt);
  return Rational(best, 4LL * p.k);
}

long long max_depth(const FockMonomial& m) {
  return m.parts2.empty() ? 0 : m.parts2.front() / 2;
}

// e_beta(n) applied to one untwisted monomial, via the exponential formula.
State exp_mode_monomial(const LatticeParams& p, long long beta_multiple,
                        long long n, const FockMonomial& u) {
  const long long target = -n - 1;
  const long long phase = beta_multiple * u.label;  // z^{beta(0)} exponent
  const long long shifted_label = u.label + p.gram() * beta_multiple;
  const Sector out_sector = Sector::untwisted(p, shifted_label);

  FockMonomial base = u;
  base.label = shifted_label;

  // Annihilation exponential: iterate X = -sum_j (m/j) alpha(j) z^{-j};
  // X^t/t! dies once t exceeds the number of parts.
  std::map<long long, State> annihilated;  // degree removed -> state
  {
    std::map<long long, State> layer;
    State start(out_sector);
    start.add_term(base, 1);
    layer.emplace(0, start);
    annihilated = layer;
    for (long long t = 1; !layer.empty(); ++t) {
      std::map<long long, State> next;
      for (const auto& [deg, st] : layer) {
        long long depth_cap = 0;
        for (const auto& [mon, c] : st.terms()) {
          depth_cap = std::max(depth_cap, max_depth(mon));
        }
        for (long long j = 1; j <= depth_cap; ++j) {
          State hit = apply_alpha(p, ModeIndex::integer(j), st);
          if (hit.is_zero()) {
            continue;
          }
          hit *= Rational(-beta_multiple, j) / Rational(t);
          auto [it, inserted] = next.try_emplace(deg + j, hit);
          if (!inserted) {
            it->second += hit;
          }
        }
      }
      for (const auto& [deg, st] : next) {
        auto [it, inserted] = annihilated.try_emplace(deg, st);
        if (!inserted) {
          it->second += st;
        }
      }
      layer = std::move(next);
    }
  }

  // Creation exponential: only the degree needed for the requested
  // coefficient contributes per annihilated layer.
  State result(out_sector);
  for (const auto& [deg, st] : annihilated) {
    const long long create = target - phase + deg;
    if (create < 0 || st.is_zero()) {
      continue;
    }
    for (const auto& partition : partitions_of(static_cast<int>(create))) {
      Rational coeff(1);
      for (std::size_t i = 0; i < partition.size();) {
        std::size_t run = i;
        while (run < partition.size() && partition[run] == partition[i]) {
          ++run;
        }
        const long long mult = static_cast<long long>(run - i);
        Rational factor(1);
        for (long long c = 0; c < mult; ++c) {
          factor *= Rational(beta_multiple, partition[i]) / Rational(c + 1);
        }
        coeff *= factor;
        i = run;
      }
      for (const auto& [mon, c] : st.terms()) {
        FockMonomial built = mon;
        for (int part : partition) {
          built = built.with_part2(2 * part);
        }
        result.add_term(built, c * coeff);
      }
    }
  }
  return result;
}

struct MonomialModeKey {
  int k;
  FockMonomial a;
  long long n;
  FockMonomial u;

  auto operator<=>(const MonomialModeKey&) const = default;
};

std::map<MonomialModeKey, State>& mode_cache() {
  thread_local std::map<MonomialModeKey, State> cache;
  return cache;
}

// Mode n of the monomial field alpha(-d_1)...alpha(-d_l) e_{m.alpha} on the
// single monomial u. The leftmost current splits into creator and
// annihilator halves around the rest of the field:
//   (alpha(-d)v)(n) = sum_{j<0} c(d,j) alpha(j) v(n-j-d)
//                   + sum_{j>=0} c(d,j) v(n-j-d) alpha(j),
// with the creator sum cut off exactly where the inner mode exceeds the
// weight bound below which nothing in the target coset lives.
State mode_monomial(const LatticeParams& p, const FockMonomial& a,
                    long long n, const FockMonomial& u, int slack) {
  const MonomialModeKey key{p.k, a, n, u};
  if (slack == 0) {
    auto it = mode_cache().find(key);
    if (it != mode_cache().end()) {
      return it->second;
    }
  }
  if (a.parts2.empty()) {
    State base = exp_mode_monomial(p, a.label / p.gram(), n, u);
    if (slack == 0) {
      mode_cache().emplace(key, base);
    }
    return base;
  }

  const long long d = a.parts2.front() / 2;
  const FockMonomial rest = a.without_part_index(0);
  const Sector out_sector = Sector::untwisted(
      p, u.label + a.label);  // labels only ever shift by the exponential

  State result(out_sector);

  // Annihilator half: j = 0 reads the original label, j >= 1 contracts.
  {
    const Rational label_factor(u.label);
    if (label_factor != 0) {
      State inner = mode_monomial(p, rest, n - d, u, slack);
      inner *= current_coeff(d, 0) * label_factor;
      result += inner;
    }
    const auto& parts = u.parts2;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i - 1] == parts[i]) {
        continue;
      }
      const long long j = parts[i] / 2;
      const long long mult = std::count(parts.begin(), parts.end(), parts[i]);
      const Rational factor = Rational(mult * p.k * parts[i]);
      State inner =
          mode_monomial(p, rest, n - j - d, u.without_part_index(i), slack);
      inner *= current_coeff(d, j) * factor;
      result += inner;
    }
  }

  // Creator half: v(M)u vanishes once wt(rest) + wt(u) - M - 1 drops below
  // the coset's minimal weight.
  {
    const Rational bound = monomial_weight(p, rest, false) +
                           monomial_weight(p, u, false) -
                           coset_min_weight(p, u.label + rest.label) - 1;
    const long long max_inner_mode =
        to_long(Rational(floor_rational(bound))) + slack;
    for (long long j = -1; n - j - d <= max_inner_mode; --j) {
      State inner = mode_monomial(p, rest, n - j - d, u, slack);
      if (inner.is_zero()) {
        continue;
      }
      State created(out_sector);
      for (const auto& [mon, c] : inner.terms()) {
        created.add_term(mon.with_part2(static_cast<int>(-2 * j)), c);
      }
      created *= current_coeff(d, j);
      result += created;
    }
  }

  if (slack == 0) {
    mode_cache().emplace(key, result);
  }
  return result;
}

void require_voa_element(const State& a) {
  if (a.sector().is_twisted() || a.sector().coset() != 0) {
    throw std::invalid_argument(
        "vertex operator elements live in the untwisted coset 0");
  }
}

}  // namespace

State apply_lattice_exponential(const LatticeParams& p, long long beta_multiple,
                                long long n, const State& s) {
  if (s.sector().is_twisted()) {
    throw unsupported_operation(
        "lattice vertex operators on twisted states are out of scope");
  }
  const long long shifted = s.sector().coset() + p.gram() * beta_multiple;
  State out(Sector::untwisted(p, shifted));
  for (const auto& [mon, coeff] : s.terms()) {
    State part = exp_mode_monomial(p, beta_multiple, n, mon);
    part *= coeff;
    out += part;
  }
  return out;
}

State apply_mode(const LatticeParams& p, const State& a, long long n,
                 const State& s, int slack) {
  require_voa_element(a);
  if (s.sector().is_twisted()) {
    throw unsupported_operation(
        "general vertex operator modes on twisted states are out of scope");
  }
  State out(s.sector());
  for (const auto& [amon, acoeff] : a.terms()) {
    for (const auto& [umon, ucoeff] : s.terms()) {
      State part = mode_monomial(p, amon, n, umon, slack);
      part *= acoeff * ucoeff;
      out += part;
    }
  }
  return out;
}

void clear_mode_cache() { mode_cache().clear(); }

namespace {

State twisted_virasoro(const LatticeParams& p, long long n, const State& s) {
  long long depth2 = 0;
  for (const auto& [mon, coeff] : s.terms()) {
    depth2 = std::max<long long>(depth2, mon.parts2.empty() ? 0 : mon.parts2.front());
  }
  const long long n2 = 2 * n;
  const long long lo = std::min(n2 - depth2, n2 + 1);
  const long long hi = std::max(depth2, -1LL);
  State sum(s.sector());
  for (long long j2 = (lo % 2 == 0) ? lo + 1 : lo; j2 <= hi; j2 += 2) {
    const long long q2 = n2 - j2;
    // Normal ordering: the annihilator acts first.
    const long long first = (j2 > 0 && q2 < 0) ? j2 : q2;
    const long long second = (j2 > 0 && q2 < 0) ? q2 : j2;
    State term = apply_alpha(p, ModeIndex::half_odd(first), s);
    if (term.is_zero()) {
      continue;
    }
    term = apply_alpha(p, ModeIndex::half_odd(second), term);
    sum += term;
  }
  sum *= Rational(1, 4LL * p.k);
  if (n == 0) {
    State shift = s;
    shift *= Rational(1, 16);
    sum += shift;
  }
  return sum;
}

}  // namespace

State virasoro(const LatticeParams& p, long long n, const State& s) {
  if (s.sector().is_twisted()) {
    return twisted_virasoro(p, n, s);
  }
  return apply_mode(p, make_virasoro_element(p), n + 1, s);
}

State shifted_mode(const LatticeParams& p, const State& a, long long n,
                   const State& s) {
  require_voa_element(a);
  const auto weight = homogeneous_weight(p, a);
  if (a.is_zero()) {
    return State(s.sector());
  }
  if (!weight) {
    throw std::invalid_argument("shifted modes need a homogeneous element");
  }
  const long long wt = to_long(*weight);
  if (!s.sector().is_twisted()) {
    return apply_mode(p, a, wt + n - 1, s);
  }
  // Twisted sector: only the Virasoro family acts (reduced scope).
  const State vac = make_vacuum(p);
  const State omega = make_virasoro_element(p);
  if (a.terms().size() == 1) {
    const auto& [mon, coeff] = *a.terms().begin();
    if (mon == vac.terms().begin()->first) {
      State out = s;
      out *= (n == 0) ? coeff : Rational(0);
      return out;
    }
    if (mon == omega.terms().begin()->first) {
      const Rational scale = coeff * Rational(4LL * p.k);
      State out = virasoro(p, n, s);
      out *= scale;
      return out;
    }
  }
  throw unsupported_operation(
      "only vacuum and Virasoro shifted modes act on twisted states");
}

State zero_mode(const LatticeParams& p, const State& a, const State& s) {
  State out(s.sector());
  for (const auto& [weight, component] : weight_components(p, a)) {
    out += shifted_mode(p, component, 0, s);
  }
  return out;
}

bool check_commutator(const LatticeParams& p, const State& a, const State& b,
                      long long m, long long n, const State& u) {
  State lhs = apply_mode(p, a, m, apply_mode(p, b, n, u)) -
              apply_mode(p, b, n, apply_mode(p, a, m, u));

  long long wa = 0;
  long long wb = 0;
  for (const auto& [w, comp] : weight_components(p, a)) {
    wa = std::max(wa, to_long(w));
  }
  for (const auto& [w, comp] : weight_components(p, b)) {
    wb = std::max(wb, to_long(w));
  }
  State rhs(u.sector());
  for (long long i = 0; i <= wa + wb; ++i) {
    const State prod = apply_mode(p, a, i, b);
    if (prod.is_zero()) {
      continue;
    }
    State term = apply_mode(p, prod, m + n - i, u);
    term *= binomial(m, i);
    rhs += term;
  }
  return lhs == rhs;
}

bool check_l_minus1_derivative(const LatticeParams& p, const State& a,
                               long long n, const State& s) {
  const State derived = virasoro(p, -1, a);
  const State lhs = apply_mode(p, derived, n, s);
  State rhs = apply_mode(p, a, n - 1, s);
  rhs *= Rational(-n);
  return lhs == rhs;
}

}  // namespace voa
