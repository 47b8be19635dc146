#include "voa/suites.hpp"

#include "voa/io.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace voa {

namespace {

CheckRecord make_record(std::string id, std::string anchor, int k,
                        bool passed, std::string witness = "") {
  CheckRecord record;
  record.id = std::move(id);
  record.anchor = std::move(anchor);
  record.k = k;
  record.passed = passed;
  record.witness = std::move(witness);
  return record;
}

}  // namespace

SuiteReport identity_suite(const LatticeParams& p) {
  if (p.k < 2) {
    throw std::invalid_argument("identity suite needs k >= 2");
  }
  const long long k = p.k;
  SuiteReport report{"identities", p.k, {}};

  const State vac = make_vacuum(p);
  const State alpha_vac = make_alpha_vacuum(p);
  const State e_elem = make_E(p);
  const State f_elem = make_F(p);

  {
    State expected = f_elem;
    expected *= Rational(-2 * k);
    const State actual = apply_mode(p, e_elem, 0, alpha_vac);
    report.checks.push_back(make_record(
        "identities/e0-on-alpha-vac", "E(0) a(-1)vac == -2k F", p.k,
        actual == expected,
        actual == expected ? "" : state_witness(p, actual - expected)));
  }
  {
    bool ok = true;
    std::string witness;
    for (long long n = 1; n <= 2 * k; ++n) {
      if (!apply_mode(p, e_elem, n, alpha_vac).is_zero()) {
        ok = false;
        witness = "n = " + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(
        make_record("identities/en-on-alpha-vac",
                    "E(n) a(-1)vac == 0 for 1 <= n <= 2k", p.k, ok, witness));
  }
  {
    State expected = alpha_vac;
    expected *= Rational(-2);
    report.checks.push_back(make_record(
        "identities/e-top-on-f", "E(2k-2) F == -2 a(-1)vac", p.k,
        apply_mode(p, e_elem, 2 * k - 2, f_elem) == expected));
  }
  {
    State expected = alpha_vac;
    expected *= Rational(4 * k);
    const State chained =
        apply_mode(p, e_elem, 2 * k - 2, apply_mode(p, e_elem, 0, alpha_vac));
    report.checks.push_back(
        make_record("identities/e-chain", "E(2k-2) E(0) a(-1)vac == 4k a(-1)vac",
                    p.k, chained == expected));
  }
  report.checks.push_back(make_record(
      "identities/e1-on-alpha-vac", "E(1) a(-1)vac == 0", p.k,
      apply_mode(p, e_elem, 1, alpha_vac).is_zero()));
  {
    bool ok = true;
    std::string witness;
    const auto basis = enumerate_basis(p, Sector::untwisted(p, 0),
                                       Rational(k - 1), 1);
    for (const auto& stratum : basis) {
      for (const State& a : stratum.states) {
        if (!apply_mode(p, e_elem, 2 * k - 2, a).is_zero()) {
          ok = false;
          witness = "weight " + to_string(stratum.weight);
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/e-top-below-k",
        "E(2k-2) a == 0 for theta-even a with wt(a) < k", p.k, ok, witness));
  }
  {
    bool ok = true;
    for (const auto& stratum : enumerate_basis(p, Sector::untwisted(p, 0),
                                               Rational(k - 1), 1)) {
      if (stratum.weight != Rational(k - 1)) {
        continue;
      }
      for (const State& a : stratum.states) {
        ok = ok && apply_mode(p, e_elem, 2 * k - 2, a).is_zero();
      }
    }
    report.checks.push_back(make_record(
        "identities/e-top-at-k-minus-1",
        "E(2k-2) kills the weight k-1 stratum of the theta-even basis", p.k,
        ok));
  }
  {
    const bool ok = virasoro(p, -1, vac).is_zero() &&
                    virasoro(p, 1, alpha_vac).is_zero();
    report.checks.push_back(make_record(
        "identities/lowest-space-virasoro",
        "L(-1)vac == 0 and L(1) a(-1)vac == 0", p.k, ok));
  }
  {
    bool ok = true;
    std::string witness;
    const std::vector<State> targets = {vac, alpha_vac, f_elem};
    for (const State& u : targets) {
      for (long long n = 0; n <= 2 * k; ++n) {
        const State lhs = virasoro(p, -1, apply_mode(p, e_elem, n, u)) -
                          apply_mode(p, e_elem, n, virasoro(p, -1, u));
        State rhs = apply_mode(p, e_elem, n - 1, u);
        rhs *= Rational(-n);
        if (!(lhs == rhs)) {
          ok = false;
          witness = "n = " + std::to_string(n);
        }
      }
    }
    report.checks.push_back(make_record(
        "identities/translation-bracket-with-e",
        "[L(-1), E(n)] == -n E(n-1) on sampled vectors", p.k, ok, witness));
  }
  {
    const State chain = virasoro(
        p, 1,
        apply_mode(p, e_elem, 2 * k - 2, apply_mode(p, e_elem, 0, alpha_vac)));
    State expected = virasoro(p, 1, alpha_vac);
    expected *= Rational(4 * k);
    report.checks.push_back(make_record(
        "identities/l1-through-the-chain",
        "L(1) E(2k-2) E(0) a(-1)vac == 4k L(1) a(-1)vac", p.k,
        chain == expected));
  }
  return report;
}

SuiteReport e_mode_vanishing_suite(const LatticeParams& p,
                                   const Rational& weight_cap) {
  SuiteReport report{"e-mode-vanishing", p.k, {}};
  const State e_elem = make_E(p);
  for (const auto& stratum :
       enumerate_basis(p, Sector::untwisted(p, 0), weight_cap, 1)) {
    for (const State& a : stratum.states) {
      if (a.terms().begin()->first.label != 0) {
        continue;  // only the label-0 part of the theta-even basis
      }
      const long long wt = to_long(stratum.weight);
      bool ok = true;
      std::string witness;
      // Modes beyond k + wt(a) - 1 vanish on weight grounds; test through
      // that boundary with a margin.
      for (long long n = wt; n <= wt + p.k + 1; ++n) {
        if (!apply_mode(p, e_elem, n, a).is_zero()) {
          ok = false;
          witness = "n = " + std::to_string(n);
          break;
        }
      }
      CheckRecord record = make_record(
          "e-vanishing/wt" + to_string(stratum.weight) + "/" +
              to_string(a.terms().begin()->first.parts2.empty()
                            ? Rational(0)
                            : Rational(a.terms().begin()->first.parts2_sum(),
                                       2)),
          "E(n) a == 0 for n >= wt(a), a theta-even with label 0", p.k, ok,
          witness);
      record.caps["weight_cap"] = to_string(weight_cap);
      report.checks.push_back(std::move(record));
    }
  }
  return report;
}

namespace {

std::vector<State> untwisted_sample_pool(const LatticeParams& p,
                                         const Rational& max_weight) {
  std::vector<State> pool;
  for (long long c = 0; c < p.gram(); ++c) {
    for (State& s : enumerate_basis_flat(p, Sector::untwisted(p, c),
                                         max_weight)) {
      pool.push_back(std::move(s));
    }
  }
  return pool;
}

}  // namespace

SuiteReport commutator_suite(const LatticeParams& p, const SampleConfig& cfg) {
  SuiteReport report{"commutators", p.k, {}};
  const std::vector<State> elements =
      enumerate_basis_flat(p, Sector::untwisted(p, 0), cfg.max_weight);
  const std::vector<State> targets = untwisted_sample_pool(p, cfg.max_weight);
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  for (int sample = 0; sample < cfg.samples; ++sample) {
    const State& a = elements[pick(elements.size())];
    const State& b = elements[pick(elements.size())];
    const State& u = targets[pick(targets.size())];
    const long long m = static_cast<long long>(pick(7)) - 3;
    const long long n = static_cast<long long>(pick(7)) - 3;
    const bool ok = check_commutator(p, a, b, m, n, u);
    CheckRecord record = make_record(
        "commutator/sample-" + std::to_string(sample),
        "[a(m),b(n)]u == sum_i C(m,i) (a(i)b)(m+n-i) u", p.k, ok,
        ok ? "" : "m=" + std::to_string(m) + " n=" + std::to_string(n));
    record.caps["max_weight"] = to_string(cfg.max_weight);
    record.caps["seed"] = std::to_string(cfg.seed);
    report.checks.push_back(std::move(record));
  }
  return report;
}

SuiteReport virasoro_suite(const LatticeParams& p, const SampleConfig& cfg) {
  SuiteReport report{"virasoro", p.k, {}};

  // Central charge from L(2)L(-2)vac = (c/2) vac; never assumed.
  const State vac = make_vacuum(p);
  const State half_vac = Rational(1, 2) * vac;
  const State measured = virasoro(p, 2, virasoro(p, -2, vac));
  const Rational central =
      2 * measured.coefficient(vac.terms().begin()->first);
  report.checks.push_back(make_record(
      "virasoro/central-charge", "L(2)L(-2)vac == (c/2) vac with c = 1", p.k,
      measured == half_vac, "c = " + to_string(central)));

  const std::vector<State> untwisted_pool =
      untwisted_sample_pool(p, cfg.max_weight);
  std::vector<State> twisted_pool;
  for (int i = 1; i <= 2; ++i) {
    for (State& s : enumerate_basis_flat(p, Sector::twisted(i),
                                         cfg.max_weight)) {
      twisted_pool.push_back(std::move(s));
    }
  }
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  const int per_pair = std::max(2, cfg.samples / 49);
  for (long long m = -3; m <= 3; ++m) {
    for (long long n = -3; n <= 3; ++n) {
      bool ok = true;
      std::string witness;
      // Alternating pools so every bracket pair sees both sectors.
      for (int t = 0; t < per_pair && ok; ++t) {
        const std::vector<State>& pool =
            (t % 2 == 0) ? untwisted_pool : twisted_pool;
        const State& u = pool[pick(pool.size())];
        State lhs = virasoro(p, m, virasoro(p, n, u)) -
                    virasoro(p, n, virasoro(p, m, u));
        State rhs = virasoro(p, m + n, u);
        rhs *= Rational(m - n);
        if (m + n == 0) {
          State central_term = u;
          central_term *= Rational(m * m * m - m, 12) * central;
          rhs += central_term;
        }
        if (!(lhs == rhs)) {
          ok = false;
          witness = u.sector().is_twisted() ? "twisted sample"
                                            : "untwisted sample";
        }
      }
      CheckRecord record = make_record(
          "virasoro/bracket-m" + std::to_string(m) + "-n" + std::to_string(n),
          "[L(m),L(n)] == (m-n)L(m+n) + ((m^3-m)/12) delta_{m,-n} c", p.k, ok,
          witness);
      record.caps["max_weight"] = to_string(cfg.max_weight);
      report.checks.push_back(std::move(record));
    }
  }
  return report;
}

SuiteReport derivative_suite(const LatticeParams& p, const SampleConfig& cfg) {
  SuiteReport report{"derivative", p.k, {}};
  const std::vector<State> elements =
      enumerate_basis_flat(p, Sector::untwisted(p, 0), cfg.max_weight);
  const std::vector<State> targets = untwisted_sample_pool(p, cfg.max_weight);
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  for (int sample = 0; sample < cfg.samples; ++sample) {
    const State& a = elements[pick(elements.size())];
    const State& s = targets[pick(targets.size())];
    const long long n = static_cast<long long>(pick(7)) - 3;
    const bool ok = check_l_minus1_derivative(p, a, n, s);
    CheckRecord record = make_record(
        "derivative/sample-" + std::to_string(sample),
        "(L(-1)a)(n) s == -n a(n-1) s", p.k, ok,
        ok ? "" : "n = " + std::to_string(n));
    record.caps["max_weight"] = to_string(cfg.max_weight);
    record.caps["seed"] = std::to_string(cfg.seed);
    report.checks.push_back(std::move(record));
  }
  return report;
}

SuiteReport zhu_suite(const LatticeParams& p, const Rational& pair_weight_cap,
                      int module_degree_cap,
                      const Rational& omega_testing_cap) {
  SuiteReport report{"zhu", p.k, {}};
  for (const std::string& name : catalogue_names(p)) {
    const ModuleTruncation m =
        build_catalogue_module(p, name, module_degree_cap);
    if (m.sector.is_twisted()) {
      CheckRecord record = make_record(
          "zhu-skip/" + name,
          "twisted entries carry the reduced oracle; lattice-mode checks "
          "do not apply",
          p.k, true, "skipped");
      report.checks.push_back(std::move(record));
      continue;
    }
    SuiteReport axioms =
        check_module_axioms(p, m, pair_weight_cap, omega_testing_cap);
    for (CheckRecord& record : axioms.checks) {
      report.checks.push_back(std::move(record));
    }
  }

  // Centrality certificates: star(omega, a) - star(a, omega) lies in the
  // truncated O(V) span.
  const State omega = make_virasoro_element(p);
  std::map<long long, OVTruncation> truncations;
  for (const auto& stratum :
       enumerate_basis(p, Sector::untwisted(p, 0), pair_weight_cap, 1)) {
    const long long wt = to_long(stratum.weight);
    auto it = truncations.find(wt + 3);
    if (it == truncations.end()) {
      it = truncations
               .emplace(wt + 3, build_ov_truncation(p, Rational(wt + 3), 1))
               .first;
    }
    bool ok = true;
    for (const State& a : stratum.states) {
      const State x = zhu_star(p, omega, a) - zhu_star(p, a, omega);
      if (ov_membership(x, it->second) != SpanCertificate::certified_true) {
        ok = false;
      }
    }
    CheckRecord record = make_record(
        "zhu-center/wt" + to_string(stratum.weight),
        "star(omega,a) - star(a,omega) in O(V), certified", p.k, ok);
    record.caps["ov_weight_cap"] = to_string(Rational(wt + 3));
    report.checks.push_back(std::move(record));
  }

  // Negative control: the vacuum maps to the unit of the nonzero quotient.
  {
    const OVTruncation trunc = build_ov_truncation(p, Rational(6), 1);
    const bool ok = ov_membership(make_vacuum(p), trunc) ==
                    SpanCertificate::not_certified;
    CheckRecord record = make_record(
        "zhu-unit/vacuum-outside-ov", "vacuum not certified inside O(V)", p.k,
        ok);
    record.caps["ov_weight_cap"] = "6";
    report.checks.push_back(std::move(record));
  }
  return report;
}

namespace {

std::vector<long long> partition_table(int n, bool signed_count, bool odd) {
  // Coin-change style DP; for the signed count each part size contributes
  // the alternating series 1/(1+x^j).
  std::vector<long long> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int j = 1; j <= n; ++j) {
    if (odd && j % 2 == 0) {
      continue;
    }
    for (int t = j; t <= n; ++t) {
      if (signed_count) {
        table[static_cast<std::size_t>(t)] -=
            table[static_cast<std::size_t>(t - j)];
      } else {
        table[static_cast<std::size_t>(t)] +=
            table[static_cast<std::size_t>(t - j)];
      }
    }
  }
  return table;
}

}  // namespace

long long partition_count(int n) {
  if (n < 0) {
    return 0;
  }
  return partition_table(n, false, false)[static_cast<std::size_t>(n)];
}

long long signed_partition_count(int n) {
  if (n < 0) {
    return 0;
  }
  return partition_table(n, true, false)[static_cast<std::size_t>(n)];
}

long long half_odd_partition_count(int doubled_total) {
  if (doubled_total < 0) {
    return 0;
  }
  return partition_table(doubled_total, false,
                         true)[static_cast<std::size_t>(doubled_total)];
}

long long signed_half_odd_partition_count(int doubled_total) {
  if (doubled_total < 0) {
    return 0;
  }
  return partition_table(doubled_total, true,
                         true)[static_cast<std::size_t>(doubled_total)];
}

CharacterReport character_crosscheck(const LatticeParams& p, Sector sector,
                                     std::optional<int> theta_sign,
                                     const Rational& max_weight) {
  CharacterReport report{sector, theta_sign, {}, true};

  // Direct route: honest basis enumeration.
  std::map<Rational, long long> direct;
  for (const auto& stratum :
       enumerate_basis(p, sector, max_weight, theta_sign)) {
    direct[stratum.weight] =
        static_cast<long long>(stratum.states.size());
  }

  // Formula route: (dim +- trace)/2 from integer partition arithmetic.
  std::map<Rational, long long> formula;
  if (sector.is_twisted()) {
    const Rational budget = (max_weight - Rational(1, 16)) * 2;
    if (budget >= 0) {
      const long long max2 = to_long(Rational(floor_rational(budget)));
      for (long long n2 = 0; n2 <= max2; ++n2) {
        const Rational weight = Rational(1, 16) + Rational(n2, 2);
        const long long full =
            half_odd_partition_count(static_cast<int>(n2));
        const long long trace =
            signed_half_odd_partition_count(static_cast<int>(n2));
        long long count = full;
        if (theta_sign) {
          const long long twice = full + *theta_sign * trace;
          if (twice % 2 != 0) {
            throw std::logic_error("character parity failure");
          }
          count = twice / 2;
        }
        if (count != 0) {
          formula[weight] = count;
        }
      }
    }
  } else {
    const int coset = sector.coset();
    std::vector<long long> labels;
    for (long long t = 0;; ++t) {
      const long long r = coset + p.gram() * t;
      if (Rational(r * r, 4LL * p.k) > max_weight) {
        break;
      }
      labels.push_back(r);
    }
    for (long long t = -1;; --t) {
      const long long r = coset + p.gram() * t;
      if (Rational(r * r, 4LL * p.k) > max_weight) {
        break;
      }
      labels.push_back(r);
    }
    std::map<Rational, long long> full;
    for (long long r : labels) {
      const Rational base = Rational(r * r, 4LL * p.k);
      const long long budget =
          to_long(Rational(floor_rational(max_weight - base)));
      for (long long n = 0; n <= budget; ++n) {
        full[base + n] += partition_count(static_cast<int>(n));
      }
    }
    if (!theta_sign) {
      formula = std::move(full);
    } else {
      // Only label-0 monomials are theta-fixed, so the trace lives in the
      // integer weights of coset 0.
      for (const auto& [weight, dim_full] : full) {
        long long trace = 0;
        if (coset == 0 && is_integer(weight)) {
          trace = signed_partition_count(static_cast<int>(to_long(weight)));
        }
        const long long twice = dim_full + *theta_sign * trace;
        if (twice % 2 != 0) {
          throw std::logic_error("character parity failure");
        }
        if (twice != 0) {
          formula[weight] = twice / 2;
        }
      }
    }
  }

  std::set<Rational> weights;
  for (const auto& [w, c] : direct) {
    weights.insert(w);
  }
  for (const auto& [w, c] : formula) {
    weights.insert(w);
  }
  for (const Rational& w : weights) {
    CharacterRow row;
    row.weight = w;
    auto dit = direct.find(w);
    auto fit = formula.find(w);
    row.dim_direct = dit == direct.end() ? 0 : dit->second;
    row.dim_formula = fit == formula.end() ? 0 : fit->second;
    if (row.dim_direct != row.dim_formula) {
      report.consistent = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace voa
