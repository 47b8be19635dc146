#include "voa/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace voa {

namespace {

// Partitions of n with parts <= max_part, descending.
void collect_partitions(int n, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    collect_partitions(n - part, part, current, out);
    current.pop_back();
  }
}

void collect_odd_partitions(int n2, int max_part2, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
  if (n2 == 0) {
    out.push_back(current);
    return;
  }
  int part = std::min(n2, max_part2);
  if (part % 2 == 0) {
    --part;
  }
  for (; part >= 1; part -= 2) {
    current.push_back(part);
    collect_odd_partitions(n2 - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<std::vector<int>>& partitions_of(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    if (n < 0) {
      throw std::invalid_argument("partitions_of: negative total");
    }
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    collect_partitions(n, n, current, result);
    it = cache.emplace(n, std::move(result)).first;
  }
  return it->second;
}

const std::vector<std::vector<int>>& odd_partitions2_of(int n2) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n2);
  if (it == cache.end()) {
    if (n2 < 0) {
      throw std::invalid_argument("odd_partitions2_of: negative total");
    }
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    collect_odd_partitions(n2, n2, current, result);
    it = cache.emplace(n2, std::move(result)).first;
  }
  return it->second;
}

namespace {

// Doubles the plain-partition depths so they can be used as parts2.
std::vector<int> doubled(const std::vector<int>& parts) {
  std::vector<int> out(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out[i] = 2 * parts[i];
  }
  return out;
}

void add_to_stratum(std::map<Rational, std::vector<State>>& strata,
                    const Rational& weight, State state) {
  strata[weight].push_back(std::move(state));
}

}  // namespace

std::vector<WeightStratum> enumerate_basis(const LatticeParams& p,
                                           Sector sector,
                                           const Rational& max_weight,
                                           std::optional<int> theta_sign) {
  if (max_weight < 0) {
    throw std::invalid_argument("enumerate_basis: negative weight cap");
  }
  if (theta_sign && *theta_sign != 1 && *theta_sign != -1) {
    throw std::invalid_argument("theta sign must be +1 or -1");
  }
  if (theta_sign && !sector.theta_stable(p)) {
    throw std::invalid_argument(
        "theta eigenprojection requested on a coset not preserved by theta");
  }

  std::map<Rational, std::vector<State>> strata;

  if (sector.is_twisted()) {
    // Weights 1/16 + (doubled sum)/2.
    const Rational budget = (max_weight - Rational(1, 16)) * 2;
    if (budget >= 0) {
      const long long max2 = to_long(Rational(floor_rational(budget)));
      for (long long n2 = 0; n2 <= max2; ++n2) {
        for (const auto& parts2 : odd_partitions2_of(static_cast<int>(n2))) {
          if (theta_sign) {
            const int parity = (parts2.size() % 2 == 0) ? 1 : -1;
            if (parity != *theta_sign) {
              continue;
            }
          }
          FockMonomial m{parts2, 0};
          const Rational w = monomial_weight(p, m, true);
          State s(sector);
          s.add_term(m, 1);
          add_to_stratum(strata, w, std::move(s));
        }
      }
    }
  } else {
    const long long period = p.gram();
    const int coset = sector.coset();
    // Labels r = coset + period*t with r^2/4k <= max_weight.
    std::vector<long long> labels;
    for (long long t = 0;; ++t) {
      const long long r = coset + period * t;
      if (Rational(r * r, 4LL * p.k) > max_weight) {
        break;
      }
      labels.push_back(r);
    }
    for (long long t = -1;; --t) {
      const long long r = coset + period * t;
      if (Rational(r * r, 4LL * p.k) > max_weight) {
        break;
      }
      labels.push_back(r);
    }
    for (long long r : labels) {
      if (theta_sign && r < 0) {
        continue;  // r < 0 is folded into its positive partner below
      }
      const Rational base = Rational(r * r, 4LL * p.k);
      const long long part_budget =
          to_long(Rational(floor_rational(max_weight - base)));
      for (long long n = 0; n <= part_budget; ++n) {
        for (const auto& parts : partitions_of(static_cast<int>(n))) {
          FockMonomial m{doubled(parts), r};
          const Rational w = monomial_weight(p, m, false);
          State s(sector);
          if (!theta_sign) {
            s.add_term(m, 1);
          } else if (r == 0) {
            const int parity = (parts.size() % 2 == 0) ? 1 : -1;
            if (parity != *theta_sign) {
              continue;
            }
            s.add_term(m, 1);
          } else {
            // Pair with the theta image at label -r.
            FockMonomial partner = m;
            partner.label = -r;
            const int parity = (parts.size() % 2 == 0) ? 1 : -1;
            s.add_term(m, 1);
            s.add_term(partner, Rational(*theta_sign * parity));
          }
          add_to_stratum(strata, w, std::move(s));
        }
      }
    }
  }

  std::vector<WeightStratum> result;
  result.reserve(strata.size());
  for (auto& [weight, states] : strata) {
    std::sort(states.begin(), states.end(),
              [](const State& a, const State& b) {
                return a.terms().begin()->first < b.terms().begin()->first;
              });
    result.push_back(WeightStratum{weight, std::move(states)});
  }
  return result;
}

std::vector<State> enumerate_basis_flat(const LatticeParams& p, Sector sector,
                                        const Rational& max_weight,
                                        std::optional<int> theta_sign) {
  std::vector<State> out;
  for (auto& stratum : enumerate_basis(p, sector, max_weight, theta_sign)) {
    for (auto& state : stratum.states) {
      out.push_back(std::move(state));
    }
  }
  return out;
}

}  // namespace voa
