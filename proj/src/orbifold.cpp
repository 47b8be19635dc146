#include "voa/orbifold.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace voa {

std::vector<Rational> LowestWeightSet::distinct_sorted() const {
  std::set<Rational> values;
  for (const auto& entry : entries) {
    values.insert(entry.weight);
  }
  return {values.begin(), values.end()};
}

LowestWeightSet lowest_weight_set(const LatticeParams& p) {
  // Degree-0 truncations are enough to read the lowest weights off the
  // gradings.
  std::map<std::string, Rational> lowest;
  for (const std::string& name : catalogue_names(p)) {
    lowest.emplace(name, build_catalogue_module(p, name, 0).lowest_weight);
  }

  LowestWeightSet set;
  set.k = p.k;
  set.entries.push_back({lowest.at("Vplus"), {"Vplus"}});
  set.entries.push_back({lowest.at("Vminus"), {"Vminus"}});
  for (long long r = 1; r < p.k; ++r) {
    const std::string name = "V(r=" + std::to_string(r) + ")";
    const std::string mirror =
        "V(r=" + std::to_string(p.gram() - r) + ")";
    set.entries.push_back({lowest.at(name), {name, mirror}});
  }
  // r = k realizes the k/4 entry through the split coset-k modules.
  set.entries.push_back(
      {lowest.at("Valpha2plus"), {"Valpha2plus", "Valpha2minus"}});
  set.entries.push_back({lowest.at("T1plus"), {"T1plus", "T2plus"}});
  set.entries.push_back({lowest.at("T1minus"), {"T1minus", "T2minus"}});
  return set;
}

bool WeightGapReport::gaps_hold_away_from_zero() const {
  for (const auto& [weight, ok] : gap_free) {
    if (weight != 0 && !ok) {
      return false;
    }
  }
  return true;
}

WeightGapReport weight_gap_report(const LatticeParams& p) {
  if (p.k < 2) {
    throw std::invalid_argument("weight gap report needs k >= 2");
  }
  const LowestWeightSet set = lowest_weight_set(p);
  WeightGapReport report;
  report.k = p.k;
  // Distinctness of the k+4 multiset entries.
  std::set<Rational> values;
  std::size_t count = 0;
  for (const auto& entry : set.entries) {
    values.insert(entry.weight);
    ++count;
  }
  report.all_distinct = values.size() == count;
  for (const Rational& lambda : values) {
    bool ok = true;
    for (const Rational& mu : values) {
      const Rational diff = mu - lambda;
      if (diff > 0 && is_integer(diff)) {
        ok = false;
        break;
      }
    }
    report.gap_free.emplace_back(lambda, ok);
  }
  return report;
}

bool is_prime(int n) {
  if (n < 2) {
    return false;
  }
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

CompositeGapWitness composite_gap_witness(int k) {
  if (k < 4 || is_prime(k)) {
    throw std::invalid_argument(
        "composite gap witness needs a composite k >= 4");
  }
  int q = 2;
  while (k % q != 0) {
    ++q;
  }
  int rest = k / q;
  int p = 2;
  while (rest % p != 0) {
    ++p;
  }
  const long long n = k / (static_cast<long long>(p) * q);
  CompositeGapWitness witness{n * (p - q), n * (p + q), n};
  // (s^2 - r^2)/4k = n by construction; keep the engine honest anyway.
  if ((witness.s * witness.s - witness.r * witness.r) != 4LL * k * n) {
    throw std::logic_error("composite witness arithmetic failure");
  }
  return witness;
}

int DecompositionFamily::total_dim() const {
  int total = 0;
  for (int d : dims) {
    total += d;
  }
  return total;
}

std::vector<Rational> default_candidates(const LatticeParams& p) {
  return lowest_weight_set(p).distinct_sorted();
}

DecompositionResult decompose(const DirectSumModule& m,
                              const std::vector<Rational>& candidates,
                              int stability_samples, std::uint64_t seed) {
  DecompositionResult result;
  result.T = m.T();
  result.max_degree = m.max_degree();

  std::vector<Rational> distinct;
  for (const Rational& c : candidates) {
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) {
      distinct.push_back(c);
    }
  }
  for (const Rational& lowest : distinct) {
    DecompositionFamily family;
    family.lowest = lowest;
    family.dims.assign(static_cast<std::size_t>(m.max_degree()) + 1, 0);
    family.bases.assign(static_cast<std::size_t>(m.max_degree()) + 1, {});
    result.families.push_back(std::move(family));
  }

  for (int degree = 0; degree <= m.max_degree(); ++degree) {
    const int nd = m.dim(degree);
    if (nd == 0) {
      continue;
    }
    const RationalMatrix l0 = m.l0_matrix(degree);
    std::vector<Rational> shifted;
    shifted.reserve(distinct.size());
    for (const Rational& lowest : distinct) {
      shifted.push_back(lowest + Rational(degree, m.T()));
    }
    GeneralizedEigenspaces spaces = generalized_eigenspaces(l0, shifted);
    for (std::size_t i = 0; i < spaces.spaces.size(); ++i) {
      auto& [lambda, basis] = spaces.spaces[i];
      result.families[i].dims[static_cast<std::size_t>(degree)] =
          static_cast<int>(basis.size());
      result.families[i].bases[static_cast<std::size_t>(degree)] =
          std::move(basis);
    }
    if (!spaces.residual.empty()) {
      result.residual.emplace_back(degree, std::move(spaces.residual));
    }
  }

  // Mode-stability spot checks: a~(j) must map the lambda family into the
  // lambda family at the shifted degree.
  const LatticeParams& p = m.lat();
  const std::vector<State> spanning =
      enumerate_basis_flat(p, Sector::untwisted(p, 0), Rational(4), 1);
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  const State omega = make_virasoro_element(p);
  for (int sample = 0; sample < stability_samples; ++sample) {
    ++result.stability_samples;
    const std::size_t fi = pick(result.families.size());
    DecompositionFamily& family = result.families[fi];
    if (family.total_dim() == 0) {
      ++result.stability_skipped;
      continue;
    }
    int degree = -1;
    do {
      degree = static_cast<int>(pick(family.dims.size()));
    } while (family.dims[static_cast<std::size_t>(degree)] == 0);
    const auto& basis = family.bases[static_cast<std::size_t>(degree)];
    const std::vector<Rational>& vec = basis[pick(basis.size())];
    const long long j = static_cast<long long>(pick(5)) - 2;
    if (j == 0 || degree - j * m.T() < 0 ||
        degree - j * m.T() > m.max_degree()) {
      ++result.stability_skipped;
      continue;
    }
    const State* a = &spanning[pick(spanning.size())];
    DirectSumModule::ModeImage image;
    try {
      image = m.apply_shifted(*a, j, degree, vec,
                              DirectSumModule::UnsupportedPolicy::raise);
    } catch (const unsupported_operation&) {
      // Twisted blocks admit only the Virasoro family.
      a = &omega;
      image = m.apply_shifted(*a, j, degree, vec,
                              DirectSumModule::UnsupportedPolicy::raise);
    }
    if (image.coords.empty()) {
      continue;
    }
    const auto& target =
        family.bases[static_cast<std::size_t>(image.degree)];
    if (!in_span(image.coords, target)) {
      result.stability_failures.push_back(
          "family " + to_string(family.lowest) + " degree " +
          std::to_string(degree) + " mode shift " + std::to_string(j));
    }
  }
  return result;
}

std::vector<int> GradedSubspace::dims() const {
  std::vector<int> out;
  out.reserve(degree_vectors.size());
  for (const auto& vectors : degree_vectors) {
    out.push_back(static_cast<int>(vectors.size()));
  }
  return out;
}

int GradedSubspace::total_dim() const {
  int total = 0;
  for (const auto& vectors : degree_vectors) {
    total += static_cast<int>(vectors.size());
  }
  return total;
}

GradedSubspace generate_submodule(const DirectSumModule& m, int seed_degree,
                                  const std::vector<Rational>& seed_coords,
                                  const Rational& spanning_weight_cap) {
  const LatticeParams& p = m.lat();
  GradedSubspace space;
  space.degree_vectors.assign(static_cast<std::size_t>(m.max_degree()) + 1,
                              {});
  std::vector<std::pair<int, std::vector<Rational>>> worklist;

  auto try_insert = [&space](int degree, const std::vector<Rational>& vec) {
    auto& bucket = space.degree_vectors[static_cast<std::size_t>(degree)];
    if (in_span(vec, bucket)) {
      return false;
    }
    bucket.push_back(vec);
    return true;
  };

  if (try_insert(seed_degree, seed_coords)) {
    worklist.emplace_back(seed_degree, seed_coords);
  }

  const std::vector<State> spanning = enumerate_basis_flat(
      p, Sector::untwisted(p, 0), spanning_weight_cap, 1);

  while (!worklist.empty()) {
    const auto [degree, vec] = worklist.back();
    worklist.pop_back();
    for (const State& a : spanning) {
      const auto weight = homogeneous_weight(p, a);
      if (!weight || *weight == 0) {
        continue;  // the vacuum mode is the identity
      }
      for (long long j = (degree - m.max_degree()) / m.T() - 1;
           j * m.T() <= degree; ++j) {
        const int target = degree - static_cast<int>(j) * m.T();
        if (target < 0 || target > m.max_degree()) {
          continue;
        }
        DirectSumModule::ModeImage image;
        try {
          image = m.apply_shifted(a, j, degree, vec,
                                  DirectSumModule::UnsupportedPolicy::raise);
        } catch (const unsupported_operation&) {
          continue;  // reduced twisted oracle: skip this operator
        }
        if (image.overflow || image.coords.empty()) {
          continue;
        }
        if (try_insert(image.degree, image.coords)) {
          worklist.emplace_back(image.degree, image.coords);
        }
      }
    }
  }
  return space;
}

}  // namespace voa
