#include "voa/orbifold.hpp"
#include "voa/suites.hpp"

#include <doctest.h>

#include <map>

using namespace voa;

TEST_CASE("catalogue shape") {
  SUBCASE("entry counts are 2k+6") {
    CHECK(catalogue_names(LatticeParams(2)).size() == 10);
    CHECK(catalogue_names(LatticeParams(3)).size() == 12);
    CHECK(catalogue_names(LatticeParams(5)).size() == 16);
  }
  SUBCASE("every lowest stratum is one-dimensional") {
    const LatticeParams p(3);
    for (const ModuleTruncation& m : catalogue(p, 1)) {
      CHECK(m.dim(0) == 1);
    }
  }
  SUBCASE("lowest weight multiset for k = 3") {
    const LatticeParams p(3);
    std::map<Rational, int> multiset;
    for (const ModuleTruncation& m : catalogue(p, 0)) {
      ++multiset[m.lowest_weight];
    }
    CHECK(multiset[Rational(0)] == 1);
    CHECK(multiset[Rational(1)] == 1);
    CHECK(multiset[Rational(1, 12)] == 2);  // cosets 1 and 5
    CHECK(multiset[Rational(1, 3)] == 2);   // cosets 2 and 4
    CHECK(multiset[Rational(3, 4)] == 2);   // both eigenspaces of coset 3
    CHECK(multiset[Rational(1, 16)] == 2);
    CHECK(multiset[Rational(9, 16)] == 2);
  }
  SUBCASE("unknown names are rejected") {
    const LatticeParams p(3);
    CHECK_THROWS_AS(build_catalogue_module(p, "V(r=3)", 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_catalogue_module(p, "bogus", 1),
                    std::invalid_argument);
  }
}

TEST_CASE("lowest weight sets") {
  SUBCASE("k = 3") {
    const auto set = lowest_weight_set(LatticeParams(3));
    const std::vector<Rational> expected = {
        Rational(0),     Rational(1, 16), Rational(1, 12), Rational(1, 3),
        Rational(9, 16), Rational(3, 4),  Rational(1)};
    CHECK(set.distinct_sorted() == expected);
  }
  SUBCASE("k = 2") {
    const auto set = lowest_weight_set(LatticeParams(2));
    const std::vector<Rational> expected = {
        Rational(0),    Rational(1, 16), Rational(1, 8),
        Rational(1, 2), Rational(9, 16), Rational(1)};
    CHECK(set.distinct_sorted() == expected);
    // The r = k entry k/4 is realized by the split self-dual coset.
    bool found = false;
    for (const auto& entry : set.entries) {
      if (entry.weight == Rational(1, 2)) {
        found = true;
        CHECK(entry.realized_by ==
              std::vector<std::string>{"Valpha2plus", "Valpha2minus"});
      }
    }
    CHECK(found);
  }
  SUBCASE("k = 5 carries the dual-coset squares over 20") {
    const auto distinct = lowest_weight_set(LatticeParams(5)).distinct_sorted();
    for (const Rational& expected :
         {Rational(1, 20), Rational(1, 5), Rational(9, 20), Rational(4, 5),
          Rational(5, 4)}) {
      CHECK(std::find(distinct.begin(), distinct.end(), expected) !=
            distinct.end());
    }
  }
}

TEST_CASE("weight gap reports") {
  SUBCASE("k = 3: distinct, only zero has an integer successor") {
    const WeightGapReport report = weight_gap_report(LatticeParams(3));
    CHECK(report.all_distinct);
    CHECK(report.gaps_hold_away_from_zero());
    for (const auto& [lambda, ok] : report.gap_free) {
      if (lambda == 0) {
        CHECK_FALSE(ok);  // 0 + 1 = 1 is again a lowest weight
      } else {
        CHECK(ok);
      }
    }
  }
  SUBCASE("k = 7 passes in full") {
    const WeightGapReport report = weight_gap_report(LatticeParams(7));
    CHECK(report.all_distinct);
    CHECK(report.gaps_hold_away_from_zero());
  }
  SUBCASE("k = 4 fails") {
    const WeightGapReport report = weight_gap_report(LatticeParams(4));
    const bool failed =
        !report.all_distinct || !report.gaps_hold_away_from_zero();
    CHECK(failed);
  }
  SUBCASE("k below 2 is rejected") {
    CHECK_THROWS_AS(weight_gap_report(LatticeParams(1)),
                    std::invalid_argument);
  }
}

TEST_CASE("composite gap witnesses") {
  SUBCASE("spec'd instances") {
    const CompositeGapWitness w4 = composite_gap_witness(4);
    CHECK(w4.r == 0);
    CHECK(w4.s == 4);
    CHECK(w4.difference == 1);
    const CompositeGapWitness w6 = composite_gap_witness(6);
    CHECK(w6.r == 1);
    CHECK(w6.s == 5);
    CHECK(w6.difference == 1);
    const CompositeGapWitness w9 = composite_gap_witness(9);
    CHECK(w9.r == 0);
    CHECK(w9.s == 6);
    CHECK(w9.difference == 1);
  }
  SUBCASE("every composite k through 24 yields an integer difference") {
    for (int k = 4; k <= 24; ++k) {
      if (is_prime(k)) {
        CHECK_THROWS_AS(composite_gap_witness(k), std::invalid_argument);
        continue;
      }
      const CompositeGapWitness w = composite_gap_witness(k);
      CHECK(w.r >= 0);
      CHECK(w.r < w.s);
      CHECK(w.s <= k);
      CHECK((w.s * w.s - w.r * w.r) == 4LL * k * w.difference);
      CHECK(w.difference >= 1);
    }
  }
}

namespace {

std::map<Rational, DecompositionFamily> families_by_weight(
    const DecompositionResult& result) {
  std::map<Rational, DecompositionFamily> out;
  for (const DecompositionFamily& family : result.families) {
    out.emplace(family.lowest, family);
  }
  return out;
}

}  // namespace

TEST_CASE("decomposition of direct sums") {
  const LatticeParams p(3);
  SUBCASE("even plus odd coset-0 modules") {
    const DirectSumModule sum(
        p, {{build_catalogue_module(p, "Vplus", 4), 1},
            {build_catalogue_module(p, "Vminus", 4), 1}});
    const DecompositionResult result =
        decompose(sum, default_candidates(p), 30, 7);
    CHECK(result.residual_empty());
    CHECK(result.stable());
    const auto families = families_by_weight(result);
    const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 4);
    const ModuleTruncation vminus = build_catalogue_module(p, "Vminus", 4);
    for (int d = 0; d <= 4; ++d) {
      CHECK(families.at(Rational(0)).dims[d] == vplus.dim(d));
      CHECK(families.at(Rational(1)).dims[d] == vminus.dim(d));
    }
    CHECK(families.at(Rational(1, 16)).total_dim() == 0);
  }
  SUBCASE("multiplicity doubles the dimensions") {
    const DirectSumModule sum(
        p, {{build_catalogue_module(p, "Vplus", 4), 2}});
    const DecompositionResult result =
        decompose(sum, default_candidates(p), 20, 3);
    CHECK(result.residual_empty());
    const auto families = families_by_weight(result);
    const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 4);
    for (int d = 0; d <= 4; ++d) {
      CHECK(families.at(Rational(0)).dims[d] == 2 * vplus.dim(d));
    }
  }
  SUBCASE("mixed gradings interleave in half steps") {
    const DirectSumModule sum(
        p, {{build_catalogue_module(p, "V(r=1)", 3), 1},
            {build_catalogue_module(p, "T1plus", 6), 1}});
    CHECK(sum.T() == 2);
    const DecompositionResult result =
        decompose(sum, default_candidates(p), 30, 11);
    CHECK(result.residual_empty());
    CHECK(result.stable());
    const auto families = families_by_weight(result);
    const ModuleTruncation coset = build_catalogue_module(p, "V(r=1)", 3);
    const ModuleTruncation twisted = build_catalogue_module(p, "T1plus", 6);
    for (int d = 0; d <= result.max_degree; ++d) {
      const int expected_coset = (d % 2 == 0) ? coset.dim(d / 2) : 0;
      CHECK(families.at(Rational(1, 12)).dims[d] == expected_coset);
      CHECK(families.at(Rational(1, 16)).dims[d] == twisted.dim(d));
    }
  }
  SUBCASE("synthetic Jordan block lands in one family") {
    const DirectSumModule sum(
        p, {{build_catalogue_module(p, "Vplus", 4), 2}},
        JordanInsertion{2, Rational(2)});
    const RationalMatrix l0 = sum.l0_matrix(2);
    bool has_off_diagonal = false;
    for (std::size_t i = 0; i < l0.rows(); ++i) {
      for (std::size_t j = 0; j < l0.cols(); ++j) {
        if (i != j && l0.at(i, j) != 0) {
          has_off_diagonal = true;
        }
      }
    }
    CHECK(has_off_diagonal);
    const DecompositionResult result =
        decompose(sum, default_candidates(p), 20, 5);
    CHECK(result.residual_empty());
    const auto families = families_by_weight(result);
    const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 4);
    CHECK(families.at(Rational(0)).dims[2] == 2 * vplus.dim(2));
  }
  SUBCASE("missing candidates surface as residual") {
    const DirectSumModule sum(
        p, {{build_catalogue_module(p, "Vminus", 3), 1}});
    const DecompositionResult result =
        decompose(sum, {Rational(0)}, 0, 1);
    CHECK_FALSE(result.residual_empty());
  }
}

TEST_CASE("submodule generation") {
  const LatticeParams p(3);
  SUBCASE("the vacuum generates the whole even truncation") {
    const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 4);
    const DirectSumModule sum = as_direct_sum(vplus);
    const GradedSubspace space =
        generate_submodule(sum, 0, {Rational(1)}, Rational(5));
    for (int d = 0; d <= 4; ++d) {
      CHECK(space.degree_vectors[d].size() ==
            static_cast<std::size_t>(vplus.dim(d)));
    }
  }
  SUBCASE("a single summand seed stays inside its copy") {
    const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 3);
    const DirectSumModule sum(p, {{vplus, 2}});
    // Seed (vac, 0): degree-0 coordinates are (1, 0).
    const GradedSubspace space =
        generate_submodule(sum, 0, {Rational(1), Rational(0)}, Rational(5));
    for (int d = 0; d <= 3; ++d) {
      CHECK(space.degree_vectors[d].size() ==
            static_cast<std::size_t>(vplus.dim(d)));
    }
    // Everything generated lies in the first copy: second block zero.
    for (int d = 0; d <= 3; ++d) {
      for (const auto& vec : space.degree_vectors[d]) {
        for (std::size_t i = vec.size() / 2; i < vec.size(); ++i) {
          CHECK(vec[i] == 0);
        }
      }
    }
  }
  SUBCASE("the current state generates the whole odd truncation") {
    const ModuleTruncation vminus = build_catalogue_module(p, "Vminus", 4);
    const DirectSumModule sum = as_direct_sum(vminus);
    const GradedSubspace space =
        generate_submodule(sum, 0, {Rational(1)}, Rational(5));
    for (int d = 0; d <= 4; ++d) {
      CHECK(space.degree_vectors[d].size() ==
            static_cast<std::size_t>(vminus.dim(d)));
    }
  }
}

TEST_CASE("grading bookkeeping on catalogue oracles") {
  const LatticeParams p(3);
  // a(n) M_m sits in M_{wt(a)+m-n-1}; in shifted-degree terms the image of
  // degree m under a~(j) has degree m - jT.
  for (const std::string& name : {"Vplus", "V(r=1)", "T1plus"}) {
    const ModuleTruncation m = build_catalogue_module(p, name, 4);
    const DirectSumModule sum = as_direct_sum(m);
    std::vector<State> actors = {make_virasoro_element(p)};
    if (!m.sector.is_twisted()) {
      actors.push_back(make_E(p));  // theta-even, so it acts within the module
    }
    for (int degree = 0; degree <= sum.max_degree(); ++degree) {
      const int nd = sum.dim(degree);
      if (nd == 0) {
        continue;
      }
      std::vector<Rational> unit(static_cast<std::size_t>(nd), Rational(0));
      unit[0] = 1;
      for (const State& a : actors) {
        for (long long j = -1; j <= 1; ++j) {
          if (j == 0) {
            continue;
          }
          const auto image = sum.apply_shifted(
              a, j, degree, unit,
              DirectSumModule::UnsupportedPolicy::raise);
          if (!image.overflow && !image.coords.empty()) {
            CHECK(image.degree == degree - static_cast<int>(j) * sum.T());
          }
        }
      }
    }
  }
}

TEST_CASE("identity suites pass for small k") {
  for (int k : {2, 3}) {
    const SuiteReport report = identity_suite(LatticeParams(k));
    CHECK(report.all_passed());
  }
  CHECK_THROWS_AS(identity_suite(LatticeParams(1)), std::invalid_argument);
}

TEST_CASE("character cross-checks") {
  const LatticeParams p(3);
  SUBCASE("even and odd coset-0 counts") {
    for (int sign : {1, -1}) {
      const CharacterReport report = character_crosscheck(
          p, Sector::untwisted(p, 0), sign, Rational(6));
      CHECK(report.consistent);
    }
  }
  SUBCASE("the weight-1 even space is empty for k >= 2") {
    const CharacterReport report = character_crosscheck(
        p, Sector::untwisted(p, 0), 1, Rational(4));
    for (const CharacterRow& row : report.rows) {
      if (row.weight == 1) {
        CHECK(row.dim_direct == 0);
      }
    }
  }
  SUBCASE("twisted sectors in both signs") {
    for (int i : {1, 2}) {
      for (int sign : {1, -1}) {
        const CharacterReport report = character_crosscheck(
            p, Sector::twisted(i), sign, Rational(5));
        CHECK(report.consistent);
      }
    }
  }
  SUBCASE("unprojected dual coset") {
    const CharacterReport report = character_crosscheck(
        p, Sector::untwisted(p, 1), std::nullopt, Rational(5));
    CHECK(report.consistent);
  }
}

TEST_CASE("partition counting oracles") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(12) == 77);
  CHECK(signed_partition_count(2) == 0);   // {2} odd length, {1,1} even
  CHECK(signed_partition_count(3) == -1);  // {3}, {2,1}, {1,1,1}
  CHECK(half_odd_partition_count(2) == 1);  // 1 = 1/2 + 1/2
  CHECK(half_odd_partition_count(6) == 4);  // 3 = 3/2+3/2 = 5/2+1/2 = ...
  CHECK(signed_half_odd_partition_count(1) == -1);
}

TEST_CASE("catalogue smoke tests away from the default k") {
  SUBCASE("k = 1 builds all eight entries") {
    const LatticeParams p(1);
    const auto modules = catalogue(p, 2);
    CHECK(modules.size() == 8);
    const auto set = lowest_weight_set(p);
    const std::vector<Rational> expected = {
        Rational(0), Rational(1, 16), Rational(1, 4), Rational(9, 16),
        Rational(1)};
    CHECK(set.distinct_sorted() == expected);
  }
  SUBCASE("k = 5 direct sum decomposes cleanly") {
    const LatticeParams p(5);
    const DirectSumModule sum(
        p, {{build_catalogue_module(p, "V(r=2)", 3), 1},
            {build_catalogue_module(p, "T2minus", 6), 1}});
    const DecompositionResult result =
        decompose(sum, default_candidates(p), 20, 9);
    CHECK(result.residual_empty());
    CHECK(result.stable());
  }
}

TEST_CASE("any nonzero vector generates the simple truncation") {
  // Seeded at the conformal vector in degree 2 rather than the vacuum.
  const LatticeParams p(3);
  const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 4);
  const DirectSumModule sum = as_direct_sum(vplus);
  const std::vector<Rational> omega_coords =
      module_coordinates(vplus, 2, make_virasoro_element(p));
  const GradedSubspace space =
      generate_submodule(sum, 2, omega_coords, Rational(5));
  for (int d = 0; d <= 4; ++d) {
    CHECK(space.degree_vectors[d].size() ==
          static_cast<std::size_t>(vplus.dim(d)));
  }
}

TEST_CASE("the two integer families generate complementary submodules") {
  // Decompose a sum whose lowest weights are 0 and 1, then grow a
  // submodule from each family's lowest vectors: together they exhaust
  // the truncation degree by degree.
  const LatticeParams p(3);
  const ModuleTruncation vplus = build_catalogue_module(p, "Vplus", 4);
  const ModuleTruncation vminus = build_catalogue_module(p, "Vminus", 4);
  const DirectSumModule sum(p, {{vplus, 1}, {vminus, 1}});
  const DecompositionResult result =
      decompose(sum, default_candidates(p), 10, 2);
  REQUIRE(result.residual_empty());

  std::vector<int> combined(static_cast<std::size_t>(sum.max_degree()) + 1,
                            0);
  for (const DecompositionFamily& family : result.families) {
    if (family.total_dim() == 0) {
      continue;
    }
    REQUIRE(!family.bases[0].empty());
    for (const auto& seed : family.bases[0]) {
      const GradedSubspace generated =
          generate_submodule(sum, 0, seed, Rational(5));
      const std::vector<int> dims = generated.dims();
      const ModuleTruncation& expected =
          family.lowest == 0 ? vplus : vminus;
      for (int d = 0; d <= sum.max_degree(); ++d) {
        CHECK(dims[static_cast<std::size_t>(d)] == expected.dim(d));
        combined[static_cast<std::size_t>(d)] +=
            dims[static_cast<std::size_t>(d)];
      }
    }
  }
  for (int d = 0; d <= sum.max_degree(); ++d) {
    CHECK(combined[static_cast<std::size_t>(d)] == sum.dim(d));
  }
}
