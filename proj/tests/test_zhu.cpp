#include "voa/zhu.hpp"

#include <doctest.h>

using namespace voa;

TEST_CASE("circle product basics") {
  const LatticeParams p(3);
  const State vac = make_vacuum(p);
  const State omega = make_virasoro_element(p);
  SUBCASE("vacuum circle b vanishes: the identity field has one mode") {
    const std::vector<State> samples = {
        make_alpha_vacuum(p),
        make_E(p),
        make_monomial_state(p, Sector::untwisted(p, 0), {4, 2}, 0),
    };
    for (const State& b : samples) {
      CHECK(zhu_circ(p, vac, b).is_zero());
    }
  }
  SUBCASE("creation against the vacuum recovers the translation") {
    // a(-2)vac = L(-1)a, the i = 0 term of a circle vac.
    const std::vector<State> samples = {
        make_alpha_vacuum(p),
        make_lattice_state(p, p.gram()),
        omega,
    };
    for (const State& a : samples) {
      CHECK(apply_mode(p, a, -2, vac) == virasoro(p, -1, a));
    }
  }
  SUBCASE("omega circle vacuum by direct mode evaluation") {
    const State expected =
        virasoro(p, -3, vac) + Rational(2) * virasoro(p, -2, vac);
    CHECK(zhu_circ(p, omega, vac) == expected);
  }
  SUBCASE("weight support of E circle F tops at 2k+1") {
    const State circ = zhu_circ(p, make_E(p), make_F(p));
    const auto components = weight_components(p, circ);
    REQUIRE(!components.empty());
    CHECK(components.rbegin()->first == Rational(2 * p.k + 1));
  }
}

TEST_CASE("star product basics") {
  const LatticeParams p(3);
  const State vac = make_vacuum(p);
  const State omega = make_virasoro_element(p);
  SUBCASE("vacuum is a left unit") {
    const std::vector<State> samples = {
        vac,
        make_alpha_vacuum(p),
        make_F(p),
    };
    for (const State& b : samples) {
      CHECK(zhu_star(p, vac, b) == b);
    }
  }
  SUBCASE("omega star vacuum returns omega") {
    CHECK(zhu_star(p, omega, vac) == omega);
  }
}

TEST_CASE("lowest-weight subspaces of catalogue truncations") {
  const LatticeParams p(3);
  SUBCASE("even coset-0 module has only the vacuum") {
    const ModuleTruncation m = build_catalogue_module(p, "Vplus", 4);
    const OmegaSubspace omega = omega_subspace(as_direct_sum(m), Rational(6));
    CHECK(omega.total_dim() == 1);
    REQUIRE(omega.degree_vectors[0].size() == 1);
    CHECK(module_state(m, 0, omega.degree_vectors[0][0]) == make_vacuum(p));
  }
  SUBCASE("odd coset-0 module keeps only the current state") {
    const ModuleTruncation m = build_catalogue_module(p, "Vminus", 4);
    const OmegaSubspace omega = omega_subspace(as_direct_sum(m), Rational(6));
    CHECK(omega.total_dim() == 1);
    REQUIRE(omega.degree_vectors[0].size() == 1);
    CHECK(module_state(m, 0, omega.degree_vectors[0][0]) ==
          make_alpha_vacuum(p));
  }
  SUBCASE("additivity under direct sums") {
    const ModuleTruncation m = build_catalogue_module(p, "Vplus", 3);
    const DirectSumModule sum(p, {{m, 2}});
    CHECK(omega_subspace(sum, Rational(6)).total_dim() == 2);
  }
  SUBCASE("testing cap below the conformal weight is rejected") {
    const ModuleTruncation m = build_catalogue_module(p, "Vplus", 2);
    CHECK_THROWS_AS(omega_subspace(as_direct_sum(m), Rational(1)),
                    std::invalid_argument);
  }
}

TEST_CASE("membership certificates for the circle-product span") {
  const LatticeParams p(3);
  const OVTruncation trunc = build_ov_truncation(p, Rational(6), 1);
  SUBCASE("zero is certified") {
    CHECK(ov_membership(State(Sector::untwisted(p, 0)), trunc) ==
          SpanCertificate::certified_true);
  }
  SUBCASE("the vacuum is not certified") {
    CHECK(ov_membership(make_vacuum(p), trunc) ==
          SpanCertificate::not_certified);
  }
  SUBCASE("star commutators with omega are certified") {
    const State omega = make_virasoro_element(p);
    for (const State& a : enumerate_basis_flat(p, Sector::untwisted(p, 0),
                                               Rational(3), 1)) {
      const State x = zhu_star(p, omega, a) - zhu_star(p, a, omega);
      const auto wt = homogeneous_weight(p, a);
      const OVTruncation local =
          build_ov_truncation(p, *wt + 3, 1);
      CHECK(ov_membership(x, local) == SpanCertificate::certified_true);
    }
  }
  SUBCASE("certificates survive enlarging the truncation") {
    const State omega = make_virasoro_element(p);
    const State a = make_E(p);
    const State x = zhu_star(p, omega, a) - zhu_star(p, a, omega);
    const OVTruncation small = build_ov_truncation(p, Rational(6), 1);
    const OVTruncation large = build_ov_truncation(p, Rational(7), 1);
    CHECK(ov_membership(x, small) == SpanCertificate::certified_true);
    CHECK(ov_membership(x, large) == SpanCertificate::certified_true);
  }
  SUBCASE("support beyond the cap is rejected") {
    const OVTruncation tiny = build_ov_truncation(p, Rational(2), 1);
    CHECK_THROWS_AS(ov_membership(zhu_circ(p, make_E(p), make_F(p)), tiny),
                    std::invalid_argument);
  }
}

TEST_CASE("module axiom reports") {
  const LatticeParams p(3);
  SUBCASE("odd coset-0 module") {
    const ModuleTruncation m = build_catalogue_module(p, "Vminus", 3);
    const SuiteReport report =
        check_module_axioms(p, m, Rational(3), Rational(4));
    CHECK(report.all_passed());
  }
  SUBCASE("first dual coset has scalar 1/12") {
    const ModuleTruncation m = build_catalogue_module(p, "V(r=1)", 3);
    const SuiteReport report =
        check_module_axioms(p, m, Rational(3), Rational(4));
    CHECK(report.all_passed());
    CHECK(m.lowest_weight == Rational(1, 12));
  }
  SUBCASE("circle products act by zero on the lowest space") {
    const State e_elem = make_E(p);
    const State circ = zhu_circ(p, e_elem, e_elem);
    CHECK(zero_mode(p, circ, make_alpha_vacuum(p)).is_zero());
  }
  SUBCASE("zero modes act on the vacuum only through weight zero") {
    for (const State& a : enumerate_basis_flat(p, Sector::untwisted(p, 0),
                                               Rational(4), 1)) {
      const auto wt = homogeneous_weight(p, a);
      if (*wt == 0) {
        continue;
      }
      CHECK(zero_mode(p, a, make_vacuum(p)).is_zero());
    }
  }
}

TEST_CASE("product weight supports") {
  // For homogeneous a, b the circle product tops out at wt(a)+wt(b)+1 with
  // the creation term a(-2)b, and the star product at wt(a)+wt(b).
  const LatticeParams p(3);
  const std::vector<State> basis =
      enumerate_basis_flat(p, Sector::untwisted(p, 0), Rational(3), 1);
  for (const State& a : basis) {
    for (const State& b : basis) {
      const Rational wa = *homogeneous_weight(p, a);
      const Rational wb = *homogeneous_weight(p, b);
      const State circ = zhu_circ(p, a, b);
      if (!circ.is_zero()) {
        const auto components = weight_components(p, circ);
        CHECK(components.rbegin()->first <= wa + wb + 1);
        const State top = apply_mode(p, a, -2, b);
        if (!top.is_zero()) {
          CHECK(components.rbegin()->first == wa + wb + 1);
          CHECK(components.rbegin()->second == top);
        }
      }
      const State star = zhu_star(p, a, b);
      if (!star.is_zero()) {
        CHECK(weight_components(p, star).rbegin()->first <= wa + wb);
      }
    }
  }
}
