#include "voa/zhu.hpp"

#include "voa/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace voa {

namespace {

State zhu_product(const LatticeParams& p, const State& a, const State& b,
                  long long mode_offset) {
  State out(b.sector());
  for (const auto& [weight, component] : weight_components(p, a)) {
    const long long wt = to_long(weight);
    for (long long i = 0; i <= wt; ++i) {
      State term = apply_mode(p, component, i + mode_offset, b);
      if (term.is_zero()) {
        continue;
      }
      term *= binomial(wt, i);
      out += term;
    }
  }
  return out;
}

}  // namespace

State zhu_circ(const LatticeParams& p, const State& a, const State& b) {
  return zhu_product(p, a, b, -2);
}

State zhu_star(const LatticeParams& p, const State& a, const State& b) {
  return zhu_product(p, a, b, -1);
}

OVTruncation build_ov_truncation(const LatticeParams& p,
                                 const Rational& weight_cap, int theta_sign) {
  OVTruncation trunc{p, weight_cap, theta_sign, {}};
  if (weight_cap < 1) {
    return trunc;
  }
  const auto strata = enumerate_basis(p, Sector::untwisted(p, 0),
                                      weight_cap - 1, theta_sign);
  for (const auto& [wa, rows_a] : strata) {
    for (const auto& [wb, rows_b] : strata) {
      if (wa + wb + 1 > weight_cap) {
        continue;
      }
      for (const State& a : rows_a) {
        for (const State& b : rows_b) {
          State gen = zhu_circ(p, a, b);
          if (!gen.is_zero()) {
            trunc.generators.push_back(std::move(gen));
          }
        }
      }
    }
  }
  return trunc;
}

SpanCertificate ov_membership(const State& x, const OVTruncation& trunc) {
  for (const auto& [weight, component] : weight_components(trunc.lat, x)) {
    if (weight > trunc.weight_cap) {
      throw std::invalid_argument(
          "ov_membership: weight support exceeds the truncation cap");
    }
  }
  if (x.is_zero()) {
    return SpanCertificate::certified_true;
  }
  std::vector<SparseVector<FockMonomial>> generators;
  generators.reserve(trunc.generators.size());
  for (const State& gen : trunc.generators) {
    generators.push_back(gen.terms());
  }
  return in_span(x.terms(), generators) ? SpanCertificate::certified_true
                                        : SpanCertificate::not_certified;
}

OmegaSubspace omega_subspace(const DirectSumModule& m,
                             const Rational& testing_cap) {
  if (testing_cap < 2) {
    throw std::invalid_argument(
        "omega_subspace: testing cap must include weight 2");
  }
  const LatticeParams& p = m.lat();
  OmegaSubspace result;
  result.testing_cap = testing_cap;
  result.degree_vectors.assign(
      static_cast<std::size_t>(m.max_degree()) + 1, {});

  std::vector<State> testing_set;
  for (State& s : enumerate_basis_flat(p, Sector::untwisted(p, 0),
                                       testing_cap, 1)) {
    const auto weight = homogeneous_weight(p, s);
    if (weight && *weight > 0) {
      testing_set.push_back(std::move(s));
    }
  }

  for (int degree = 0; degree <= m.max_degree(); ++degree) {
    const int nd = m.dim(degree);
    if (nd == 0) {
      continue;
    }
    if (degree == 0) {
      // No positive shifted mode can land inside the grading.
      for (int i = 0; i < nd; ++i) {
        std::vector<Rational> unit(static_cast<std::size_t>(nd), Rational(0));
        unit[static_cast<std::size_t>(i)] = 1;
        result.degree_vectors[0].push_back(std::move(unit));
      }
      continue;
    }
    std::vector<std::vector<Rational>> constraint_rows;
    for (const State& a : testing_set) {
      for (long long j = 1; j <= degree; ++j) {
        std::vector<std::vector<Rational>> images(
            static_cast<std::size_t>(nd));
        int target_dim = -1;
        bool any = false;
        for (int i = 0; i < nd; ++i) {
          std::vector<Rational> unit(static_cast<std::size_t>(nd),
                                     Rational(0));
          unit[static_cast<std::size_t>(i)] = 1;
          bool skipped = false;
          const auto image = m.apply_shifted(
              a, j, degree, unit,
              DirectSumModule::UnsupportedPolicy::skip_block, &skipped);
          if (skipped) {
            result.reduced_oracle_blocks = true;
          }
          if (!image.coords.empty()) {
            any = true;
            target_dim = static_cast<int>(image.coords.size());
          }
          images[static_cast<std::size_t>(i)] = image.coords;
        }
        if (!any) {
          continue;
        }
        for (int row = 0; row < target_dim; ++row) {
          std::vector<Rational> constraint(static_cast<std::size_t>(nd),
                                           Rational(0));
          bool nonzero = false;
          for (int i = 0; i < nd; ++i) {
            const auto& img = images[static_cast<std::size_t>(i)];
            if (!img.empty()) {
              constraint[static_cast<std::size_t>(i)] =
                  img[static_cast<std::size_t>(row)];
              nonzero = nonzero || constraint[static_cast<std::size_t>(i)] != 0;
            }
          }
          if (nonzero) {
            constraint_rows.push_back(std::move(constraint));
          }
        }
      }
    }
    if (constraint_rows.empty()) {
      for (int i = 0; i < nd; ++i) {
        std::vector<Rational> unit(static_cast<std::size_t>(nd), Rational(0));
        unit[static_cast<std::size_t>(i)] = 1;
        result.degree_vectors[static_cast<std::size_t>(degree)].push_back(
            std::move(unit));
      }
      continue;
    }
    RationalMatrix constraints(constraint_rows.size(),
                               static_cast<std::size_t>(nd));
    for (std::size_t r = 0; r < constraint_rows.size(); ++r) {
      for (int c = 0; c < nd; ++c) {
        constraints.at(r, static_cast<std::size_t>(c)) =
            constraint_rows[r][static_cast<std::size_t>(c)];
      }
    }
    result.degree_vectors[static_cast<std::size_t>(degree)] =
        kernel_basis(constraints);
  }
  return result;
}

SuiteReport check_module_axioms(const LatticeParams& p,
                                const ModuleTruncation& m,
                                const Rational& pair_weight_cap,
                                const Rational& omega_testing_cap) {
  SuiteReport report{"module-axioms:" + m.name, p.k, {}};
  const std::map<std::string, std::string> caps = {
      {"pair_weight_cap", to_string(pair_weight_cap)},
      {"omega_testing_cap", to_string(omega_testing_cap)},
      {"module_degree_cap", std::to_string(m.max_degree)},
  };

  const OmegaSubspace omega = omega_subspace(as_direct_sum(m),
                                             omega_testing_cap);
  std::vector<State> lowest;
  for (const auto& coords : omega.degree_vectors[0]) {
    lowest.push_back(module_state(m, 0, coords));
  }

  // The lowest-weight subspace of an irreducible catalogue entry sits in
  // degree 0 and L(0) acts there by the lowest weight.
  {
    CheckRecord record{
        "omega/" + m.name, "omega(M) sits in degree 0 with L(0) = lowest",
        p.k, true, "", caps};
    for (std::size_t d = 1; d < omega.degree_vectors.size(); ++d) {
      if (!omega.degree_vectors[d].empty()) {
        record.passed = false;
        record.witness = "unexpected vector at degree " + std::to_string(d);
      }
    }
    for (const State& u : lowest) {
      State expected = u;
      expected *= m.lowest_weight;
      if (!(virasoro(p, 0, u) == expected)) {
        record.passed = false;
        record.witness = "L(0) not scalar on omega subspace";
      }
    }
    if (lowest.empty()) {
      record.passed = false;
      record.witness = "empty omega subspace";
    }
    report.checks.push_back(std::move(record));
  }

  const std::vector<State> even_basis = enumerate_basis_flat(
      p, Sector::untwisted(p, 0), pair_weight_cap, 1);

  CheckRecord circ_record{"zhu-circ-zero/" + m.name,
                          "o(a circ b) = 0 on omega(M)", p.k, true, "", caps};
  CheckRecord star_record{"zhu-star-product/" + m.name,
                          "o(a star b) = o(a) o(b) on omega(M)", p.k, true,
                          "", caps};
  for (std::size_t ia = 0; ia < even_basis.size(); ++ia) {
    for (std::size_t ib = 0; ib < even_basis.size(); ++ib) {
      const State& a = even_basis[ia];
      const State& b = even_basis[ib];
      const State circ = zhu_circ(p, a, b);
      const State star = zhu_star(p, a, b);
      for (const State& u : lowest) {
        if (circ_record.passed) {
          const State image = zero_mode(p, circ, u);
          if (!image.is_zero()) {
            circ_record.passed = false;
            circ_record.witness = "pair (" + std::to_string(ia) + "," +
                                  std::to_string(ib) +
                                  ") image " + state_witness(p, image);
          }
        }
        if (star_record.passed) {
          const State via_star = zero_mode(p, star, u);
          const State composed = zero_mode(p, a, zero_mode(p, b, u));
          if (!(via_star == composed)) {
            star_record.passed = false;
            star_record.witness = "pair (" + std::to_string(ia) + "," +
                                  std::to_string(ib) + ") difference " +
                                  state_witness(p, via_star - composed);
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(circ_record));
  report.checks.push_back(std::move(star_record));

  CheckRecord scalar_record{"zhu-omega-scalar/" + m.name,
                            "o(omega) acts by the lowest weight on omega(M)",
                            p.k, true, "", caps};
  const State omega_elem = make_virasoro_element(p);
  for (const State& u : lowest) {
    State expected = u;
    expected *= m.lowest_weight;
    const State actual = zero_mode(p, omega_elem, u);
    if (!(actual == expected)) {
      scalar_record.passed = false;
      scalar_record.witness =
          "o(omega) mismatch on " + state_witness(p, u);
    }
  }
  report.checks.push_back(std::move(scalar_record));

  // The computed lowest-weight subspace is invariant under every zero mode
  // in the tested span, so it carries the induced action.
  CheckRecord invariance_record{"zhu-omega-invariant/" + m.name,
                                "o(a) preserves omega(M)", p.k, true, "",
                                caps};
  std::vector<SparseVector<FockMonomial>> omega_span;
  omega_span.reserve(lowest.size());
  for (const State& u : lowest) {
    omega_span.push_back(u.terms());
  }
  for (const State& a : even_basis) {
    for (const State& u : lowest) {
      const State image = zero_mode(p, a, u);
      if (!image.is_zero() && !in_span(image.terms(), omega_span)) {
        invariance_record.passed = false;
        invariance_record.witness = "image " + state_witness(p, image);
      }
    }
  }
  report.checks.push_back(std::move(invariance_record));
  return report;
}

}  // namespace voa
