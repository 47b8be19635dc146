#pragma once

#include "voa/fock.hpp"

#include <optional>
#include <vector>

namespace voa {

/// Integer partitions of n, each sorted descending. Cached; do not mutate.
const std::vector<std::vector<int>>& partitions_of(int n);

/// Partitions of the doubled total n2 into odd doubled parts, i.e.
/// half-odd-integer mode depths summing to n2/2.
const std::vector<std::vector<int>>& odd_partitions2_of(int n2);

struct WeightStratum {
  Rational weight;
  std::vector<State> states;
};

/// Weight-graded basis of the sector truncated at max_weight, optionally
/// projected onto a theta eigenspace. Eigenprojection pairs the labels
/// r and -r inside the self-dual cosets; requesting it on a coset not
/// preserved by theta is an error.
std::vector<WeightStratum> enumerate_basis(
    const LatticeParams& p, Sector sector, const Rational& max_weight,
    std::optional<int> theta_sign = std::nullopt);

/// Flattened view, weight-ascending then canonical monomial order.
std::vector<State> enumerate_basis_flat(
    const LatticeParams& p, Sector sector, const Rational& max_weight,
    std::optional<int> theta_sign = std::nullopt);

}  // namespace voa
