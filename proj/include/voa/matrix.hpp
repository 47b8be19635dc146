#pragma once

#include "voa/rational.hpp"
#include "voa/sparse_vector.hpp"

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace voa {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Exact span membership: true iff v is a rational linear combination of the
/// generators (rank test on the stacked matrices, no tolerance).
bool in_span(const std::vector<Rational>& v,
             const std::vector<std::vector<Rational>>& generators);

struct GeneralizedEigenspaces {
  // One entry per distinct candidate, in first-seen input order.
  std::vector<std::pair<Rational, std::vector<std::vector<Rational>>>> spaces;
  // Representatives of a complement of the sum of all returned spaces;
  // nonempty means some eigenvalue lies outside the candidate set.
  std::vector<std::vector<Rational>> residual;
  bool residual_empty() const { return residual.empty(); }
};

/// For each candidate lambda, a basis of ker((m - lambda I)^dim(m)). The
/// nilpotency exponent is the matrix dimension, which always suffices; the
/// kernel chain is grown until it stabilizes. Never searches for
/// eigenvalues: anything outside the candidates shows up in the residual.
GeneralizedEigenspaces generalized_eigenspaces(
    const RationalMatrix& m, const std::vector<Rational>& candidates);

/// Assembles vectors over a shared key universe into matrix rows and
/// delegates to the coordinate-level in_span.
template <typename Key>
bool in_span(const SparseVector<Key>& v,
             const std::vector<SparseVector<Key>>& generators) {
  std::set<Key> keys;
  for (const auto& [key, coeff] : v) {
    keys.insert(key);
  }
  for (const auto& gen : generators) {
    for (const auto& [key, coeff] : gen) {
      keys.insert(key);
    }
  }
  std::vector<Key> ordered(keys.begin(), keys.end());
  auto to_coords = [&](const SparseVector<Key>& vec) {
    std::vector<Rational> coords(ordered.size(), Rational(0));
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      coords[i] = vec.coefficient(ordered[i]);
    }
    return coords;
  };
  std::vector<std::vector<Rational>> rows;
  rows.reserve(generators.size());
  for (const auto& gen : generators) {
    rows.push_back(to_coords(gen));
  }
  return in_span(to_coords(v), rows);
}

}  // namespace voa
