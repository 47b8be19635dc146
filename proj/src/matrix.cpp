#include "voa/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace voa {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Rational& a = at(i, l);
      if (a == 0) {
        continue;
      }
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(l, j);
        if (b != 0) {
          out.at(i, j) += a * b;
        }
      }
    }
  }
  return out;
}

RrefResult rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows() && m.at(pivot_row, col) == 0) {
      ++pivot_row;
    }
    if (pivot_row == m.rows()) {
      continue;
    }
    if (pivot_row != row) {
      for (std::size_t j = col; j < m.cols(); ++j) {
        std::swap(m.at(row, j), m.at(pivot_row, j));
      }
    }
    const Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      m.at(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) {
        continue;
      }
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const RrefResult reduced = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t col : reduced.pivot_cols) {
    is_pivot[col] = true;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Rational> vec(m.cols(), Rational(0));
    vec[free] = 1;
    for (std::size_t r = 0; r < reduced.pivot_cols.size(); ++r) {
      vec[reduced.pivot_cols[r]] = -reduced.matrix.at(r, free);
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

bool in_span(const std::vector<Rational>& v,
             const std::vector<std::vector<Rational>>& generators) {
  if (std::all_of(v.begin(), v.end(),
                  [](const Rational& c) { return c == 0; })) {
    return true;
  }
  const std::size_t cols = v.size();
  RationalMatrix gen_matrix(generators.size(), cols);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != cols) {
      throw std::invalid_argument("in_span: inconsistent vector lengths");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      gen_matrix.at(i, j) = generators[i][j];
    }
  }
  RationalMatrix stacked(generators.size() + 1, cols);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      stacked.at(i, j) = generators[i][j];
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    stacked.at(generators.size(), j) = v[j];
  }
  return rank(gen_matrix) == rank(stacked);
}

GeneralizedEigenspaces generalized_eigenspaces(
    const RationalMatrix& m, const std::vector<Rational>& candidates) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("generalized_eigenspaces: matrix not square");
  }
  const std::size_t n = m.rows();
  GeneralizedEigenspaces result;
  std::vector<Rational> seen;
  for (const Rational& lambda : candidates) {
    if (std::find(seen.begin(), seen.end(), lambda) != seen.end()) {
      continue;
    }
    seen.push_back(lambda);

    RationalMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) {
      shifted.at(i, i) -= lambda;
    }
    // Grow ker((m - lambda)^j) until it stabilizes; j <= n always suffices.
    RationalMatrix power = shifted;
    std::size_t kernel_dim = n - rank(power);
    for (std::size_t j = 1; j < n && kernel_dim > 0; ++j) {
      RationalMatrix next = power * shifted;
      const std::size_t next_dim = n - rank(next);
      if (next_dim == kernel_dim) {
        break;
      }
      power = std::move(next);
      kernel_dim = next_dim;
    }
    result.spaces.emplace_back(
        lambda, kernel_dim == 0 ? std::vector<std::vector<Rational>>{}
                                : kernel_basis(power));
  }

  // Residual: standard basis vectors independent from the union of all
  // returned spaces, found by row-reducing [spaces | I].
  std::size_t total = 0;
  for (const auto& [lambda, basis] : result.spaces) {
    total += basis.size();
  }
  RationalMatrix stacked(n, total + n);
  std::size_t col = 0;
  for (const auto& [lambda, basis] : result.spaces) {
    for (const auto& vec : basis) {
      for (std::size_t i = 0; i < n; ++i) {
        stacked.at(i, col) = vec[i];
      }
      ++col;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    stacked.at(i, total + i) = 1;
  }
  for (std::size_t pivot : rref(std::move(stacked)).pivot_cols) {
    if (pivot >= total) {
      std::vector<Rational> e(n, Rational(0));
      e[pivot - total] = 1;
      result.residual.push_back(std::move(e));
    }
  }
  return result;
}

}  // namespace voa
