#pragma once

#include "voa/rational.hpp"

#include <map>
#include <utility>

namespace voa {

// Sparse vector over an ordered key universe. Zero coefficients are never
// stored, so operator== is semantic equality.
template <typename Key>
class SparseVector {
 public:
  using Map = std::map<Key, Rational>;
  using const_iterator = typename Map::const_iterator;

  SparseVector() = default;

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) {
      return;
    }
    auto [it, inserted] = entries_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) {
        entries_.erase(it);
      }
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  SparseVector& operator+=(const SparseVector& other) {
    for (const auto& [key, coeff] : other.entries_) {
      add(key, coeff);
    }
    return *this;
  }

  SparseVector& operator-=(const SparseVector& other) {
    for (const auto& [key, coeff] : other.entries_) {
      add(key, -coeff);
    }
    return *this;
  }

  SparseVector& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [key, coeff] : entries_) {
      coeff *= scalar;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector lhs, const SparseVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend SparseVector operator-(SparseVector lhs, const SparseVector& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend SparseVector operator*(const Rational& scalar, SparseVector vec) {
    vec *= scalar;
    return vec;
  }

  bool operator==(const SparseVector& other) const {
    return entries_ == other.entries_;
  }

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

 private:
  Map entries_;
};

}  // namespace voa
