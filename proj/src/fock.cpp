#include "voa/fock.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace voa {

LatticeParams::LatticeParams(int k_value) : k(k_value) {
  if (k < 1) {
    throw std::invalid_argument("lattice parameter k must be >= 1");
  }
}

Sector Sector::untwisted(const LatticeParams& p, long long label) {
  const long long period = p.gram();
  const long long coset = ((label % period) + period) % period;
  return Sector(Kind::untwisted, static_cast<int>(coset));
}

Sector Sector::twisted(int i) {
  if (i != 1 && i != 2) {
    throw std::invalid_argument("twist index must be 1 or 2");
  }
  return Sector(Kind::twisted, i);
}

int Sector::coset() const {
  if (kind_ != Kind::untwisted) {
    throw std::logic_error("coset() on twisted sector");
  }
  return index_;
}

int Sector::twist_index() const {
  if (kind_ != Kind::twisted) {
    throw std::logic_error("twist_index() on untwisted sector");
  }
  return index_;
}

bool Sector::theta_stable(const LatticeParams& p) const {
  if (is_twisted()) {
    return true;
  }
  return index_ == 0 || index_ == p.k;
}

Sector Sector::theta_image(const LatticeParams& p) const {
  if (is_twisted()) {
    return *this;
  }
  return untwisted(p, -static_cast<long long>(index_));
}

long long FockMonomial::parts2_sum() const {
  return std::accumulate(parts2.begin(), parts2.end(), 0LL);
}

FockMonomial FockMonomial::with_part2(int part2) const {
  FockMonomial out = *this;
  auto pos = std::lower_bound(out.parts2.begin(), out.parts2.end(), part2,
                              std::greater<int>());
  out.parts2.insert(pos, part2);
  return out;
}

FockMonomial FockMonomial::without_part_index(std::size_t index) const {
  FockMonomial out = *this;
  out.parts2.erase(out.parts2.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

void State::add_term(const FockMonomial& monomial, const Rational& coeff) {
  terms_.add(monomial, coeff);
}

State& State::operator+=(const State& other) {
  if (sector_ != other.sector_) {
    throw std::invalid_argument("sector mismatch in state addition");
  }
  terms_ += other.terms_;
  return *this;
}

State& State::operator-=(const State& other) {
  if (sector_ != other.sector_) {
    throw std::invalid_argument("sector mismatch in state subtraction");
  }
  terms_ -= other.terms_;
  return *this;
}

State& State::operator*=(const Rational& scalar) {
  terms_ *= scalar;
  return *this;
}

Rational monomial_weight(const LatticeParams& p, const FockMonomial& m,
                         bool twisted) {
  // Parts are stored doubled, so the mode-depth sum is parts2_sum/2.
  Rational weight = Rational(m.parts2_sum(), 2);
  if (twisted) {
    weight += Rational(1, 16);
  } else {
    weight += Rational(m.label * m.label) / Rational(4LL * p.k);
  }
  return weight;
}

std::optional<Rational> homogeneous_weight(const LatticeParams& p,
                                           const State& s) {
  std::optional<Rational> weight;
  for (const auto& [monomial, coeff] : s.terms()) {
    const Rational w = monomial_weight(p, monomial, s.sector().is_twisted());
    if (!weight) {
      weight = w;
    } else if (*weight != w) {
      return std::nullopt;
    }
  }
  return weight;
}

std::map<Rational, State> weight_components(const LatticeParams& p,
                                            const State& s) {
  std::map<Rational, State> components;
  for (const auto& [monomial, coeff] : s.terms()) {
    const Rational w = monomial_weight(p, monomial, s.sector().is_twisted());
    auto [it, inserted] = components.try_emplace(w, State(s.sector()));
    it->second.add_term(monomial, coeff);
  }
  return components;
}

State theta(const LatticeParams& p, const State& s) {
  State out(s.sector().theta_image(p));
  const bool twisted = s.sector().is_twisted();
  for (const auto& [monomial, coeff] : s.terms()) {
    FockMonomial image = monomial;
    if (!twisted) {
      image.label = -image.label;
    }
    const Rational sign = (monomial.length() % 2 == 0) ? 1 : -1;
    out.add_term(image, sign * coeff);
  }
  return out;
}

State project_pm(const LatticeParams& p, const State& s, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("projection sign must be +1 or -1");
  }
  if (!s.sector().theta_stable(p)) {
    throw std::invalid_argument(
        "theta eigenprojection requires a theta-stable sector");
  }
  State out = s;
  if (sign == 1) {
    out += theta(p, s);
  } else {
    out -= theta(p, s);
  }
  out *= Rational(1, 2);
  return out;
}

State make_vacuum(const LatticeParams& p) { return make_lattice_state(p, 0); }

State make_lattice_state(const LatticeParams& p, long long r) {
  State s(Sector::untwisted(p, r));
  s.add_term(FockMonomial{{}, r}, 1);
  return s;
}

State make_alpha_vacuum(const LatticeParams& p) {
  return make_monomial_state(p, Sector::untwisted(p, 0), {2}, 0);
}

State make_virasoro_element(const LatticeParams& p) {
  return make_monomial_state(p, Sector::untwisted(p, 0), {2, 2}, 0,
                             Rational(1, 4LL * p.k));
}

State make_E(const LatticeParams& p) {
  State s = make_lattice_state(p, p.gram());
  s.add_term(FockMonomial{{}, -p.gram()}, 1);
  return s;
}

State make_F(const LatticeParams& p) {
  State s = make_lattice_state(p, p.gram());
  s.add_term(FockMonomial{{}, -p.gram()}, -1);
  return s;
}

State make_twisted_ground(int i) {
  State s(Sector::twisted(i));
  s.add_term(FockMonomial{{}, 0}, 1);
  return s;
}

State make_monomial_state(const LatticeParams& p, Sector sector,
                          std::vector<int> parts2, long long label,
                          const Rational& coeff) {
  std::sort(parts2.begin(), parts2.end(), std::greater<int>());
  for (int part : parts2) {
    if (part <= 0) {
      throw std::invalid_argument("mode depths must be positive");
    }
    const bool odd = (part % 2) != 0;
    if (odd != sector.is_twisted()) {
      throw std::invalid_argument(
          "part parity does not match sector (doubled depths are even for "
          "untwisted, odd for twisted)");
    }
  }
  if (sector.is_twisted()) {
    if (label != 0) {
      throw std::invalid_argument("twisted monomials carry no lattice label");
    }
  } else if (Sector::untwisted(p, label) != sector) {
    throw std::invalid_argument("label does not lie in the sector's coset");
  }
  State s(sector);
  s.add_term(FockMonomial{std::move(parts2), label}, coeff);
  return s;
}

}  // namespace voa
