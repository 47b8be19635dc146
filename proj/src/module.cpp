#include "voa/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace voa {

std::vector<std::string> catalogue_names(const LatticeParams& p) {
  std::vector<std::string> names = {"Vplus", "Vminus"};
  for (long long r = 1; r < p.gram(); ++r) {
    if (r == p.k) {
      continue;
    }
    names.push_back("V(r=" + std::to_string(r) + ")");
  }
  names.emplace_back("Valpha2plus");
  names.emplace_back("Valpha2minus");
  names.emplace_back("T1plus");
  names.emplace_back("T1minus");
  names.emplace_back("T2plus");
  names.emplace_back("T2minus");
  return names;
}

namespace {

struct CatalogueKey {
  Sector sector;
  std::optional<int> theta_sign;
};

CatalogueKey parse_catalogue_name(const LatticeParams& p,
                                  const std::string& name) {
  if (name == "Vplus") {
    return {Sector::untwisted(p, 0), 1};
  }
  if (name == "Vminus") {
    return {Sector::untwisted(p, 0), -1};
  }
  if (name == "Valpha2plus") {
    return {Sector::untwisted(p, p.k), 1};
  }
  if (name == "Valpha2minus") {
    return {Sector::untwisted(p, p.k), -1};
  }
  for (int i = 1; i <= 2; ++i) {
    const std::string base = "T" + std::to_string(i);
    if (name == base + "plus") {
      return {Sector::twisted(i), 1};
    }
    if (name == base + "minus") {
      return {Sector::twisted(i), -1};
    }
  }
  if (name.starts_with("V(r=") && name.ends_with(")")) {
    const std::string digits = name.substr(4, name.size() - 5);
    long long r = 0;
    try {
      r = std::stoll(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad catalogue name: " + name);
    }
    if (r <= 0 || r >= p.gram() || r == p.k) {
      throw std::invalid_argument(
          "coset index out of range for catalogue entry: " + name);
    }
    return {Sector::untwisted(p, r), std::nullopt};
  }
  throw std::invalid_argument("unknown catalogue module: " + name);
}

}  // namespace

ModuleTruncation build_catalogue_module(const LatticeParams& p,
                                        const std::string& name,
                                        int max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be >= 0");
  }
  const CatalogueKey key = parse_catalogue_name(p, name);
  const int T = key.sector.is_twisted() ? 2 : 1;

  // Enumerate past the largest possible lowest weight, then read the actual
  // lowest weight off the grading.
  const Rational probe_cap =
      std::max(Rational(p.k, 4), Rational(1)) + Rational(max_degree, T);
  auto strata = enumerate_basis(p, key.sector, probe_cap, key.theta_sign);
  if (strata.empty()) {
    throw std::logic_error("catalogue module has empty truncation: " + name);
  }

  ModuleTruncation m{name,
                     p,
                     key.sector,
                     key.theta_sign,
                     T,
                     max_degree,
                     strata.front().weight,
                     {}};
  m.degree_basis.assign(static_cast<std::size_t>(max_degree) + 1, {});
  for (auto& stratum : strata) {
    const Rational offset = (stratum.weight - m.lowest_weight) * T;
    if (!is_integer(offset)) {
      throw std::logic_error("weight off the 1/T grading in " + name);
    }
    const long long degree = to_long(offset);
    if (degree < 0 || degree > max_degree) {
      continue;
    }
    m.degree_basis[static_cast<std::size_t>(degree)] =
        std::move(stratum.states);
  }
  return m;
}

std::vector<ModuleTruncation> catalogue(const LatticeParams& p,
                                        int max_degree) {
  std::vector<ModuleTruncation> modules;
  for (const std::string& name : catalogue_names(p)) {
    modules.push_back(build_catalogue_module(p, name, max_degree));
  }
  return modules;
}

std::vector<Rational> module_coordinates(const ModuleTruncation& m,
                                         int degree, const State& s) {
  if (degree < 0 || degree > m.max_degree) {
    if (s.is_zero()) {
      return {};
    }
    throw std::invalid_argument("state outside the truncated degree range");
  }
  const auto& basis = m.degree_basis[static_cast<std::size_t>(degree)];
  std::vector<Rational> coords(basis.size(), Rational(0));
  // Each monomial appears in exactly one basis vector, so coordinates can
  // be read off the representative (its first monomial, coefficient +-1);
  // reconstruction then certifies membership.
  State rebuilt(s.sector());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [rep, rep_coeff] = *basis[i].terms().begin();
    coords[i] = s.coefficient(rep) / rep_coeff;
    if (coords[i] != 0) {
      State scaled = basis[i];
      scaled *= coords[i];
      rebuilt += scaled;
    }
  }
  if (!(rebuilt == s)) {
    throw std::invalid_argument("state is not in the degree-" +
                                std::to_string(degree) + " basis span of " +
                                m.name);
  }
  return coords;
}

State module_state(const ModuleTruncation& m, int degree,
                   const std::vector<Rational>& coords) {
  if (degree < 0 || degree > m.max_degree) {
    throw std::invalid_argument("degree outside the truncation");
  }
  const auto& basis = m.degree_basis[static_cast<std::size_t>(degree)];
  if (coords.size() != basis.size()) {
    throw std::invalid_argument("coordinate length mismatch");
  }
  State out(m.sector);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) {
      State scaled = basis[i];
      scaled *= coords[i];
      out += scaled;
    }
  }
  return out;
}

RationalMatrix module_l0_matrix(const ModuleTruncation& m, int degree) {
  const auto& basis = m.degree_basis[static_cast<std::size_t>(degree)];
  RationalMatrix l0(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const State image = virasoro(m.lat, 0, basis[j]);
    const std::vector<Rational> coords = module_coordinates(m, degree, image);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      l0.at(i, j) = coords[i];
    }
  }
  return l0;
}

DirectSumModule::DirectSumModule(
    LatticeParams p, std::vector<std::pair<ModuleTruncation, int>> summands,
    std::optional<JordanInsertion> jordan)
    : lat_(p), summands_(std::move(summands)), jordan_(jordan) {
  if (summands_.empty()) {
    throw std::invalid_argument("direct sum needs at least one summand");
  }
  common_T_ = 1;
  for (const auto& [m, mult] : summands_) {
    if (mult < 1) {
      throw std::invalid_argument("summand multiplicity must be >= 1");
    }
    common_T_ = std::lcm(common_T_, m.grading_denom);
  }
  // Common cap: the largest degree every summand still covers, so family
  // dimensions per degree always match the summands'.
  max_degree_ = summands_.front().first.max_degree *
                (common_T_ / summands_.front().first.grading_denom);
  for (const auto& [m, mult] : summands_) {
    const int stretch = common_T_ / m.grading_denom;
    max_degree_ = std::min(max_degree_, m.max_degree * stretch);
  }
  layout_.assign(static_cast<std::size_t>(max_degree_) + 1, {});
  for (int degree = 0; degree <= max_degree_; ++degree) {
    int offset = 0;
    for (std::size_t s = 0; s < summands_.size(); ++s) {
      const auto& [m, mult] = summands_[s];
      const int stretch = common_T_ / m.grading_denom;
      if (degree % stretch != 0) {
        continue;
      }
      const int local = degree / stretch;
      const int d = m.dim(local);
      if (d == 0) {
        continue;
      }
      for (int copy = 0; copy < mult; ++copy) {
        layout_[static_cast<std::size_t>(degree)].push_back(
            Block{s, copy, local, offset, d});
        offset += d;
      }
    }
  }
  if (jordan_) {
    if (jordan_->degree < 0 || jordan_->degree > max_degree_) {
      throw std::invalid_argument("jordan insertion degree out of range");
    }
    // Validated lazily in l0_matrix, where the eigenvalue multiplicity at
    // that degree is known.
  }
}

int DirectSumModule::dim(int degree) const {
  if (degree < 0 || degree > max_degree_) {
    return 0;
  }
  int total = 0;
  for (const Block& block : layout_[static_cast<std::size_t>(degree)]) {
    total += block.dim;
  }
  return total;
}

const std::vector<DirectSumModule::Block>& DirectSumModule::blocks(
    int degree) const {
  return layout_.at(static_cast<std::size_t>(degree));
}

RationalMatrix DirectSumModule::l0_matrix(int degree) const {
  const int n = dim(degree);
  RationalMatrix l0(n, n);
  for (const Block& block : blocks(degree)) {
    const RationalMatrix local =
        module_l0_matrix(summands_[block.summand].first, block.local_degree);
    for (int i = 0; i < block.dim; ++i) {
      for (int j = 0; j < block.dim; ++j) {
        l0.at(block.offset + i, block.offset + j) = local.at(i, j);
      }
    }
  }
  if (jordan_ && jordan_->degree == degree) {
    std::vector<int> hits;
    for (int i = 0; i < n; ++i) {
      bool diagonal_elsewhere = true;
      for (int j = 0; j < n; ++j) {
        if (i != j && l0.at(i, j) != 0) {
          diagonal_elsewhere = false;
          break;
        }
      }
      if (!diagonal_elsewhere) {
        throw std::invalid_argument(
            "jordan insertion needs a diagonal L(0) at the chosen degree");
      }
      if (l0.at(i, i) == jordan_->lambda) {
        hits.push_back(i);
      }
    }
    if (hits.size() < 2) {
      throw std::invalid_argument(
          "jordan insertion needs eigenvalue multiplicity >= 2 at degree " +
          std::to_string(degree));
    }
    for (std::size_t t = 0; t + 1 < hits.size(); ++t) {
      l0.at(hits[t], hits[t + 1]) = 1;
    }
  }
  return l0;
}

DirectSumModule::ModeImage DirectSumModule::apply_shifted(
    const State& a, long long j, int degree,
    const std::vector<Rational>& coords, UnsupportedPolicy policy,
    bool* skipped_blocks) const {
  if (degree < 0 || degree > max_degree_ ||
      coords.size() != static_cast<std::size_t>(dim(degree))) {
    throw std::invalid_argument("apply_shifted: bad degree or coordinates");
  }
  ModeImage image;
  image.degree = degree - static_cast<int>(j) * common_T_;
  if (image.degree > max_degree_) {
    image.overflow = true;
    return image;
  }
  const bool target_exists = image.degree >= 0;
  if (target_exists) {
    image.coords.assign(static_cast<std::size_t>(dim(image.degree)),
                        Rational(0));
  }
  for (const Block& src : blocks(degree)) {
    const ModuleTruncation& m = summands_[src.summand].first;
    State local(m.sector);
    bool nonzero = false;
    for (int i = 0; i < src.dim; ++i) {
      const Rational& c = coords[static_cast<std::size_t>(src.offset + i)];
      if (c != 0) {
        State scaled = m.degree_basis[src.local_degree][i];
        scaled *= c;
        local += scaled;
        nonzero = true;
      }
    }
    if (!nonzero) {
      continue;
    }
    State mapped(m.sector);
    try {
      mapped = shifted_mode(lat_, a, j, local);
    } catch (const unsupported_operation&) {
      if (policy == UnsupportedPolicy::raise) {
        throw;
      }
      if (skipped_blocks != nullptr) {
        *skipped_blocks = true;
      }
      continue;
    }
    if (mapped.is_zero()) {
      continue;
    }
    if (!target_exists) {
      throw std::logic_error(
          "nonzero mode image below degree 0 violates the grading");
    }
    const int local_target =
        src.local_degree - static_cast<int>(j) * m.grading_denom;
    const std::vector<Rational> local_coords =
        module_coordinates(m, local_target, mapped);
    // Locate the matching (summand, copy) block at the target degree.
    for (const Block& dst : blocks(image.degree)) {
      if (dst.summand == src.summand && dst.copy == src.copy) {
        for (int i = 0; i < dst.dim; ++i) {
          image.coords[static_cast<std::size_t>(dst.offset + i)] +=
              local_coords[static_cast<std::size_t>(i)];
        }
        break;
      }
    }
  }
  if (target_exists) {
    const bool all_zero =
        std::all_of(image.coords.begin(), image.coords.end(),
                    [](const Rational& c) { return c == 0; });
    if (all_zero) {
      image.coords.clear();
    }
  }
  return image;
}

DirectSumModule as_direct_sum(const ModuleTruncation& m) {
  return DirectSumModule(m.lat, {{m, 1}});
}

}  // namespace voa
