#include "cmpoly/ideal.hpp"

#include <algorithm>
#include <string>

#include "cmpoly/error.hpp"

namespace cmpoly {

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::has_generator(const Monomial& u) const {
  return std::binary_search(gens_.begin(), gens_.end(), u, revlex_greater);
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

VarSet MonomialIdeal::support() const {
  std::vector<bool> used(num_vars_, false);
  for (const Monomial& g : gens_) {
    for (std::size_t i = 0; i < num_vars_; ++i) used[i] = used[i] || g[i] != 0;
  }
  VarSet out;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

MonomialIdeal minimalize(std::vector<Monomial> raw, std::size_t n) {
  for (const Monomial& u : raw) {
    if (u.size() != n) {
      throw Error(ErrorKind::kStructural,
                  "monomial has " + std::to_string(u.size()) +
                      " exponents, ideal has n=" + std::to_string(n));
    }
  }
  // Ascending revlex puts every proper divisor before its multiples, so one
  // pass against the kept prefix suffices.
  std::sort(raw.begin(), raw.end(), revlex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  MonomialIdeal out(n);
  for (Monomial& u : raw) {
    const bool redundant =
        std::any_of(out.gens_.begin(), out.gens_.end(),
                    [&](const Monomial& g) { return divides(g, u); });
    if (!redundant) out.gens_.push_back(std::move(u));
  }
  std::reverse(out.gens_.begin(), out.gens_.end());
  return out;
}

std::optional<Degree> common_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  const Degree d = ideal[0].degree();
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != d) return std::nullopt;
  }
  return d;
}

bool is_generated_in_one_degree(const MonomialIdeal& ideal) {
  return ideal.is_zero() || common_degree(ideal).has_value();
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw Error(ErrorKind::kDegenerateIdeal, "the zero ideal has no generators");
  }
  if (ideal.is_unit()) {
    throw Error(ErrorKind::kDegenerateIdeal, "the unit ideal is the whole ring");
  }
}

Degree require_proper_equigenerated(const MonomialIdeal& ideal) {
  require_proper(ideal);
  const auto d = common_degree(ideal);
  if (!d) {
    throw Error(ErrorKind::kNotEquigenerated,
                "generators have more than one degree");
  }
  return *d;
}

MonomialIdeal permute_variables(const MonomialIdeal& ideal,
                                std::span<const std::size_t> perm) {
  const std::size_t n = ideal.num_vars();
  std::vector<bool> seen(n, false);
  if (perm.size() != n) {
    throw Error(ErrorKind::kStructural, "permutation length differs from n");
  }
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) {
      throw Error(ErrorKind::kStructural, "not a permutation of the variables");
    }
    seen[p] = true;
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) {
    Monomial image(n);
    for (std::size_t i = 0; i < n; ++i) image.set(perm[i], g[i]);
    gens.push_back(std::move(image));
  }
  return minimalize(std::move(gens), n);
}

ShrunkIdeal shrink_to_support(const MonomialIdeal& ideal) {
  ShrunkIdeal out{MonomialIdeal(0), ideal.support()};
  const std::size_t m = out.original_vars.size();
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    Monomial image(m);
    for (std::size_t k = 0; k < m; ++k) image.set(k, g[out.original_vars[k]]);
    gens.push_back(std::move(image));
  }
  out.ideal = minimalize(std::move(gens), m);
  return out;
}

}  // namespace cmpoly
