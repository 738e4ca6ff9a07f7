#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cmpoly/monomial.hpp"

namespace cmpoly {

// A monomial ideal in K[x_1, ..., x_n], represented by its minimal
// generating set G(I). Generators form a divisibility antichain and are
// stored in descending revlex order, so two equal ideals compare equal
// member by member. No generators is the zero ideal; the single generator 1
// is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Monomial& operator[](std::size_t k) const { return gens_[k]; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  // u is one of the minimal generators.
  bool has_generator(const Monomial& u) const;
  // u lies in the ideal, i.e. some generator divides it.
  bool contains(const Monomial& u) const;

  // Union of the supports of all generators.
  VarSet support() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial>, std::size_t);
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

// Drops every monomial divisible by a different one, removes duplicates and
// sorts descending revlex. Throws kStructural when a monomial's length is
// not n.
MonomialIdeal minimalize(std::vector<Monomial> raw, std::size_t n);

bool is_generated_in_one_degree(const MonomialIdeal& ideal);
// Common degree of the generators; nullopt for mixed degrees or zero ideal.
std::optional<Degree> common_degree(const MonomialIdeal& ideal);

// Throws kDegenerateIdeal for the zero or unit ideal.
void require_proper(const MonomialIdeal& ideal);
// require_proper plus kNotEquigenerated for mixed degrees. Returns the
// common degree.
Degree require_proper_equigenerated(const MonomialIdeal& ideal);

// Relabels variables: old variable i becomes new variable perm[i].
MonomialIdeal permute_variables(const MonomialIdeal& ideal,
                                std::span<const std::size_t> perm);

struct ShrunkIdeal {
  MonomialIdeal ideal;
  // original_vars[k] is the index in the source ideal of new variable k.
  VarSet original_vars;
};

// Renames away variables that divide no generator.
ShrunkIdeal shrink_to_support(const MonomialIdeal& ideal);

}  // namespace cmpoly
