#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cmpoly/ideal.hpp"

namespace cmpoly {

// Minimal generators of the colon (gens) : u, namely the minimalized set
// { v / gcd(v, u) }. Contains the unit monomial when u is in (gens).
std::vector<Monomial> colon_by_monomial(std::span<const Monomial> gens,
                                        const Monomial& u);

// The colon (u_1, ..., u_{j-1}) : u_j for one position j >= 2.
struct ColonStep {
  std::vector<Monomial> generators;
  bool linear = false;  // every generator is a single variable
  VarSet vars;          // the variables, when linear
};

struct QuotientReport {
  std::size_t num_vars = 0;
  std::vector<Monomial> ordering;
  // steps[k] is the colon for ordering[k + 1]. When linearity fails the
  // list stops at the offending step.
  std::vector<ColonStep> steps;
  std::vector<std::size_t> q_values;  // |vars| of each linear step
  bool linear = false;
  // Index into steps of the first non-linear colon.
  std::optional<std::size_t> failed_step;
  // max q_j; 0 for a single generator. Meaningful only when linear.
  std::size_t q = 0;
  // n - q - 1 when linear.
  std::optional<std::size_t> depth;
};

// Colon sequence for an explicit ordering of G(I). The ordering must be a
// permutation of the generators with non-decreasing degrees
// (kPrecondition otherwise).
QuotientReport linear_quotients(const MonomialIdeal& ideal,
                                std::span<const Monomial> ordering);

// Colon sequence for G(I) in descending revlex order. Requires a proper
// equigenerated ideal.
QuotientReport linear_quotients_revlex(const MonomialIdeal& ideal);

// depth S/I = n - q(I) - 1. Throws kNoLinearQuotients when the revlex
// ordering fails to give linear quotients.
std::size_t depth_quotient(const MonomialIdeal& ideal);

// h(I) == q(I) + 1, certified through the revlex ordering. Throws
// kNoLinearQuotients when the status cannot be decided that way.
bool is_cohen_macaulay(const MonomialIdeal& ideal);

// Largest generator count accepted by all_linear_quotient_orders.
inline constexpr std::size_t kMaxExhaustiveOrderGens = 7;

// q(I) for every ordering of G(I) that gives linear quotients, in
// lexicographic permutation order of the stored generators. Factorial cost.
std::vector<std::size_t> all_linear_quotient_orders(const MonomialIdeal& ideal);

}  // namespace cmpoly
