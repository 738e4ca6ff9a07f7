#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmpoly/ideal.hpp"
#include "cmpoly/monomial.hpp"

namespace cmpoly {

// A pair (u, v) of generators and an index i at which an exchange was
// attempted. For a failed check, j and result are empty. For a successful
// exchange, result is x_j u / x_i (forward) or x_i u / x_j (dual) and is a
// generator.
struct ExchangeWitness {
  Monomial u;
  Monomial v;
  std::size_t i = 0;
  std::optional<std::size_t> j;
  std::optional<Monomial> result;
};

// Outcome of an exchange-axiom check. On failure, `violation` is the first
// offending (u, v, i) in generator order.
struct ExchangeVerdict {
  bool holds = true;
  std::optional<ExchangeWitness> violation;

  explicit operator bool() const noexcept { return holds; }
};

// Forward exchange: for all u, v in G(I) and i with a_i > b_i there is j with
// a_j < b_j and x_j u / x_i in G(I). Requires a proper equigenerated ideal.
ExchangeVerdict check_exchange(const MonomialIdeal& ideal);
bool is_polymatroidal(const MonomialIdeal& ideal);
// Polymatroidal with squarefree generators.
bool is_matroidal(const MonomialIdeal& ideal);

// Dual exchange: for all u, v and i with a_i < b_i there is j with a_j > b_j
// and x_i u / x_j in G(I). Holds for every polymatroidal ideal.
ExchangeVerdict check_dual_exchange(const MonomialIdeal& ideal);

// Half the L1 distance between two exponent vectors of equal degree.
Degree exchange_distance(const Monomial& u, const Monomial& v);

// Trace of the distance-reducing walk that turns a forward exchange
// property into a dual exchange for (u, v, target).
struct ExchangePath {
  Monomial u;
  Monomial start;  // v
  std::size_t target = 0;
  // w_1, ..., w_m; the terminal monomial is steps.back(), or start if m == 0.
  std::vector<Monomial> steps;
  // dist(u, start), dist(u, w_1), ..., dist(u, w_m).
  std::vector<Degree> distances;
  Monomial terminal;
  // j0 with terminal_{j0} < a_{j0}; result = x_target u / x_{j0} in G(I).
  std::size_t balancing_index = 0;
  Monomial result;
};

// Starting at v, repeatedly pick the smallest k != target with a_k < w_k and
// the smallest l with a_l > w_l such that x_l w / x_k is a generator, until
// no such k remains. Preconditions: u, v in G(I) and u_target < v_target
// (kPrecondition otherwise). A missing forward exchange along the way means
// the ideal is not polymatroidal and throws kExchangeAxiomViolated.
ExchangePath exchange_path(const MonomialIdeal& ideal, const Monomial& u,
                           const Monomial& v, std::size_t target);

// Describes the first broken invariant of a path produced for `ideal`:
// every step a generator, distances strictly decreasing, terminal exponent
// at the target equal to v's and no other above u's, result a generator
// equal to x_target u / x_j0. nullopt when the path is sound.
std::optional<std::string> path_defect(const MonomialIdeal& ideal,
                                       const ExchangePath& path);

// Minimal generators of I * J. Throws kStructural on ambient mismatch.
MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                      Exponent cap = kDefaultExponentCap);
// I^k, with I^0 the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned k,
                    Exponent cap = kDefaultExponentCap);

}  // namespace cmpoly
