#include "cmpoly/exchange.hpp"

#include <string>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

// Shared loop for both axioms. `dual` swaps the roles of the two indices:
// forward looks at a_i > b_i and tries x_j u / x_i, dual looks at a_i < b_i
// and tries x_i u / x_j.
ExchangeVerdict check_axiom(const MonomialIdeal& ideal, bool dual) {
  require_proper_equigenerated(ideal);
  const std::size_t n = ideal.num_vars();
  for (const Monomial& u : ideal.generators()) {
    for (const Monomial& v : ideal.generators()) {
      if (u == v) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (dual ? !(u[i] < v[i]) : !(u[i] > v[i])) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (dual ? !(u[j] > v[j]) : !(u[j] < v[j])) continue;
          const auto moved = dual ? exchange(u, i, j) : exchange(u, j, i);
          found = moved && ideal.has_generator(*moved);
        }
        if (!found) {
          return {false, ExchangeWitness{u, v, i, std::nullopt, std::nullopt}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

ExchangeVerdict check_exchange(const MonomialIdeal& ideal) {
  return check_axiom(ideal, /*dual=*/false);
}

bool is_polymatroidal(const MonomialIdeal& ideal) {
  return check_exchange(ideal).holds;
}

bool is_matroidal(const MonomialIdeal& ideal) {
  if (!is_polymatroidal(ideal)) return false;
  for (const Monomial& g : ideal.generators()) {
    if (!g.is_squarefree()) return false;
  }
  return true;
}

ExchangeVerdict check_dual_exchange(const MonomialIdeal& ideal) {
  return check_axiom(ideal, /*dual=*/true);
}

Degree exchange_distance(const Monomial& u, const Monomial& v) {
  if (u.size() != v.size() || u.degree() != v.degree()) {
    throw Error(ErrorKind::kStructural,
                "distance needs monomials of equal length and degree");
  }
  Degree total = 0;
  for (std::size_t q = 0; q < u.size(); ++q) {
    total += u[q] > v[q] ? u[q] - v[q] : v[q] - u[q];
  }
  return total / 2;
}

ExchangePath exchange_path(const MonomialIdeal& ideal, const Monomial& u,
                           const Monomial& v, std::size_t target) {
  require_proper_equigenerated(ideal);
  const std::size_t n = ideal.num_vars();
  if (!ideal.has_generator(u) || !ideal.has_generator(v)) {
    throw Error(ErrorKind::kPrecondition, "u and v must be generators");
  }
  if (target >= n || !(u[target] < v[target])) {
    throw Error(ErrorKind::kPrecondition,
                "need u's exponent at the target index below v's");
  }

  ExchangePath path;
  path.u = u;
  path.start = v;
  path.target = target;
  path.distances.push_back(exchange_distance(u, v));

  Monomial w = v;
  for (;;) {
    std::optional<std::size_t> k;
    for (std::size_t q = 0; q < n && !k; ++q) {
      if (q != target && u[q] < w[q]) k = q;
    }
    if (!k) break;

    std::optional<Monomial> next;
    for (std::size_t l = 0; l < n && !next; ++l) {
      if (!(u[l] > w[l])) continue;
      auto moved = exchange(w, l, *k);
      if (moved && ideal.has_generator(*moved)) next = std::move(moved);
    }
    if (!next) {
      throw Error(ErrorKind::kExchangeAxiomViolated,
                  "no forward exchange at index " + std::to_string(*k + 1) +
                      " after " + std::to_string(path.steps.size()) +
                      " step(s); the ideal is not polymatroidal");
    }
    w = std::move(*next);
    path.distances.push_back(exchange_distance(u, w));
    path.steps.push_back(w);
  }
  path.terminal = w;

  // terminal has the same degree as u, a larger target exponent and no
  // other exponent above u's, so some other exponent is strictly smaller.
  std::optional<std::size_t> j0;
  for (std::size_t q = 0; q < n && !j0; ++q) {
    if (q != target && w[q] < u[q]) j0 = q;
  }
  if (!j0) {
    throw Error(ErrorKind::kInternal, "exchange walk ended without a deficit");
  }
  path.balancing_index = *j0;
  auto result = exchange(u, target, *j0);
  if (!result || !ideal.has_generator(*result)) {
    throw Error(ErrorKind::kExchangeAxiomViolated,
                "x_i u / x_j0 is not a generator; the ideal is not polymatroidal");
  }
  path.result = std::move(*result);
  return path;
}

std::optional<std::string> path_defect(const MonomialIdeal& ideal,
                                       const ExchangePath& path) {
  const std::size_t i = path.target;
  if (path.distances.size() != path.steps.size() + 1) {
    return "distance list does not match the steps";
  }
  for (const Monomial& w : path.steps) {
    if (!ideal.has_generator(w)) return "a step is not a generator";
    if (w[i] != path.start[i]) return "a step changed the target exponent";
  }
  for (std::size_t k = 1; k < path.distances.size(); ++k) {
    if (path.distances[k] >= path.distances[k - 1]) {
      return "distances do not strictly decrease";
    }
  }
  if (path.distances.front() > path.u.degree()) return "distance exceeds degree";
  const Monomial& last = path.steps.empty() ? path.start : path.steps.back();
  if (last != path.terminal) return "terminal is not the last step";
  if (path.terminal[i] != path.start[i] || !(path.terminal[i] > path.u[i])) {
    return "terminal target exponent is wrong";
  }
  for (std::size_t q = 0; q < path.u.size(); ++q) {
    if (q != i && path.terminal[q] > path.u[q]) {
      return "terminal exceeds u off the target";
    }
  }
  const std::size_t j0 = path.balancing_index;
  if (j0 == i || !(path.terminal[j0] < path.u[j0])) {
    return "balancing index has no deficit";
  }
  const auto expected = exchange(path.u, i, j0);
  if (!expected || *expected != path.result || !ideal.has_generator(path.result)) {
    return "x_i u / x_j0 is not a generator";
  }
  return std::nullopt;
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                      Exponent cap) {
  if (lhs.num_vars() != rhs.num_vars()) {
    throw Error(ErrorKind::kStructural,
                "product of ideals in different rings (n=" +
                    std::to_string(lhs.num_vars()) + " vs n=" +
                    std::to_string(rhs.num_vars()) + ")");
  }
  std::vector<Monomial> gens;
  gens.reserve(lhs.size() * rhs.size());
  for (const Monomial& a : lhs.generators()) {
    for (const Monomial& b : rhs.generators()) {
      gens.push_back(multiply(a, b, cap));
    }
  }
  return minimalize(std::move(gens), lhs.num_vars());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned k, Exponent cap) {
  MonomialIdeal out =
      minimalize({Monomial(ideal.num_vars())}, ideal.num_vars());
  for (unsigned e = 0; e < k; ++e) out = product(out, ideal, cap);
  return out;
}

}  // namespace cmpoly
