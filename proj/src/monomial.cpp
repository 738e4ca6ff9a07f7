#include "cmpoly/monomial.hpp"

#include <algorithm>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

void require_same_length(const Monomial& u, const Monomial& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::kStructural,
                "monomials of different lengths (" + std::to_string(u.size()) +
                    " vs " + std::to_string(v.size()) + ")");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t index) {
  if (index >= n) {
    throw Error(ErrorKind::kStructural,
                "variable index " + std::to_string(index + 1) +
                    " exceeds n=" + std::to_string(n));
  }
  Monomial out(n);
  out.exps_[index] = 1;
  return out;
}

void Monomial::set(std::size_t i, Exponent value, Exponent cap) {
  if (value > cap) {
    throw Error(ErrorKind::kOverflow,
                "exponent " + std::to_string(value) + " exceeds cap " +
                    std::to_string(cap));
  }
  exps_.at(i) = value;
}

Degree Monomial::degree() const noexcept {
  Degree d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

VarSet Monomial::support() const {
  VarSet out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_length(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

bool revlex_less(const Monomial& u, const Monomial& v) {
  require_same_length(u, v);
  const Degree du = u.degree();
  const Degree dv = v.degree();
  if (du != dv) return du < dv;
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] != v[i]) return u[i] > v[i];
  }
  return false;
}

Monomial multiply(const Monomial& u, const Monomial& v, Exponent cap) {
  require_same_length(u, v);
  Monomial out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::uint64_t e = std::uint64_t{u[i]} + v[i];
    if (e > cap) {
      throw Error(ErrorKind::kOverflow,
                  "exponent of x" + std::to_string(i + 1) + " in product exceeds cap " +
                      std::to_string(cap));
    }
    out.set(i, static_cast<Exponent>(e), cap);
  }
  return out;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_length(u, v);
  Monomial out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.set(i, std::min(u[i], v[i]));
  return out;
}

Monomial colon_quotient(const Monomial& v, const Monomial& u) {
  require_same_length(u, v);
  Monomial out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.set(i, v[i] > u[i] ? v[i] - u[i] : 0);
  }
  return out;
}

Monomial squarefree_part(const Monomial& u) {
  Monomial out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.set(i, u[i] != 0 ? 1 : 0);
  return out;
}

std::optional<Monomial> exchange(const Monomial& u, std::size_t plus,
                                 std::size_t minus, Exponent cap) {
  if (plus >= u.size() || minus >= u.size()) {
    throw Error(ErrorKind::kStructural, "exchange index out of range");
  }
  if (u[minus] == 0) return std::nullopt;
  if (plus == minus) return u;
  if (u[plus] >= cap) return std::nullopt;
  Monomial out = u;
  out.set(minus, u[minus] - 1);
  out.set(plus, u[plus] + 1);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
  const auto exps = u.exponents();
  return boost::hash_range(exps.begin(), exps.end());
}

}  // namespace cmpoly
