#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cmpoly {

using Exponent = std::uint32_t;
using Degree = std::uint64_t;

// Largest exponent any arithmetic is allowed to produce unless a caller
// passes a tighter cap.
inline constexpr Exponent kDefaultExponentCap = 2147483647u;

// Sorted, duplicate-free list of 0-based variable indices.
using VarSet = std::vector<std::size_t>;

// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector. The
// length of the vector is the ambient number of variables.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  // The unit monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::span<const Exponent> exps)
      : exps_(exps.begin(), exps.end()) {}

  static Monomial variable(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), exps_.size()};
  }

  // Throws kOverflow when value exceeds cap.
  void set(std::size_t i, Exponent value, Exponent cap = kDefaultExponentCap);

  Degree degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  VarSet support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison of exponent vectors. This is a storage
  // order for containers, not the monomial order used by the algebra.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    return std::lexicographical_compare_three_way(
        a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }

 private:
  Storage exps_;
};

// u | v. Throws kStructural on length mismatch.
bool divides(const Monomial& u, const Monomial& v);

// Degree reverse lexicographic order induced by x_1 > x_2 > ... > x_n:
// lower degree first; on equal degree, the monomial with the larger
// exponent at the last differing index is smaller.
bool revlex_less(const Monomial& u, const Monomial& v);
inline bool revlex_greater(const Monomial& u, const Monomial& v) {
  return revlex_less(v, u);
}

Monomial multiply(const Monomial& u, const Monomial& v,
                  Exponent cap = kDefaultExponentCap);
Monomial gcd(const Monomial& u, const Monomial& v);
// v / gcd(v, u): the generator that v contributes to the colon (v) : u.
Monomial colon_quotient(const Monomial& v, const Monomial& u);
// Every exponent clamped to at most one.
Monomial squarefree_part(const Monomial& u);

// x_plus * u / x_minus, or nullopt when x_minus does not divide u or the
// raised exponent would exceed the cap. plus == minus returns u.
std::optional<Monomial> exchange(const Monomial& u, std::size_t plus,
                                 std::size_t minus,
                                 Exponent cap = kDefaultExponentCap);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const noexcept;
};

}  // namespace cmpoly
