#pragma once

#include <string>
#include <string_view>

#include "cmpoly/io.hpp"

namespace cmpoly::testing {

inline Monomial mono(std::size_t n, std::string_view text) { return parse_monomial(text, n); }

// "n=3; x1*x2; x2*x3" -> ideal (semicolons stand in for newlines).
inline MonomialIdeal ideal(std::string text) {
  for (char& c : text) {
    if (c == ';') c = '\n';
  }
  return parse_ideal(text);
}

inline MonomialIdeal squarefree_veronese(std::size_t n, std::size_t d) {
  std::vector<Monomial> gens;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != d) continue;
    Monomial u(n);
    for (std::size_t i = 0; i < n; ++i) u.set(i, mask >> i & 1u);
    gens.push_back(u);
  }
  return minimalize(std::move(gens), n);
}

inline MonomialIdeal counterexample() {
  return ideal(
      "n=6;x1*x3;x1*x4;x1*x5;x1*x6;x2*x3;x2*x4;x2*x5;x2*x6;x3*x5;x3*x6;x4*x5;x4*x6");
}

}  // namespace cmpoly::testing
