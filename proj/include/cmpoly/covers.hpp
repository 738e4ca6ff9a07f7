#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cmpoly/ideal.hpp"

namespace cmpoly {

// Largest ambient variable count the cover enumeration supports.
inline constexpr std::size_t kMaxCoverVars = 64;

struct CoverReport {
  // Each cover sorted ascending; the list sorted lexicographically.
  std::vector<VarSet> minimal_covers;
  std::size_t h = 0;  // minimum cover size
  bool unmixed = false;
  std::size_t dim = 0;  // n - h
};

// Every generator is divisible by some variable in `vars`.
bool is_vertex_cover(const MonomialIdeal& ideal, std::span<const std::size_t> vars);

// All minimal vertex covers, i.e. the minimal transversals of the hypergraph
// of generator supports. Requires a proper ideal with n <= kMaxCoverVars.
CoverReport minimal_vertex_covers(const MonomialIdeal& ideal);

std::size_t vertex_cover_number(const MonomialIdeal& ideal);

// Krull dimension of S/I: n - h(I).
std::size_t dim_quotient(const MonomialIdeal& ideal);

}  // namespace cmpoly
