#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmpoly/classify.hpp"
#include "cmpoly/ideal.hpp"

namespace cmpoly {

// Search space: every nonempty set of degree-d monomials in n variables with
// all exponents <= cap, optionally bounded in size and reduced modulo
// permutations of the variables. Equal-degree sets are automatically
// antichains, so each subset is a minimal generating set.
struct EnumSpec {
  std::size_t n = 0;
  Degree d = 0;
  Exponent cap = 1;
  std::size_t min_gens = 1;
  std::optional<std::size_t> max_gens;
  bool modulo_symmetry = false;
};

// Subsets a sweep may visit without and with symmetry reduction.
inline constexpr std::uint64_t kSubsetBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kSymmetricSubsetBudget = std::uint64_t{1} << 28;

// Throws kPrecondition for an ill-formed spec.
void validate(const EnumSpec& spec);

// The degree-d monomials with exponents <= cap, descending revlex.
std::vector<Monomial> generator_pool(const EnumSpec& spec);

// Random-access view of the subsets of a pool. Without size bounds the
// index-th subset is the bit pattern index + 1 (binary counter order). With
// bounds, subsets are grouped by size and listed in colex order within each
// size.
class SubsetSpace {
 public:
  SubsetSpace(std::size_t pool_size, std::size_t min_size, std::size_t max_size);

  std::uint64_t size() const noexcept { return total_; }
  // Bit k set iff pool member k is in the subset.
  std::uint64_t mask(std::uint64_t index) const;

 private:
  std::size_t pool_size_;
  std::size_t min_size_;
  bool counter_order_;
  std::vector<std::uint64_t> block_sizes_;
  std::uint64_t total_ = 0;
};

// Subset space for the spec; throws kBudgetExceeded with the limit when the
// space is too large.
SubsetSpace subset_space(const EnumSpec& spec, std::size_t pool_size);

// Smallest image of the ideal under variable permutations, comparing the
// descending-revlex generator lists lexicographically. Only permutations
// that sort variables by their exponent profile are tried.
MonomialIdeal canonical_form(const MonomialIdeal& ideal);

// Every ideal of the search space in sweep order.
std::vector<MonomialIdeal> enumerate_ideals(const EnumSpec& spec);

struct CensusRow {
  std::uint64_t index = 0;  // position in the subset space
  MonomialIdeal ideal;
  bool polymatroidal = false;
  bool matroidal = false;
  bool linear = false;
  bool unmixed = false;
  std::size_t h = 0;
  std::size_t dim = 0;
  std::optional<std::size_t> q;
  std::optional<std::size_t> depth;
  std::optional<bool> cohen_macaulay;  // unknown without linear quotients
  Verdict verdict = Verdict::kNotPolymatroidal;
};

// Invariants of one proper equigenerated ideal.
CensusRow analyze(const MonomialIdeal& ideal, std::uint64_t index = 0);

struct SweepOptions {
  // 1 runs the serial reference loop; 0 uses every available thread.
  int workers = 1;
  // Run the exchange walk for every valid (u, v, i) of polymatroidal ideals.
  bool check_paths = true;
};

struct Violation {
  CensusRow row;
  std::string what;
};

struct VerificationReport {
  EnumSpec spec;
  std::uint64_t ideals = 0;
  std::uint64_t polymatroidal = 0;
  std::uint64_t matroidal = 0;
  std::uint64_t linear = 0;
  std::uint64_t cohen_macaulay = 0;
  std::uint64_t unmixed_not_cm = 0;
  std::uint64_t paths_checked = 0;
  std::array<std::uint64_t, 5> verdicts{};  // indexed by Verdict
  // Cohen-Macaulay polymatroidal ideals in sweep order.
  std::vector<MonomialIdeal> cm_survivors;
  std::optional<Violation> violation;
  double seconds = 0;

  std::uint64_t violations() const noexcept { return violation ? 1 : 0; }
};

// Sweeps the space and checks, per ideal: linear quotients imply h <= q + 1;
// h agrees with the radical's; and for polymatroidal ideals, linear
// quotients in revlex order, dual exchange, Cohen-Macaulay exactly on the
// three families, the radical lemma on the Cohen-Macaulay ones, and every
// exchange walk. Stops at the first violation.
VerificationReport verify_classification(const EnumSpec& spec,
                                         const SweepOptions& options = {});
VerificationReport verify_classification_serial(const EnumSpec& spec,
                                                const SweepOptions& options = {});
VerificationReport verify_classification_parallel(const EnumSpec& spec,
                                                  const SweepOptions& options);

enum class CensusFilter { kAll, kPolymatroidal, kUnmixedNotCm };

std::vector<CensusRow> census(const EnumSpec& spec, CensusFilter filter,
                              int workers = 1);
// Polymatroidal ideals that are unmixed but not Cohen-Macaulay.
std::vector<CensusRow> census_unmixed(const EnumSpec& spec, int workers = 1);

}  // namespace cmpoly
