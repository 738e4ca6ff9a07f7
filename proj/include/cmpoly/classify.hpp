#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "cmpoly/covers.hpp"
#include "cmpoly/exchange.hpp"
#include "cmpoly/ideal.hpp"
#include "cmpoly/quotients.hpp"

namespace cmpoly {

enum class Verdict {
  kPrincipal,
  kVeronese,
  kSquarefreeVeronese,
  kNotCohenMacaulay,
  kNotPolymatroidal,
};

std::string_view to_string(Verdict verdict);
std::optional<Verdict> verdict_from_string(std::string_view name);

// Generated by the squarefree parts of the generators.
MonomialIdeal radical(const MonomialIdeal& ideal);

struct FamilyMatch {
  bool matched = false;
  VarSet vars;  // support of the ideal
  Degree degree = 0;

  explicit operator bool() const noexcept { return matched; }
};

bool is_principal(const MonomialIdeal& ideal);
// G(I) is every degree-d monomial in the support variables.
FamilyMatch is_veronese(const MonomialIdeal& ideal);
// G(I) is every squarefree degree-d monomial in the support variables.
FamilyMatch is_squarefree_veronese(const MonomialIdeal& ideal);

struct Classification {
  Verdict verdict = Verdict::kNotPolymatroidal;
  bool principal = false;
  bool veronese = false;
  bool squarefree_veronese = false;
  VarSet support;
  Degree degree = 0;
  std::size_t num_vars = 0;
  std::size_t h = 0;
  std::size_t dim = 0;
  bool linear = false;
  std::optional<std::size_t> q;
  std::optional<std::size_t> depth;
  std::optional<ExchangeWitness> exchange_violation;
};

// Verdict precedence: NotPolymatroidal, then Principal > SquarefreeVeronese
// > Veronese, else NotCohenMacaulay. For polymatroidal ideals the verdict is
// re-derived from h == q + 1 and a mismatch throws kInternal.
Classification classify(const MonomialIdeal& ideal);

// Same, reusing reports computed by the caller for this ideal.
Classification classify(const MonomialIdeal& ideal, const CoverReport& covers,
                        const QuotientReport& quotients,
                        const ExchangeVerdict& exchange);

// For a Cohen-Macaulay polymatroidal ideal (kPrecondition otherwise), the
// radical restricted to its support is squarefree Veronese.
bool check_radical_lemma(const MonomialIdeal& ideal);

}  // namespace cmpoly
