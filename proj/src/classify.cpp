#include "cmpoly/classify.hpp"

#include <array>
#include <string>

#include "cmpoly/error.hpp"
#include "combinatorics.hpp"

namespace cmpoly {
namespace {

using detail::binomial;

constexpr std::array<std::string_view, 5> kVerdictNames = {
    "Principal", "Veronese", "SquarefreeVeronese", "NotCohenMacaulay",
    "NotPolymatroidal"};

bool has_count(const MonomialIdeal& ideal, std::optional<std::uint64_t> count) {
  return count && *count == ideal.size();
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  return kVerdictNames[static_cast<std::size_t>(verdict)];
}

std::optional<Verdict> verdict_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kVerdictNames.size(); ++k) {
    if (kVerdictNames[k] == name) return static_cast<Verdict>(k);
  }
  return std::nullopt;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(squarefree_part(g));
  return minimalize(std::move(gens), ideal.num_vars());
}

bool is_principal(const MonomialIdeal& ideal) { return ideal.size() == 1; }

// Generators are distinct degree-d monomials in the support variables, so
// equality with the family reduces to counting.
FamilyMatch is_veronese(const MonomialIdeal& ideal) {
  FamilyMatch match;
  const auto d = common_degree(ideal);
  if (!d || *d == 0) return match;
  match.vars = ideal.support();
  match.degree = *d;
  const std::uint64_t t = match.vars.size();
  match.matched = has_count(ideal, binomial(t + *d - 1, *d));
  return match;
}

FamilyMatch is_squarefree_veronese(const MonomialIdeal& ideal) {
  FamilyMatch match;
  const auto d = common_degree(ideal);
  if (!d || *d == 0) return match;
  match.vars = ideal.support();
  match.degree = *d;
  for (const Monomial& g : ideal.generators()) {
    if (!g.is_squarefree()) return match;
  }
  match.matched = has_count(ideal, binomial(match.vars.size(), *d));
  return match;
}

Classification classify(const MonomialIdeal& ideal) {
  require_proper_equigenerated(ideal);
  const ExchangeVerdict exchange = check_exchange(ideal);
  return classify(ideal, minimal_vertex_covers(ideal),
                  linear_quotients_revlex(ideal), exchange);
}

Classification classify(const MonomialIdeal& ideal, const CoverReport& covers,
                        const QuotientReport& quotients,
                        const ExchangeVerdict& exchange) {
  Classification out;
  out.degree = require_proper_equigenerated(ideal);
  out.num_vars = ideal.num_vars();
  out.support = ideal.support();
  out.h = covers.h;
  out.dim = covers.dim;
  out.linear = quotients.linear;
  if (quotients.linear) {
    out.q = quotients.q;
    out.depth = quotients.depth;
  }
  out.principal = is_principal(ideal);
  out.squarefree_veronese = is_squarefree_veronese(ideal).matched;
  out.veronese = is_veronese(ideal).matched;

  if (!exchange.holds) {
    out.verdict = Verdict::kNotPolymatroidal;
    out.exchange_violation = exchange.violation;
    return out;
  }
  if (out.principal) {
    out.verdict = Verdict::kPrincipal;
  } else if (out.squarefree_veronese) {
    out.verdict = Verdict::kSquarefreeVeronese;
  } else if (out.veronese) {
    out.verdict = Verdict::kVeronese;
  } else {
    out.verdict = Verdict::kNotCohenMacaulay;
  }

  if (!quotients.linear) {
    throw Error(ErrorKind::kInternal,
                "polymatroidal ideal without linear quotients in revlex order");
  }
  const bool cm = covers.h == quotients.q + 1;
  const bool in_family = out.verdict != Verdict::kNotCohenMacaulay;
  if (cm != in_family) {
    throw Error(ErrorKind::kInternal,
                "verdict " + std::string(to_string(out.verdict)) +
                    " disagrees with h=" + std::to_string(covers.h) +
                    ", q=" + std::to_string(quotients.q));
  }
  return out;
}

bool check_radical_lemma(const MonomialIdeal& ideal) {
  if (!is_polymatroidal(ideal)) {
    throw Error(ErrorKind::kPrecondition, "ideal is not polymatroidal");
  }
  if (!is_cohen_macaulay(ideal)) {
    throw Error(ErrorKind::kPrecondition, "ideal is not Cohen-Macaulay");
  }
  return is_squarefree_veronese(shrink_to_support(radical(ideal)).ideal).matched;
}

}  // namespace cmpoly
