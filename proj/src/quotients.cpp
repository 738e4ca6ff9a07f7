#include "cmpoly/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cmpoly/covers.hpp"
#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

ColonStep colon_step(std::span<const Monomial> prefix, const Monomial& u) {
  ColonStep step;
  step.generators = colon_by_monomial(prefix, u);
  step.linear = std::all_of(step.generators.begin(), step.generators.end(),
                            [](const Monomial& g) { return g.degree() == 1; });
  if (step.linear) {
    for (const Monomial& g : step.generators) step.vars.push_back(g.support().front());
    std::sort(step.vars.begin(), step.vars.end());
  }
  return step;
}

QuotientReport run_colons(std::size_t n, std::vector<Monomial> ordering) {
  QuotientReport report;
  report.num_vars = n;
  report.ordering = std::move(ordering);
  report.linear = true;
  const std::span<const Monomial> all(report.ordering);
  for (std::size_t j = 1; j < all.size(); ++j) {
    ColonStep step = colon_step(all.first(j), all[j]);
    const bool linear = step.linear;
    if (linear) {
      report.q_values.push_back(step.vars.size());
      report.q = std::max(report.q, step.vars.size());
    }
    report.steps.push_back(std::move(step));
    if (!linear) {
      report.linear = false;
      report.failed_step = report.steps.size() - 1;
      break;
    }
  }
  if (report.linear) report.depth = n - report.q - 1;
  return report;
}

}  // namespace

std::vector<Monomial> colon_by_monomial(std::span<const Monomial> gens,
                                        const Monomial& u) {
  std::vector<Monomial> quotients;
  quotients.reserve(gens.size());
  for (const Monomial& v : gens) quotients.push_back(colon_quotient(v, u));
  const MonomialIdeal colon = minimalize(std::move(quotients), u.size());
  return {colon.generators().begin(), colon.generators().end()};
}

QuotientReport linear_quotients(const MonomialIdeal& ideal,
                                std::span<const Monomial> ordering) {
  require_proper(ideal);
  std::vector<Monomial> sorted(ordering.begin(), ordering.end());
  std::sort(sorted.begin(), sorted.end(), revlex_greater);
  const bool permutation =
      sorted.size() == ideal.size() &&
      std::equal(sorted.begin(), sorted.end(), ideal.generators().begin());
  if (!permutation) {
    throw Error(ErrorKind::kPrecondition,
                "ordering is not a permutation of the minimal generators");
  }
  for (std::size_t j = 1; j < ordering.size(); ++j) {
    if (ordering[j].degree() < ordering[j - 1].degree()) {
      throw Error(ErrorKind::kPrecondition, "ordering decreases in degree");
    }
  }
  return run_colons(ideal.num_vars(), {ordering.begin(), ordering.end()});
}

QuotientReport linear_quotients_revlex(const MonomialIdeal& ideal) {
  require_proper_equigenerated(ideal);
  return run_colons(ideal.num_vars(),
                    {ideal.generators().begin(), ideal.generators().end()});
}

std::size_t depth_quotient(const MonomialIdeal& ideal) {
  const QuotientReport report = linear_quotients_revlex(ideal);
  if (!report.linear) {
    throw Error(ErrorKind::kNoLinearQuotients,
                "revlex colon " + std::to_string(*report.failed_step + 2) +
                    " is not generated by variables");
  }
  return *report.depth;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
  const QuotientReport report = linear_quotients_revlex(ideal);
  if (!report.linear) {
    throw Error(ErrorKind::kNoLinearQuotients,
                "Cohen-Macaulay status undecided: revlex colon " +
                    std::to_string(*report.failed_step + 2) +
                    " is not generated by variables");
  }
  return vertex_cover_number(ideal) == report.q + 1;
}

std::vector<std::size_t> all_linear_quotient_orders(const MonomialIdeal& ideal) {
  require_proper(ideal);
  if (ideal.size() > kMaxExhaustiveOrderGens) {
    throw Error(ErrorKind::kBudgetExceeded,
                "exhaustive ordering search needs at most " +
                    std::to_string(kMaxExhaustiveOrderGens) + " generators");
  }
  std::vector<std::size_t> index(ideal.size());
  std::iota(index.begin(), index.end(), 0);
  std::vector<std::size_t> qs;
  do {
    std::vector<Monomial> ordering;
    for (std::size_t k : index) ordering.push_back(ideal[k]);
    const QuotientReport report = linear_quotients(ideal, ordering);
    if (report.linear) qs.push_back(report.q);
  } while (std::next_permutation(index.begin(), index.end()));
  return qs;
}

}  // namespace cmpoly
