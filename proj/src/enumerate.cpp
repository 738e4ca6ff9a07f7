#include "cmpoly/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "cmpoly/covers.hpp"
#include "cmpoly/error.hpp"
#include "cmpoly/exchange.hpp"
#include "cmpoly/quotients.hpp"
#include "combinatorics.hpp"
#include "sweep.hpp"

namespace cmpoly {
namespace {

using detail::binomial;

constexpr std::size_t kMaxPoolSize = 63;

void fill_pool(const EnumSpec& spec, std::size_t i, Degree left, Monomial& cur,
               std::vector<Monomial>& out) {
  if (i + 1 == spec.n) {
    if (left <= spec.cap) {
      cur.set(i, static_cast<Exponent>(left));
      out.push_back(cur);
    }
    return;
  }
  const Degree top = std::min<Degree>(left, spec.cap);
  for (Degree e = 0; e <= top; ++e) {
    cur.set(i, static_cast<Exponent>(e));
    fill_pool(spec, i + 1, left - e, cur, out);
  }
  cur.set(i, 0);
}

MonomialIdeal ideal_from_mask(const std::vector<Monomial>& pool, std::size_t n,
                              std::uint64_t mask) {
  std::vector<Monomial> gens;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    gens.push_back(pool[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return minimalize(std::move(gens), n);
}

// All reports for one ideal, shared by census rows and verification.
struct Evaluation {
  CoverReport covers;
  QuotientReport quotients;
  ExchangeVerdict exchange;
  CensusRow row;
  std::optional<std::string> inconsistency;
};

Evaluation evaluate(const MonomialIdeal& ideal, std::uint64_t index) {
  Evaluation ev;
  ev.covers = minimal_vertex_covers(ideal);
  ev.quotients = linear_quotients_revlex(ideal);
  ev.exchange = check_exchange(ideal);

  CensusRow& row = ev.row;
  row.index = index;
  row.ideal = ideal;
  row.polymatroidal = ev.exchange.holds;
  row.matroidal = row.polymatroidal &&
                  std::all_of(ideal.generators().begin(), ideal.generators().end(),
                              [](const Monomial& g) { return g.is_squarefree(); });
  row.linear = ev.quotients.linear;
  row.unmixed = ev.covers.unmixed;
  row.h = ev.covers.h;
  row.dim = ev.covers.dim;
  if (row.linear) {
    row.q = ev.quotients.q;
    row.depth = ev.quotients.depth;
    row.cohen_macaulay = row.h == ev.quotients.q + 1;
  }
  try {
    row.verdict = classify(ideal, ev.covers, ev.quotients, ev.exchange).verdict;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInternal) throw;
    ev.inconsistency = e.what();
    row.verdict = Verdict::kNotCohenMacaulay;
  }
  return ev;
}

// First violated property of an evaluated ideal.
std::optional<std::string> find_violation(const MonomialIdeal& ideal,
                                          const Evaluation& ev,
                                          bool check_paths,
                                          std::uint64_t& paths_checked) {
  const CensusRow& row = ev.row;
  if (row.linear && row.h > ev.quotients.q + 1) {
    return "depth exceeds dim: h=" + std::to_string(row.h) +
           " > q+1=" + std::to_string(ev.quotients.q + 1);
  }
  if (vertex_cover_number(radical(ideal)) != row.h) {
    return "h differs from h of the radical";
  }
  if (!row.polymatroidal) return std::nullopt;

  if (!row.linear) return "polymatroidal but revlex quotients are not linear";
  if (!check_dual_exchange(ideal).holds) return "dual exchange fails";
  if (ev.inconsistency) return *ev.inconsistency;
  if (*row.cohen_macaulay && !check_radical_lemma(ideal)) {
    return "radical of a Cohen-Macaulay polymatroidal ideal is not squarefree Veronese";
  }
  if (check_paths) {
    const std::size_t n = ideal.num_vars();
    for (const Monomial& u : ideal.generators()) {
      for (const Monomial& v : ideal.generators()) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!(u[i] < v[i])) continue;
          ++paths_checked;
          try {
            const ExchangePath path = exchange_path(ideal, u, v, i);
            if (auto defect = path_defect(ideal, path)) return "exchange walk: " + *defect;
          } catch (const Error& e) {
            return std::string("exchange walk failed: ") + e.what();
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool merge_into(VerificationReport& out, VerificationReport&& part) {
  if (out.violation) return false;
  out.ideals += part.ideals;
  out.polymatroidal += part.polymatroidal;
  out.matroidal += part.matroidal;
  out.linear += part.linear;
  out.cohen_macaulay += part.cohen_macaulay;
  out.unmixed_not_cm += part.unmixed_not_cm;
  out.paths_checked += part.paths_checked;
  for (std::size_t k = 0; k < out.verdicts.size(); ++k) out.verdicts[k] += part.verdicts[k];
  out.cm_survivors.insert(out.cm_survivors.end(),
                          std::make_move_iterator(part.cm_survivors.begin()),
                          std::make_move_iterator(part.cm_survivors.end()));
  if (part.violation) {
    out.violation = std::move(part.violation);
    return false;
  }
  return true;
}

struct VerifyAcc {
  VerificationReport report;
  bool merge(VerifyAcc&& other) { return merge_into(report, std::move(other.report)); }
};

// Exceptions must not leave an OpenMP region, so a failed cross-check is
// carried out of the sweep and rethrown afterwards.
struct CensusAcc {
  std::vector<CensusRow> rows;
  std::optional<std::string> inconsistency;
  bool merge(CensusAcc&& other) {
    if (inconsistency) return false;
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
                std::make_move_iterator(other.rows.end()));
    inconsistency = std::move(other.inconsistency);
    return !inconsistency;
  }
};

// The parts of a sweep every kernel needs: the pool, the space, and the
// ideal at a given index (nullopt when symmetry reduction skips it).
class SweepContext {
 public:
  explicit SweepContext(const EnumSpec& spec)
      : spec_(spec), pool_((validate(spec), generator_pool(spec))),
        space_(subset_space(spec, pool_.size())) {}

  std::uint64_t size() const { return space_.size(); }

  std::optional<MonomialIdeal> ideal_at(std::uint64_t index) const {
    MonomialIdeal ideal = ideal_from_mask(pool_, spec_.n, space_.mask(index));
    if (spec_.modulo_symmetry && canonical_form(ideal) != ideal) return std::nullopt;
    return ideal;
  }

 private:
  EnumSpec spec_;
  std::vector<Monomial> pool_;
  SubsetSpace space_;
};

auto verify_visitor(const SweepContext& ctx, const SweepOptions& options) {
  return [&ctx, &options](std::uint64_t index, VerifyAcc& acc) {
    const auto ideal = ctx.ideal_at(index);
    if (!ideal) return true;
    VerificationReport& r = acc.report;
    const Evaluation ev = evaluate(*ideal, index);
    const CensusRow& row = ev.row;
    ++r.ideals;
    r.polymatroidal += row.polymatroidal;
    r.matroidal += row.matroidal;
    r.linear += row.linear;
    ++r.verdicts[static_cast<std::size_t>(row.verdict)];
    if (row.polymatroidal && row.cohen_macaulay.value_or(false)) {
      ++r.cohen_macaulay;
      r.cm_survivors.push_back(*ideal);
    }
    if (row.polymatroidal && row.unmixed && !row.cohen_macaulay.value_or(false)) {
      ++r.unmixed_not_cm;
    }
    if (auto what = find_violation(*ideal, ev, options.check_paths, r.paths_checked)) {
      r.violation = Violation{row, *what};
      return false;
    }
    return true;
  };
}

template <typename Fn>
VerificationReport timed(const EnumSpec& spec, Fn&& run) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = run();
  report.spec = spec;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool keep_row(CensusFilter filter, const CensusRow& row) {
  switch (filter) {
    case CensusFilter::kAll:
      return true;
    case CensusFilter::kPolymatroidal:
      return row.polymatroidal;
    case CensusFilter::kUnmixedNotCm:
      return row.polymatroidal && row.unmixed && !row.cohen_macaulay.value_or(false);
  }
  return false;
}

}  // namespace

void validate(const EnumSpec& spec) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kPrecondition, "enumeration: " + what);
  };
  if (spec.n == 0) fail("n must be at least 1");
  if (spec.n > kMaxCoverVars) fail("n must be at most 64");
  if (spec.d == 0) fail("d must be at least 1");
  if (spec.cap == 0 || spec.cap > spec.d) fail("cap must satisfy 1 <= cap <= d");
  if (spec.min_gens == 0) fail("min-gens must be at least 1");
  if (spec.max_gens && *spec.max_gens < spec.min_gens) fail("max-gens below min-gens");
}

std::vector<Monomial> generator_pool(const EnumSpec& spec) {
  validate(spec);
  std::vector<Monomial> pool;
  Monomial cur(spec.n);
  fill_pool(spec, 0, spec.d, cur, pool);
  std::sort(pool.begin(), pool.end(), revlex_greater);
  return pool;
}

SubsetSpace::SubsetSpace(std::size_t pool_size, std::size_t min_size,
                         std::size_t max_size)
    : pool_size_(pool_size), min_size_(std::max<std::size_t>(min_size, 1)) {
  if (pool_size > kMaxPoolSize) {
    throw Error(ErrorKind::kBudgetExceeded,
                "generator pool of " + std::to_string(pool_size) +
                    " monomials exceeds the limit of " + std::to_string(kMaxPoolSize));
  }
  max_size = std::min(max_size, pool_size);
  counter_order_ = min_size_ == 1 && max_size == pool_size;
  if (counter_order_) {
    total_ = (std::uint64_t{1} << pool_size) - 1;
    return;
  }
  for (std::size_t k = min_size_; k <= max_size; ++k) {
    block_sizes_.push_back(*binomial(pool_size, k));
    total_ += block_sizes_.back();
  }
}

std::uint64_t SubsetSpace::mask(std::uint64_t index) const {
  if (index >= total_) throw Error(ErrorKind::kStructural, "subset index out of range");
  if (counter_order_) return index + 1;
  std::size_t block = 0;
  while (index >= block_sizes_[block]) index -= block_sizes_[block++];
  // Colex unranking through the combinatorial number system.
  std::uint64_t mask = 0;
  for (std::size_t i = min_size_ + block; i >= 1; --i) {
    std::uint64_t c = i - 1;
    while (c + 1 < pool_size_ && *binomial(c + 1, i) <= index) ++c;
    mask |= std::uint64_t{1} << c;
    index -= *binomial(c, i);
  }
  return mask;
}

SubsetSpace subset_space(const EnumSpec& spec, std::size_t pool_size) {
  SubsetSpace space(pool_size, spec.min_gens, spec.max_gens.value_or(pool_size));
  const std::uint64_t limit =
      spec.modulo_symmetry ? kSymmetricSubsetBudget : kSubsetBudget;
  if (space.size() > limit) {
    throw Error(ErrorKind::kBudgetExceeded,
                "search space has " + std::to_string(space.size()) +
                    " generator sets but the limit is " + std::to_string(limit) +
                    (spec.modulo_symmetry
                         ? "; tighten --min-gens/--max-gens"
                         : "; tighten --min-gens/--max-gens or enable --mod-sym (limit " +
                               std::to_string(kSymmetricSubsetBudget) + ")"));
  }
  return space;
}

MonomialIdeal canonical_form(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::vector<Exponent>> profile(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Monomial& g : ideal.generators()) profile[i].push_back(g[i]);
    std::sort(profile[i].begin(), profile[i].end(), std::greater<>());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return profile[a] > profile[b];
  });
  // Runs of equal profile may be permuted freely among themselves.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s + 1;
    while (e < n && profile[order[e]] == profile[order[s]]) ++e;
    runs.emplace_back(s, e);
    s = e;
  }

  std::optional<MonomialIdeal> best;
  std::vector<std::size_t> perm(n);
  for (;;) {
    for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
    MonomialIdeal image = permute_variables(ideal, perm);
    if (!best || std::lexicographical_compare(
                     image.generators().begin(), image.generators().end(),
                     best->generators().begin(), best->generators().end())) {
      best = std::move(image);
    }
    // Odometer over the runs.
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
      if (std::next_permutation(first, last)) break;
    }
    if (r == runs.size()) break;
  }
  return *best;
}

std::vector<MonomialIdeal> enumerate_ideals(const EnumSpec& spec) {
  const SweepContext ctx(spec);
  std::vector<MonomialIdeal> out;
  for (std::uint64_t index = 0; index < ctx.size(); ++index) {
    if (auto ideal = ctx.ideal_at(index)) out.push_back(std::move(*ideal));
  }
  return out;
}

CensusRow analyze(const MonomialIdeal& ideal, std::uint64_t index) {
  Evaluation ev = evaluate(ideal, index);
  if (ev.inconsistency) throw Error(ErrorKind::kInternal, *ev.inconsistency);
  return std::move(ev.row);
}

VerificationReport verify_classification_serial(const EnumSpec& spec,
                                                const SweepOptions& options) {
  return timed(spec, [&] {
    const SweepContext ctx(spec);
    return detail::sweep_serial<VerifyAcc>(ctx.size(), verify_visitor(ctx, options))
        .report;
  });
}

VerificationReport verify_classification_parallel(const EnumSpec& spec,
                                                  const SweepOptions& options) {
  return timed(spec, [&] {
    const SweepContext ctx(spec);
    return detail::sweep_parallel<VerifyAcc>(ctx.size(), options.workers,
                                             verify_visitor(ctx, options))
        .report;
  });
}

VerificationReport verify_classification(const EnumSpec& spec,
                                         const SweepOptions& options) {
  return options.workers == 1 ? verify_classification_serial(spec, options)
                              : verify_classification_parallel(spec, options);
}

std::vector<CensusRow> census(const EnumSpec& spec, CensusFilter filter,
                              int workers) {
  const SweepContext ctx(spec);
  auto visit = [&](std::uint64_t index, CensusAcc& acc) {
    const auto ideal = ctx.ideal_at(index);
    if (!ideal) return true;
    Evaluation ev = evaluate(*ideal, index);
    if (ev.inconsistency) {
      acc.inconsistency = std::move(ev.inconsistency);
      return false;
    }
    if (keep_row(filter, ev.row)) acc.rows.push_back(std::move(ev.row));
    return true;
  };
  CensusAcc acc = workers == 1
                      ? detail::sweep_serial<CensusAcc>(ctx.size(), visit)
                      : detail::sweep_parallel<CensusAcc>(ctx.size(), workers, visit);
  if (acc.inconsistency) throw Error(ErrorKind::kInternal, *acc.inconsistency);
  return std::move(acc.rows);
}

std::vector<CensusRow> census_unmixed(const EnumSpec& spec, int workers) {
  return census(spec, CensusFilter::kUnmixedNotCm, workers);
}

}  // namespace cmpoly
