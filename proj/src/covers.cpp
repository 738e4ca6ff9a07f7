#include "cmpoly/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

using Mask = std::uint64_t;

Mask support_mask(const Monomial& u) {
  Mask m = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) m |= Mask{1} << i;
  }
  return m;
}

// Minimal edges of the support hypergraph. Non-minimal edges are hit by
// every transversal of the minimal ones.
std::vector<Mask> support_edges(const MonomialIdeal& ideal) {
  std::vector<Mask> edges;
  for (const Monomial& g : ideal.generators()) edges.push_back(support_mask(g));
  std::sort(edges.begin(), edges.end(), [](Mask a, Mask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                : a < b;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Mask> minimal;
  for (Mask e : edges) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](Mask f) { return (f & e) == f; });
    if (!redundant) minimal.push_back(e);
  }
  return minimal;
}

class TransversalSearch {
 public:
  explicit TransversalSearch(std::vector<Mask> edges) : edges_(std::move(edges)) {}

  std::vector<Mask> run() {
    branch(0);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return found_;
  }

 private:
  // Every chosen vertex still owns an edge that no other chosen vertex hits.
  // Private edges only disappear as the set grows, so a failure prunes the
  // whole branch.
  bool every_vertex_private(Mask chosen) const {
    for (Mask rest = chosen; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      const Mask others = chosen & ~bit;
      const bool has_private = std::any_of(edges_.begin(), edges_.end(), [&](Mask e) {
        return (e & bit) != 0 && (e & others) == 0;
      });
      if (!has_private) return false;
    }
    return true;
  }

  void branch(Mask chosen) {
    const auto open = std::find_if(edges_.begin(), edges_.end(),
                                   [&](Mask e) { return (e & chosen) == 0; });
    if (open == edges_.end()) {
      found_.push_back(chosen);
      return;
    }
    for (Mask rest = *open; rest != 0; rest &= rest - 1) {
      const Mask next = chosen | (rest & (~rest + 1));
      if (every_vertex_private(next)) branch(next);
    }
  }

  std::vector<Mask> edges_;
  std::vector<Mask> found_;
};

VarSet to_varset(Mask m) {
  VarSet out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

void require_small(const MonomialIdeal& ideal) {
  if (ideal.num_vars() > kMaxCoverVars) {
    throw Error(ErrorKind::kStructural,
                "vertex covers support at most " + std::to_string(kMaxCoverVars) +
                    " variables");
  }
}

}  // namespace

bool is_vertex_cover(const MonomialIdeal& ideal, std::span<const std::size_t> vars) {
  require_proper(ideal);
  std::vector<bool> in_cover(ideal.num_vars(), false);
  for (std::size_t v : vars) {
    if (v >= ideal.num_vars()) {
      throw Error(ErrorKind::kStructural,
                  "variable x" + std::to_string(v + 1) + " outside the ring");
    }
    in_cover[v] = true;
  }
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) {
                       for (std::size_t i = 0; i < g.size(); ++i) {
                         if (g[i] != 0 && in_cover[i]) return true;
                       }
                       return false;
                     });
}

CoverReport minimal_vertex_covers(const MonomialIdeal& ideal) {
  require_proper(ideal);
  require_small(ideal);
  std::vector<Mask> masks = TransversalSearch(support_edges(ideal)).run();

  CoverReport report;
  for (Mask m : masks) report.minimal_covers.push_back(to_varset(m));
  std::sort(report.minimal_covers.begin(), report.minimal_covers.end());

  std::size_t lo = ideal.num_vars();
  std::size_t hi = 0;
  for (const VarSet& c : report.minimal_covers) {
    lo = std::min(lo, c.size());
    hi = std::max(hi, c.size());
  }
  report.h = lo;
  report.unmixed = lo == hi;
  report.dim = ideal.num_vars() - lo;
  return report;
}

std::size_t vertex_cover_number(const MonomialIdeal& ideal) {
  return minimal_vertex_covers(ideal).h;
}

std::size_t dim_quotient(const MonomialIdeal& ideal) {
  return minimal_vertex_covers(ideal).dim;
}

}  // namespace cmpoly
