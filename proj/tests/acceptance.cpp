// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmpoly/classify.hpp"
#include "cmpoly/covers.hpp"
#include "cmpoly/enumerate.hpp"
#include "cmpoly/exchange.hpp"
#include "cmpoly/quotients.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cmpoly;
using cmpoly::testing::ideal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + ("failed: " + what);
  }
}

std::string report_counts(const VerificationReport& r) {
  std::ostringstream s;
  s << "n=" << r.spec.n << " d=" << r.spec.d << " cap=" << r.spec.cap << ": ideals=" << r.ideals
    << " polymatroidal=" << r.polymatroidal << " cm=" << r.cohen_macaulay
    << " violations=" << r.violations();
  return s.str();
}

// Criterion 1
Outcome counterexample() {
  Outcome o;
  const MonomialIdeal I = cmpoly::testing::counterexample();
  const CoverReport covers = minimal_vertex_covers(I);
  expect(o, I.size() == 12 && I.num_vars() == 6, "12 generators in 6 variables");
  expect(o, is_matroidal(I), "matroidal");
  expect(o, covers.unmixed, "unmixed");
  expect(o, !is_cohen_macaulay(I), "not Cohen-Macaulay");
  expect(o, covers.h == 4, "h == 4");
  const auto brute = oracle::minimal_covers(oracle::to_vecs(I), 6);
  expect(o, std::all_of(brute.begin(), brute.end(), [](const auto& c) { return c.size() == 4; }),
         "all brute-force minimal covers have size 4");
  expect(o, brute.size() == covers.minimal_covers.size(), "cover enumeration matches brute force");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("h=") + std::to_string(covers.h) +
              " q=" + std::to_string(linear_quotients_revlex(I).q) +
              " covers=" + std::to_string(covers.minimal_covers.size());
  return o;
}

Outcome sweeps(std::initializer_list<EnumSpec> specs,
               const std::function<void(Outcome&, const VerificationReport&)>& extra) {
  Outcome o;
  for (const EnumSpec& spec : specs) {
    const VerificationReport r = verify_classification_serial(spec);
    expect(o, r.violations() == 0,
           report_counts(r) + (r.violation ? " (" + r.violation->what + ")" : ""));
    extra(o, r);
    o.detail += (o.detail.empty() ? "" : "; ") + report_counts(r);
  }
  return o;
}

// Criterion 2
Outcome matroidal_sweeps() {
  return sweeps({{4, 2, 1}, {5, 2, 1}, {6, 2, 1}, {5, 3, 1}},
                [](Outcome& o, const VerificationReport& r) {
                  const std::uint64_t expected = r.spec.n == 6 ? 32767 : r.spec.n == 4 ? 63 : 1023;
                  expect(o, r.ideals == expected, "ideal count " + std::to_string(expected));
                });
}

// Criterion 3
Outcome exponent_sweeps() {
  return sweeps({{3, 2, 2}, {2, 3, 3}}, [](Outcome& o, const VerificationReport& r) {
    const MonomialIdeal full =
        r.spec.n == 3 ? power(ideal("n=3;x1;x2;x3"), 2) : power(ideal("n=2;x1;x2"), 3);
    expect(o, std::count(r.cm_survivors.begin(), r.cm_survivors.end(), full) == 1,
           "full Veronese among the Cohen-Macaulay survivors");
  });
}

// Criterion 4
Outcome formula_consistency() {
  Outcome o;
  std::uint64_t linear = 0;
  std::uint64_t equal = 0;
  for (const EnumSpec& spec :
       {EnumSpec{4, 2, 1}, EnumSpec{5, 2, 1}, EnumSpec{6, 2, 1}, EnumSpec{5, 3, 1},
        EnumSpec{3, 2, 2}, EnumSpec{2, 3, 3}}) {
    for (const CensusRow& row : census(spec, CensusFilter::kAll)) {
      if (!row.linear) continue;
      ++linear;
      const std::size_t n = row.ideal.num_vars();
      const std::size_t dim = n - row.h;
      const std::size_t depth = n - *row.q - 1;
      expect(o, dim == row.dim && depth == *row.depth, "dimension and depth formulas");
      expect(o, depth <= dim, "depth <= dim");
      expect(o, (depth == dim) == *row.cohen_macaulay, "equality exactly on the CM set");
      if (row.polymatroidal) {
        const bool family = row.verdict == Verdict::kPrincipal ||
                            row.verdict == Verdict::kVeronese ||
                            row.verdict == Verdict::kSquarefreeVeronese;
        expect(o, family == (depth == dim), "CM polymatroidal exactly on the families");
      }
      equal += depth == dim;
      if (!o.pass) return o;
    }
  }
  o.detail = "linear=" + std::to_string(linear) + " depth==dim=" + std::to_string(equal) +
             " violations=0";
  return o;
}

// Criterion 5
Outcome named_examples() {
  Outcome o;
  auto check = [&](const std::string& name, const MonomialIdeal& I, std::size_t h, std::size_t q,
                   std::optional<std::size_t> dim_depth) {
    const CoverReport covers = minimal_vertex_covers(I);
    const QuotientReport quot = linear_quotients_revlex(I);
    expect(o, covers.h == h, name + " h");
    expect(o, quot.linear && quot.q == q, name + " q");
    expect(o, is_cohen_macaulay(I), name + " CM");
    if (dim_depth) {
      expect(o, covers.dim == *dim_depth && quot.depth == dim_depth, name + " dim=depth");
    }
  };
  check("squarefree Veronese n=4 d=2", cmpoly::testing::squarefree_veronese(4, 2), 3, 2,
        std::nullopt);
  check("Veronese n=2 d=2", ideal("n=2;x1^2;x1*x2;x2^2"), 2, 1, 0);
  for (const char* text : {"n=1;x1^4", "n=3;x1*x2*x3", "n=4;x1^2*x3", "n=5;x2^3*x4*x5^2"}) {
    check(text, ideal(text), 1, 0, std::nullopt);
  }
  o.detail = o.pass ? "all exact" : o.detail;
  return o;
}

// Criterion 6
Outcome exchange_walks() {
  Outcome o;
  std::uint64_t walks = 0;
  std::uint64_t ideals = 0;
  for (const EnumSpec& spec :
       {EnumSpec{4, 2, 1}, EnumSpec{5, 2, 1}, EnumSpec{6, 2, 1}, EnumSpec{5, 3, 1}}) {
    for (const MonomialIdeal& I : enumerate_ideals(spec)) {
      if (!is_polymatroidal(I)) continue;
      ++ideals;
      for (const Monomial& u : I.generators()) {
        for (const Monomial& v : I.generators()) {
          for (std::size_t i = 0; i < I.num_vars(); ++i) {
            if (u[i] >= v[i]) continue;
            ++walks;
            try {
              const ExchangePath p = exchange_path(I, u, v, i);
              if (auto defect = path_defect(I, p)) expect(o, false, *defect);
            } catch (const std::exception& e) {
              expect(o, false, e.what());
            }
            if (!o.pass) return o;
          }
        }
      }
    }
  }
  o.detail = "polymatroidal ideals=" + std::to_string(ideals) + " walks=" + std::to_string(walks) +
             " failures=0";
  return o;
}

// Criterion 7
MonomialIdeal random_family_member(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_int_distribution<Degree> degree(1, 3);
  std::vector<std::size_t> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = i;
  std::shuffle(vars.begin(), vars.end(), rng);
  const Degree d = degree(rng);
  switch (family(rng)) {
    case 0: {  // principal
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      Monomial u(n);
      for (Degree k = 0; k < d; ++k) {
        const std::size_t i = pick(rng);
        u.set(i, u[i] + 1);
      }
      return minimalize({u}, n);
    }
    case 1: {  // Veronese on a random support
      const std::size_t t = std::uniform_int_distribution<std::size_t>(1, n)(rng);
      vars.resize(t);
      std::sort(vars.begin(), vars.end());
      std::vector<Monomial> linear;
      for (std::size_t i : vars) linear.push_back(Monomial::variable(n, i));
      return power(minimalize(linear, n), static_cast<unsigned>(d));
    }
    default: {  // squarefree Veronese on a random support of size >= d
      const std::size_t t = std::uniform_int_distribution<std::size_t>(
          std::min<std::size_t>(d, n), n)(rng);
      vars.resize(t);
      const std::size_t dd = std::min<std::size_t>(d, t);
      oracle::Gens gens = oracle::all_monomials(n, vars, static_cast<int>(dd), 1);
      return oracle::from_vecs(n, gens);
    }
  }
}

Outcome product_closure() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> nvars(1, 5);
  std::bernoulli_distribution composite(0.3);
  auto draw = [&](std::size_t n) {
    MonomialIdeal I = random_family_member(rng, n);
    if (composite(rng)) I = product(I, random_family_member(rng, n));
    return I;
  };
  std::size_t largest = 0;
  for (int pair = 0; pair < 200; ++pair) {
    const std::size_t n = nvars(rng);
    const MonomialIdeal I = draw(n);
    const MonomialIdeal J = draw(n);
    expect(o, is_polymatroidal(I) && is_polymatroidal(J), "factors are polymatroidal");
    const MonomialIdeal P = product(I, J);
    largest = std::max(largest, P.size());
    expect(o, is_polymatroidal(P), "product of pair " + std::to_string(pair));
    if (!o.pass) return o;
  }
  o.detail = "pairs=200 largest product=" + std::to_string(largest) + " gens failures=0";
  return o;
}

// Criterion 8
Outcome q_invariance() {
  Outcome o;
  std::vector<MonomialIdeal> candidates;
  for (const EnumSpec& spec : {EnumSpec{4, 2, 1}, EnumSpec{3, 2, 2}, EnumSpec{5, 2, 1}}) {
    EnumSpec bounded = spec;
    bounded.min_gens = 2;
    bounded.max_gens = 6;
    for (const MonomialIdeal& I : enumerate_ideals(bounded)) {
      if (linear_quotients_revlex(I).linear) candidates.push_back(I);
    }
  }
  const std::size_t wanted = 50;
  std::size_t checked = 0;
  std::size_t orderings = 0;
  for (std::size_t k = 0; k < wanted && !candidates.empty(); ++k) {
    const MonomialIdeal& I = candidates[k * candidates.size() / wanted];
    const std::vector<std::size_t> qs = all_linear_quotient_orders(I);
    expect(o, !qs.empty(), "some ordering gives linear quotients");
    expect(o, std::all_of(qs.begin(), qs.end(), [&](std::size_t q) { return q == qs.front(); }),
           "q independent of ordering");
    orderings += qs.size();
    ++checked;
  }
  expect(o, checked == wanted, "50 ideals checked");
  o.detail += (o.detail.empty() ? "" : "; ") + ("ideals=" + std::to_string(checked) +
              " linear orderings=" + std::to_string(orderings));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counterexample reproduction", 1.0, counterexample},
      {2, "exhaustive classification, matroidal sweeps", 300.0, matroidal_sweeps},
      {3, "exhaustive classification with exponents", 60.0, exponent_sweeps},
      {4, "dimension/depth formula consistency", 0.0, formula_consistency},
      {5, "named-example invariants", 0.0, named_examples},
      {6, "constructive dual exchange walks", 0.0, exchange_walks},
      {7, "product closure on 200 random pairs", 60.0, product_closure},
      {8, "q independent of linear-quotient ordering", 0.0, q_invariance},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      o.pass = false;
      o.detail += "; exceeded time limit " + std::to_string(c.time_limit_s) + " s";
    }
    failures += !o.pass;
    std::printf("[%s] criterion %d: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                seconds, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
