#include "cmpoly/report.hpp"

#include <sstream>

#include "cmpoly/io.hpp"

namespace cmpoly {
namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::json one_based(const VarSet& vars) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v : vars) out.push_back(v + 1);
  return out;
}

nlohmann::json monomial_list(std::span<const Monomial> gens) {
  nlohmann::json out = nlohmann::json::array();
  for (const Monomial& g : gens) out.push_back(format_monomial(g));
  return out;
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

template <typename T>
std::string optional_text(const std::optional<T>& value, const char* missing) {
  if (!value) return missing;
  if constexpr (std::is_same_v<T, bool>) {
    return yes_no(*value);
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

std::string format_varset(const VarSet& vars) {
  std::string out = "{";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(vars[k] + 1);
  }
  return out + "}";
}

nlohmann::json to_json(const ExchangeWitness& w) {
  nlohmann::json out = {{"u", format_monomial(w.u)},
                        {"v", format_monomial(w.v)},
                        {"i", w.i + 1}};
  out["j"] = w.j ? nlohmann::json(*w.j + 1) : nlohmann::json(nullptr);
  out["result"] = w.result ? nlohmann::json(format_monomial(*w.result))
                           : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const ExchangePath& p) {
  return {{"u", format_monomial(p.u)},
          {"v", format_monomial(p.start)},
          {"i", p.target + 1},
          {"steps", monomial_list(p.steps)},
          {"distances", p.distances},
          {"terminal", format_monomial(p.terminal)},
          {"j0", p.balancing_index + 1},
          {"result", format_monomial(p.result)}};
}

nlohmann::json to_json(const CoverReport& r) {
  nlohmann::json covers = nlohmann::json::array();
  for (const VarSet& c : r.minimal_covers) covers.push_back(one_based(c));
  return {{"minimal_covers", std::move(covers)},
          {"h", r.h},
          {"unmixed", r.unmixed},
          {"dim", r.dim}};
}

nlohmann::json to_json(const QuotientReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ColonStep& s : r.steps) {
    steps.push_back({{"generators", monomial_list(s.generators)},
                     {"linear", s.linear},
                     {"vars", one_based(s.vars)}});
  }
  nlohmann::json out = {{"ordering", monomial_list(r.ordering)},
                        {"steps", std::move(steps)},
                        {"q_values", r.q_values},
                        {"linear", r.linear}};
  out["q"] = r.linear ? nlohmann::json(r.q) : nlohmann::json(nullptr);
  out["depth"] = optional_json(r.depth);
  out["failed_step"] =
      r.failed_step ? nlohmann::json(*r.failed_step + 2) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json out = {{"verdict", to_string(c.verdict)},
                        {"principal", c.principal},
                        {"veronese", c.veronese},
                        {"squarefree_veronese", c.squarefree_veronese},
                        {"vars", one_based(c.support)},
                        {"d", c.degree},
                        {"n", c.num_vars},
                        {"h", c.h},
                        {"dim", c.dim},
                        {"linear", c.linear}};
  out["q"] = optional_json(c.q);
  out["depth"] = optional_json(c.depth);
  out["exchange_violation"] = c.exchange_violation ? to_json(*c.exchange_violation)
                                                   : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const CensusRow& row) {
  nlohmann::json out = {{"index", row.index},
                        {"ideal", ideal_to_json(row.ideal)},
                        {"gens", monomial_list(row.ideal.generators())},
                        {"polymatroidal", row.polymatroidal},
                        {"matroidal", row.matroidal},
                        {"linear", row.linear},
                        {"h", row.h},
                        {"dim", row.dim},
                        {"unmixed", row.unmixed},
                        {"verdict", to_string(row.verdict)}};
  out["q"] = optional_json(row.q);
  out["depth"] = optional_json(row.depth);
  out["cm"] = optional_json(row.cohen_macaulay);
  return out;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json verdicts = nlohmann::json::object();
  for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
    verdicts[std::string(to_string(static_cast<Verdict>(k)))] = r.verdicts[k];
  }
  nlohmann::json survivors = nlohmann::json::array();
  for (const MonomialIdeal& ideal : r.cm_survivors) {
    survivors.push_back(monomial_list(ideal.generators()));
  }
  nlohmann::json out = {
      {"spec",
       {{"n", r.spec.n},
        {"d", r.spec.d},
        {"cap", r.spec.cap},
        {"min_gens", r.spec.min_gens},
        {"max_gens", optional_json(r.spec.max_gens)},
        {"mod_sym", r.spec.modulo_symmetry}}},
      {"ideals", r.ideals},
      {"polymatroidal", r.polymatroidal},
      {"matroidal", r.matroidal},
      {"linear", r.linear},
      {"cohen_macaulay", r.cohen_macaulay},
      {"unmixed_not_cm", r.unmixed_not_cm},
      {"paths_checked", r.paths_checked},
      {"verdicts", std::move(verdicts)},
      {"cm_survivors", std::move(survivors)},
      {"violations", r.violations()},
      {"seconds", r.seconds}};
  out["violation"] = r.violation ? nlohmann::json{{"what", r.violation->what},
                                                  {"row", to_json(r.violation->row)}}
                                 : nlohmann::json(nullptr);
  return out;
}

std::string witness_text(const ExchangeWitness& w) {
  std::string out = "u=" + format_monomial(w.u) + " v=" + format_monomial(w.v) +
                    " i=" + std::to_string(w.i + 1);
  if (w.j) out += " j=" + std::to_string(*w.j + 1);
  if (w.result) out += " result=" + format_monomial(*w.result);
  return out;
}

std::string path_text(const ExchangePath& p) {
  std::ostringstream out;
  out << "u=" << format_monomial(p.u) << " v=" << format_monomial(p.start)
      << " i=" << p.target + 1 << "\n";
  out << "step 0 w=" << format_monomial(p.start) << " dist=" << p.distances[0] << "\n";
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    out << "step " << k + 1 << " w=" << format_monomial(p.steps[k])
        << " dist=" << p.distances[k + 1] << "\n";
  }
  out << "terminal=" << format_monomial(p.terminal) << " j0=" << p.balancing_index + 1
      << " result=" << format_monomial(p.result) << "\n";
  return out.str();
}

std::string invariants_text(std::size_t n, const CoverReport& covers,
                            const QuotientReport& quotients) {
  std::ostringstream out;
  out << "n=" << n << " h=" << covers.h << " unmixed=" << yes_no(covers.unmixed);
  if (quotients.linear) {
    out << " q=" << quotients.q << " dim=" << covers.dim << " depth=" << *quotients.depth
        << " CM=" << yes_no(covers.h == quotients.q + 1) << "\n";
  } else {
    out << " q=none dim=" << covers.dim << " depth=unknown CM=unknown\n";
    const std::size_t step = *quotients.failed_step;
    out << "no linear quotients: revlex colon at generator " << step + 2 << " is (";
    const auto& gens = quotients.steps[step].generators;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      out << (k ? ", " : "") << format_monomial(gens[k]);
    }
    out << ")\n";
  }
  return out.str();
}

nlohmann::json invariants_json(std::size_t n, const CoverReport& covers,
                               const QuotientReport& quotients) {
  nlohmann::json out = {{"n", n},
                        {"covers", to_json(covers)},
                        {"quotients", to_json(quotients)},
                        {"h", covers.h},
                        {"unmixed", covers.unmixed},
                        {"dim", covers.dim},
                        {"linear", quotients.linear}};
  out["q"] = quotients.linear ? nlohmann::json(quotients.q) : nlohmann::json(nullptr);
  out["depth"] = optional_json(quotients.depth);
  out["cm"] = quotients.linear ? nlohmann::json(covers.h == quotients.q + 1)
                               : nlohmann::json(nullptr);
  return out;
}

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  out << "verdict=" << to_string(c.verdict) << " vars=" << format_varset(c.support)
      << " d=" << c.degree << " h=" << c.h << " q=" << optional_text(c.q, "none")
      << " dim=" << c.dim << " depth=" << optional_text(c.depth, "unknown")
      << " principal=" << yes_no(c.principal) << " veronese=" << yes_no(c.veronese)
      << " squarefree_veronese=" << yes_no(c.squarefree_veronese) << "\n";
  if (c.exchange_violation) {
    out << "exchange fails: " << witness_text(*c.exchange_violation) << "\n";
  }
  return out.str();
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "ideals=" << r.ideals << " polymatroidal=" << r.polymatroidal
      << " violations=" << r.violations() << "\n";
  out << "matroidal=" << r.matroidal << " linear=" << r.linear
      << " cm=" << r.cohen_macaulay << " unmixed_not_cm=" << r.unmixed_not_cm
      << " paths=" << r.paths_checked << "\n";
  out << "verdicts";
  for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
    out << " " << to_string(static_cast<Verdict>(k)) << "=" << r.verdicts[k];
  }
  out << "\n";
  if (r.violation) {
    out << "violation: " << r.violation->what << "\n"
        << census_header() << "\n" << census_line(r.violation->row) << "\n";
  }
  return out.str();
}

std::string census_header() {
  return "index\tn\tgens\tpolymatroidal\tmatroidal\tlinear\th\tq\tdim\tdepth\t"
         "unmixed\tcm\tverdict";
}

std::string census_line(const CensusRow& row) {
  std::ostringstream out;
  std::string gens;
  for (const Monomial& g : row.ideal.generators()) {
    if (!gens.empty()) gens += ',';
    gens += format_monomial(g);
  }
  out << row.index << '\t' << row.ideal.num_vars() << '\t' << gens << '\t'
      << yes_no(row.polymatroidal) << '\t' << yes_no(row.matroidal) << '\t'
      << yes_no(row.linear) << '\t' << row.h << '\t' << optional_text(row.q, "-")
      << '\t' << row.dim << '\t' << optional_text(row.depth, "-") << '\t'
      << yes_no(row.unmixed) << '\t' << optional_text(row.cohen_macaulay, "-") << '\t'
      << to_string(row.verdict);
  return out.str();
}

}  // namespace cmpoly
