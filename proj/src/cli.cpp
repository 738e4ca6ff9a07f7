#include "cmpoly/cli.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cmpoly/classify.hpp"
#include "cmpoly/covers.hpp"
#include "cmpoly/enumerate.hpp"
#include "cmpoly/error.hpp"
#include "cmpoly/exchange.hpp"
#include "cmpoly/io.hpp"
#include "cmpoly/quotients.hpp"
#include "cmpoly/report.hpp"

namespace cmpoly {
namespace {

struct Options {
  std::string format = "text";
  int workers = 1;
  bool shrink = false;

  std::vector<std::string> files;
  std::string u_text;
  std::string v_text;
  std::size_t target = 0;

  EnumSpec spec;
  std::optional<std::size_t> max_gens;
  std::string filter = "all";
  bool no_paths = false;

  bool structured() const { return format == "structured"; }
};

void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << "\n"; }

MonomialIdeal load(const Options& opts, std::size_t k, bool allow_shrink = true) {
  MonomialIdeal ideal = read_ideal_file(opts.files.at(k));
  if (opts.shrink && allow_shrink) ideal = shrink_to_support(ideal).ideal;
  return ideal;
}

int cmd_check(const Options& opts, std::ostream& out) {
  const MonomialIdeal ideal = load(opts, 0);
  const ExchangeVerdict verdict = check_exchange(ideal);
  const bool matroidal = verdict.holds && is_matroidal(ideal);
  if (opts.structured()) {
    emit(out, {{"polymatroidal", verdict.holds},
               {"matroidal", matroidal},
               {"witness", verdict.violation ? to_json(*verdict.violation)
                                             : nlohmann::json(nullptr)}});
    return kExitOk;
  }
  out << "polymatroidal=" << (verdict.holds ? "yes" : "no")
      << " matroidal=" << (matroidal ? "yes" : "no") << "\n";
  if (verdict.violation) out << "witness: " << witness_text(*verdict.violation) << "\n";
  return kExitOk;
}

int cmd_invariants(const Options& opts, std::ostream& out) {
  const MonomialIdeal ideal = load(opts, 0);
  const CoverReport covers = minimal_vertex_covers(ideal);
  const QuotientReport quotients = linear_quotients_revlex(ideal);
  if (opts.structured()) {
    emit(out, invariants_json(ideal.num_vars(), covers, quotients));
  } else {
    out << invariants_text(ideal.num_vars(), covers, quotients);
  }
  return kExitOk;
}

int cmd_classify(const Options& opts, std::ostream& out) {
  const Classification c = classify(load(opts, 0));
  if (opts.structured()) {
    emit(out, to_json(c));
  } else {
    out << classification_text(c);
  }
  return kExitOk;
}

int cmd_radical(const Options& opts, std::ostream& out) {
  const MonomialIdeal root = radical(load(opts, 0));
  if (opts.structured()) {
    emit(out, ideal_to_json(root));
  } else {
    out << format_ideal(root);
  }
  return kExitOk;
}

int cmd_product(const Options& opts, std::ostream& out) {
  const MonomialIdeal result = product(load(opts, 0, false), load(opts, 1, false));
  if (opts.structured()) {
    emit(out, ideal_to_json(result));
  } else {
    out << format_ideal(result);
  }
  return kExitOk;
}

int cmd_path(const Options& opts, std::ostream& out) {
  const MonomialIdeal ideal = load(opts, 0, false);
  const std::size_t n = ideal.num_vars();
  const Monomial u = parse_monomial(opts.u_text, n);
  const Monomial v = parse_monomial(opts.v_text, n);
  if (opts.target == 0 || opts.target > n) {
    throw Error(ErrorKind::kStructural,
                "--i must lie between 1 and n=" + std::to_string(n));
  }
  const ExchangePath path = exchange_path(ideal, u, v, opts.target - 1);
  if (opts.structured()) {
    emit(out, to_json(path));
  } else {
    out << path_text(path);
  }
  return kExitOk;
}

EnumSpec spec_of(const Options& opts) {
  EnumSpec spec = opts.spec;
  spec.max_gens = opts.max_gens;
  return spec;
}

int cmd_enumerate(const Options& opts, std::ostream& out) {
  CensusFilter filter = CensusFilter::kAll;
  if (opts.filter == "polymatroidal") filter = CensusFilter::kPolymatroidal;
  if (opts.filter == "unmixed") filter = CensusFilter::kUnmixedNotCm;

  const auto start = std::chrono::steady_clock::now();
  const std::vector<CensusRow> rows = census(spec_of(opts), filter, opts.workers);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::array<std::uint64_t, 5> verdicts{};
  for (const CensusRow& row : rows) ++verdicts[static_cast<std::size_t>(row.verdict)];

  if (opts.structured()) {
    nlohmann::json list = nlohmann::json::array();
    for (const CensusRow& row : rows) list.push_back(to_json(row));
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      counts[std::string(to_string(static_cast<Verdict>(k)))] = verdicts[k];
    }
    emit(out, {{"rows", std::move(list)},
               {"summary", {{"rows", rows.size()}, {"verdicts", counts}, {"seconds", seconds}}}});
    return kExitOk;
  }
  out << census_header() << "\n";
  for (const CensusRow& row : rows) out << census_line(row) << "\n";
  out << "# rows=" << rows.size();
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    out << " " << to_string(static_cast<Verdict>(k)) << "=" << verdicts[k];
  }
  out << " seconds=" << seconds << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  SweepOptions sweep;
  sweep.workers = opts.workers;
  sweep.check_paths = !opts.no_paths;
  const VerificationReport report = verify_classification(spec_of(opts), sweep);
  if (opts.structured()) {
    emit(out, to_json(report));
  } else {
    out << verification_text(report);
  }
  return report.violation ? kExitViolation : kExitOk;
}

void add_enum_flags(CLI::App* sub, Options& opts) {
  sub->add_option("--n", opts.spec.n, "number of variables")->required();
  sub->add_option("--d", opts.spec.d, "common degree")->required();
  sub->add_option("--cap", opts.spec.cap, "largest exponent (1 = squarefree)")->capture_default_str();
  sub->add_option("--min-gens", opts.spec.min_gens, "fewest generators");
  sub->add_option("--max-gens", opts.max_gens, "most generators");
  sub->add_flag("--mod-sym", opts.spec.modulo_symmetry,
                "one ideal per orbit under variable permutations");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Invariants and classification of equigenerated monomial ideals",
               "cmpoly"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--workers", opts.workers, "threads for enumerate/verify (0 = all)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--shrink", opts.shrink, "drop variables that divide no generator");

  struct Entry {
    CLI::App* app;
    int (*run)(const Options&, std::ostream&);
  };
  std::vector<Entry> commands;
  auto file_command = [&](const char* name, const char* help, int files,
                          int (*run)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", opts.files, "ideal file(s)")->required()->expected(files);
    commands.push_back({sub, run});
    return sub;
  };
  file_command("check", "polymatroidal / matroidal test with witness", 1, cmd_check);
  file_command("invariants", "h, q, dim, depth, unmixedness, Cohen-Macaulayness", 1,
               cmd_invariants);
  file_command("classify", "classification of a polymatroidal ideal", 1, cmd_classify);
  file_command("radical", "radical in ideal file format", 1, cmd_radical);
  file_command("product", "product of two ideals", 2, cmd_product);
  CLI::App* path = file_command("path", "exchange walk for (u, v, i)", 1, cmd_path);
  path->add_option("--u", opts.u_text, "generator u")->required();
  path->add_option("--v", opts.v_text, "generator v")->required();
  path->add_option("--i", opts.target, "1-based index with u_i < v_i")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "census of a search space");
  add_enum_flags(enumerate, opts);
  enumerate->add_option("--filter", opts.filter, "rows to emit")
      ->check(CLI::IsMember({"all", "polymatroidal", "unmixed"}));
  commands.push_back({enumerate, cmd_enumerate});
  CLI::App* verify = app.add_subcommand("verify", "exhaustive classification check");
  add_enum_flags(verify, opts);
  verify->add_flag("--no-paths", opts.no_paths, "skip the exchange-walk checks");
  commands.push_back({verify, cmd_verify});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    for (const Entry& entry : commands) {
      if (entry.app->parsed()) return entry.run(opts, out);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kExchangeAxiomViolated:
      case ErrorKind::kInternal:
        return kExitViolation;
      default:
        return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace cmpoly
