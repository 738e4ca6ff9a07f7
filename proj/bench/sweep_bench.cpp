// Times the serial reference sweep against the OpenMP sweep and checks that
// both produce the same tallies.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "cmpoly/enumerate.hpp"

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(
        best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

bool same_tallies(const cmpoly::VerificationReport& a, const cmpoly::VerificationReport& b) {
  return a.ideals == b.ideals && a.polymatroidal == b.polymatroidal &&
         a.matroidal == b.matroidal && a.linear == b.linear &&
         a.cohen_macaulay == b.cohen_macaulay && a.unmixed_not_cm == b.unmixed_not_cm &&
         a.paths_checked == b.paths_checked && a.verdicts == b.verdicts &&
         a.cm_survivors == b.cm_survivors && a.violations() == b.violations();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP classification sweep"};
  int workers = 0;
  int reps = 3;
  bool no_paths = false;
  app.add_option("--workers", workers, "OpenMP threads (0 = all)")->check(CLI::NonNegativeNumber);
  app.add_option("--reps", reps, "repetitions, best time reported")->check(CLI::PositiveNumber);
  app.add_flag("--no-paths", no_paths, "skip exchange walks");
  CLI11_PARSE(app, argc, argv);

  const std::vector<cmpoly::EnumSpec> specs = {
      {5, 2, 1}, {5, 3, 1}, {6, 2, 1}, {3, 2, 2}, {4, 2, 2}};
  const int threads = workers == 0 ? omp_get_max_threads() : workers;
  std::printf("threads=%d reps=%d paths=%s\n", threads, reps, no_paths ? "no" : "yes");
  std::printf("%-14s %10s %12s %12s %8s %s\n", "spec", "ideals", "serial_s", "parallel_s",
              "speedup", "match");

  bool all_match = true;
  for (const cmpoly::EnumSpec& spec : specs) {
    cmpoly::SweepOptions serial_opts;
    serial_opts.check_paths = !no_paths;
    cmpoly::SweepOptions parallel_opts = serial_opts;
    parallel_opts.workers = threads;

    cmpoly::VerificationReport serial;
    cmpoly::VerificationReport parallel;
    const double ts =
        best_of(reps, [&] { serial = cmpoly::verify_classification_serial(spec, serial_opts); });
    const double tp = best_of(
        reps, [&] { parallel = cmpoly::verify_classification_parallel(spec, parallel_opts); });
    const bool match = same_tallies(serial, parallel);
    all_match = all_match && match;
    char label[32];
    std::snprintf(label, sizeof label, "n=%zu d=%llu c=%u", spec.n,
                  static_cast<unsigned long long>(spec.d), static_cast<unsigned>(spec.cap));
    std::printf("%-14s %10llu %12.4f %12.4f %8.2f %s\n", label,
                static_cast<unsigned long long>(serial.ideals), ts, tp, ts / tp,
                match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
