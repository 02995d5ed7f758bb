// Times the serial reference path against the OpenMP path for the heavy
// sweeps and checks that both produce the same report.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "smr/parallel.hpp"
#include "smr/rings.hpp"
#include "smr/verify.hpp"

namespace {

using smr::Threading;

double run_ms(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

smr::Json stripped(smr::Report rep) {
  rep.elapsed_ms = 0;
  return smr::report_to_json(rep);
}

}  // namespace

int main() {
  struct Case {
    std::string name;
    std::function<smr::Report(Threading)> run;
  };

  const std::vector<Case> cases = {
      {"census n=4", [](Threading t) { return smr::census(4, t); }},
      {"prop1 n=3 m=2", [](Threading t) { return smr::verify_prop1(3, smr::RingCtx(2), t); }},
      {"prop2 n=3 m=3", [](Threading t) { return smr::verify_prop2(3, smr::RingCtx(3), t); }},
      {"prop3 n=3 m=4", [](Threading t) { return smr::verify_prop3(3, smr::RingCtx(4), t); }},
      {"prop4 n=3 m=2", [](Threading t) { return smr::verify_prop4(3, smr::RingCtx(2), t); }},
      {"prop4 n=2 m=4", [](Threading t) { return smr::verify_prop4(2, smr::RingCtx(4), t); }},
  };

#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run serial code\n");
#endif
  std::printf("%-16s %12s %12s %8s %s\n", "case", "serial ms", "parallel ms", "speedup", "match");

  bool all_match = true;
  for (const Case& c : cases) {
    smr::Report serial_rep, parallel_rep;
    const double serial_ms = run_ms([&] { serial_rep = c.run(Threading::serial); });
    const double parallel_ms = run_ms([&] { parallel_rep = c.run(Threading::openmp); });
    const bool match = stripped(serial_rep) == stripped(parallel_rep);
    all_match = all_match && match;
    std::printf("%-16s %12.1f %12.1f %8.2f %s\n", c.name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
