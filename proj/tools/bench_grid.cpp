// Benchmark: OpenMP grid_scan vs the serial reference on a representative
// two-coupling objective, verifying that both paths rank points identically.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ludersgap/lgi.hpp"
#include "ludersgap/optim.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

double run_case(const char* name, int pts, bool parallel, double* best_out) {
  using namespace ludersgap;
  const ParamBox box{{{"g1", -kPi, kPi, true}, {"g2", -kPi, kPi, true}}};
  const Objective f = [](const std::vector<double>& x) {
    LgiParams p;
    p.g1 = x[0];
    p.g2 = x[1];
    p.xi = 1.0;
    p.rule = RuleKind::VonNeumann;
    return k_values(p).k13;
  };
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = parallel ? grid_scan(f, box, pts) : grid_scan_serial(f, box, pts);
  const auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  *best_out = entries.front().value;
  std::printf("%-8s %5d pts/dim  %10.1f ms  best %.12f at (%.6f, %.6f)\n", name, pts, ms,
              entries.front().value, entries.front().point[0], entries.front().point[1]);
  return ms;
}

}  // namespace

int main() {
  std::printf("grid_scan benchmark: von Neumann K13 objective over two couplings\n");
  std::printf("thread cap: %d\n\n", ludersgap::thread_cap());
  int status = 0;
  for (int pts : {61, 121}) {
    double best_serial = 0.0, best_parallel = 0.0;
    const double ms_serial = run_case("serial", pts, false, &best_serial);
    const double ms_parallel = run_case("openmp", pts, true, &best_parallel);
    if (best_serial != best_parallel) {
      std::printf("MISMATCH: serial and openmp best values differ\n");
      status = 1;
    }
    std::printf("speedup x%.2f\n\n", ms_serial / ms_parallel);
  }
  return status;
}
