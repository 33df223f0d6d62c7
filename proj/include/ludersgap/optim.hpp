#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ludersgap {

struct Dim {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = false;
};

struct ParamBox {
  std::vector<Dim> dims;  // 1..6 dimensions, lo < hi each
};

using Objective = std::function<double(const std::vector<double>&)>;

struct ScanEntry {
  std::vector<double> point;
  double value = 0.0;
};

struct RefineResult {
  std::vector<double> point;
  double value = 0.0;
  long evaluations = 0;
};

struct ArgMaxResult {
  std::vector<std::string> names;
  std::vector<double> point;
  double value = 0.0;
  double grid_best = 0.0;
  long evaluations = 0;
};

// 121 points/dim up to 2 dims, 41 for 3-5, 13 for 6.
int default_points_per_dim(int ndims);

// Parallelism cap: min(hardware, LUDERSGAP_THREADS) when the variable is set.
int thread_cap();

// Exhaustive lattice scan, descending by value, ties broken by row-major
// lattice index; errors before starting if points^dims would exceed 1e8.
// grid_scan may evaluate lattice points concurrently (ordering is defined by
// the post-hoc sort, so thread count never changes the result);
// grid_scan_serial is the single-threaded reference implementation.
std::vector<ScanEntry> grid_scan(const Objective& f, const ParamBox& box, int points_per_dim);
std::vector<ScanEntry> grid_scan_serial(const Objective& f, const ParamBox& box, int points_per_dim);

// Nelder-Mead on -f; initial simplex edge 2% of each span; stops when the
// simplex value spread < 1e-10 or after 1e4 evaluations; the returned point is
// clamped to the box (periodic dims wrapped into [lo, hi)).
RefineResult refine(const Objective& f, std::vector<double> start, const ParamBox& box);

// grid_scan, then refine from the top 5 lattice points; deterministic, and
// never returns a value below the grid best.
ArgMaxResult maximize(const Objective& f, const ParamBox& box, int points_per_dim);

}  // namespace ludersgap
