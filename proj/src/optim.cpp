#include "ludersgap/optim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef LUDERSGAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace ludersgap {

namespace {

void validate_box(const ParamBox& box) {
  const size_t n = box.dims.size();
  if (n < 1 || n > 6) throw std::invalid_argument("parameter box needs 1..6 dimensions");
  for (const auto& d : box.dims)
    if (!(d.lo < d.hi)) throw std::invalid_argument("dimension '" + d.name + "' needs lo < hi");
}

std::vector<double> wrap_clamp(std::vector<double> x, const ParamBox& box) {
  for (size_t i = 0; i < box.dims.size(); ++i) {
    const auto& d = box.dims[i];
    if (d.periodic) {
      const double span = d.hi - d.lo;
      x[i] -= span * std::floor((x[i] - d.lo) / span);  // into [lo, hi)
    } else {
      x[i] = std::clamp(x[i], d.lo, d.hi);
    }
  }
  return x;
}

std::vector<ScanEntry> scan_impl(const Objective& f, const ParamBox& box, int pts,
                                 bool parallel) {
  validate_box(box);
  if (pts < 2) throw std::invalid_argument("grid needs at least 2 points per dimension");
  const int nd = static_cast<int>(box.dims.size());
  double budget = 1.0;
  for (int d = 0; d < nd; ++d) budget *= pts;
  if (budget > 1e8) {
    std::ostringstream os;
    os << "grid of " << budget << " evaluations exceeds the 1e8 budget";
    throw std::runtime_error(os.str());
  }
  long total = 1;
  for (int d = 0; d < nd; ++d) total *= pts;

  std::vector<std::vector<double>> axes(nd);
  for (int d = 0; d < nd; ++d) {
    axes[d].resize(pts);
    for (int k = 0; k < pts; ++k)
      axes[d][k] = box.dims[d].lo + (box.dims[d].hi - box.dims[d].lo) * k / (pts - 1);
  }
  auto point_at = [&](long idx) {
    std::vector<double> p(nd);
    for (int d = nd - 1; d >= 0; --d) {  // last dimension fastest: row-major order
      p[d] = axes[d][idx % pts];
      idx /= pts;
    }
    return p;
  };

  std::vector<double> vals(total);
  bool failed = false;
  std::string what;
#ifdef LUDERSGAP_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap()) if (parallel)
#endif
  for (long i = 0; i < total; ++i) {
    try {
      vals[i] = f(point_at(i));
    } catch (const std::exception& e) {
#ifdef LUDERSGAP_HAVE_OPENMP
#pragma omp critical
#endif
      {
        failed = true;
        what = e.what();
      }
      vals[i] = -std::numeric_limits<double>::infinity();
    }
  }
  if (failed) throw std::runtime_error("objective failed during grid scan: " + what);

  std::vector<long> order(total);
  std::iota(order.begin(), order.end(), 0L);
  std::sort(order.begin(), order.end(), [&](long a, long b) {
    if (vals[a] != vals[b]) return vals[a] > vals[b];
    return a < b;  // row-major lattice index breaks ties
  });
  std::vector<ScanEntry> out;
  out.reserve(total);
  for (long idx : order) out.push_back({point_at(idx), vals[idx]});
  return out;
}

}  // namespace

int default_points_per_dim(int ndims) {
  if (ndims <= 2) return 121;
  if (ndims <= 5) return 41;
  return 13;
}

int thread_cap() {
  static const int cap = [] {
    int n = 1;
#ifdef LUDERSGAP_HAVE_OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* e = std::getenv("LUDERSGAP_THREADS")) {
      const int v = std::atoi(e);
      if (v > 0) n = std::min(n, v);
    }
    return std::max(1, n);
  }();
  return cap;
}

std::vector<ScanEntry> grid_scan(const Objective& f, const ParamBox& box, int points_per_dim) {
  return scan_impl(f, box, points_per_dim, true);
}

std::vector<ScanEntry> grid_scan_serial(const Objective& f, const ParamBox& box,
                                        int points_per_dim) {
  return scan_impl(f, box, points_per_dim, false);
}

RefineResult refine(const Objective& f, std::vector<double> start, const ParamBox& box) {
  validate_box(box);
  const size_t n = box.dims.size();
  if (start.size() != n) throw std::invalid_argument("start point dimension mismatch");
  for (size_t i = 0; i < n; ++i)
    if (!box.dims[i].periodic && (start[i] < box.dims[i].lo || start[i] > box.dims[i].hi))
      throw std::invalid_argument("start point outside the box on '" + box.dims[i].name + "'");

  long evals = 0;
  auto g = [&](const std::vector<double>& x) {
    const double v = f(wrap_clamp(x, box));
    ++evals;
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "non-finite objective at (";
      for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
      os << ")";
      throw std::runtime_error(os.str());
    }
    return -v;
  };

  std::vector<std::vector<double>> pts{start};
  for (size_t i = 0; i < n; ++i) {
    auto p = start;
    p[i] += 0.02 * (box.dims[i].hi - box.dims[i].lo);
    pts.push_back(std::move(p));
  }
  std::vector<double> vals;
  vals.reserve(n + 1);
  for (const auto& p : pts) vals.push_back(g(p));

  const long max_evals = 10000;
  const double spread_tol = 1e-10;
  while (evals < max_evals) {
    std::vector<size_t> order(n + 1);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    {
      std::vector<std::vector<double>> p2(n + 1);
      std::vector<double> v2(n + 1);
      for (size_t i = 0; i <= n; ++i) {
        p2[i] = std::move(pts[order[i]]);
        v2[i] = vals[order[i]];
      }
      pts = std::move(p2);
      vals = std::move(v2);
    }
    // Converged only when the simplex has collapsed in value AND in space;
    // a value-only test stalls on symmetric straddles of a smooth extremum.
    double geom_spread = 0.0;
    for (size_t i = 1; i <= n; ++i)
      for (size_t d = 0; d < n; ++d)
        geom_spread = std::max(geom_spread, std::abs(pts[i][d] - pts[0][d]));
    if (vals[n] - vals[0] < spread_tol && geom_spread < spread_tol) break;

    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
    for (size_t d = 0; d < n; ++d) centroid[d] /= static_cast<double>(n);
    auto walk = [&](double step) {
      std::vector<double> x(n);
      for (size_t d = 0; d < n; ++d) x[d] = centroid[d] + step * (centroid[d] - pts[n][d]);
      return x;
    };
    const auto xr = walk(1.0);
    const double fr = g(xr);
    if (fr < vals[0]) {
      const auto xe = walk(2.0);
      const double fe = g(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      const auto xc = walk(-0.5);
      const double fc = g(xc);
      if (fc < vals[n]) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (size_t i = 1; i <= n; ++i) {
          for (size_t d = 0; d < n; ++d) pts[i][d] = pts[0][d] + 0.5 * (pts[i][d] - pts[0][d]);
          vals[i] = g(pts[i]);
        }
      }
    }
  }
  const size_t best =
      std::min_element(vals.begin(), vals.end()) - vals.begin();
  auto bp = wrap_clamp(pts[best], box);
  const double bv = f(bp);
  return {std::move(bp), bv, evals};
}

ArgMaxResult maximize(const Objective& f, const ParamBox& box, int points_per_dim) {
  const auto scan = grid_scan(f, box, points_per_dim);
  ArgMaxResult res;
  for (const auto& d : box.dims) res.names.push_back(d.name);
  res.point = scan.front().point;
  res.value = scan.front().value;
  res.grid_best = scan.front().value;
  res.evaluations = static_cast<long>(scan.size());
  const size_t seeds = std::min<size_t>(5, scan.size());
  for (size_t k = 0; k < seeds; ++k) {
    const auto r = refine(f, scan[k].point, box);
    res.evaluations += r.evaluations;
    if (r.value > res.value) {
      res.value = r.value;
      res.point = r.point;
    }
  }
  res.point = wrap_clamp(std::move(res.point), box);
  return res;
}

}  // namespace ludersgap
