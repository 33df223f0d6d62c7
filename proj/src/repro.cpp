#include "ludersgap/repro.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ludersgap/lgi.hpp"
#include "ludersgap/nci.hpp"
#include "ludersgap/optim.hpp"

namespace ludersgap {

namespace {

constexpr double kPi = 3.14159265358979323846;

ParamBox coupling_box(bool equal) {
  if (equal) return {{{"g", -kPi, kPi, true}}};
  return {{{"g1", -kPi, kPi, true}, {"g2", -kPi, kPi, true}}};
}

ParamBox beta_box() {
  return {{{"theta", 0.0, 2 * kPi, true},
           {"phi", 0.0, 2 * kPi, true},
           {"eps", 0.0, 1.0, false},
           {"lam", 0.0, 1.0, false},
           {"del", 0.0, 1.0, false}}};
}

double pick_k(const KValue& kv, int which) {
  return which == 0 ? kv.k13 : (which == 1 ? kv.k23 : kv.k12);
}

double pick_b(const BetaValue& b, int which) {
  return which == 0 ? b.b31 : (which == 1 ? b.b23 : b.b12);
}

Objective k_objective(int which, RuleKind rule, bool equal) {
  return [which, rule, equal](const std::vector<double>& x) {
    const double g1 = x[0];
    const double g2 = equal ? x[0] : x[1];
    return pick_k(k_values({g1, g2, 1.0, InitialState::Ket001, rule}), which);
  };
}

Objective beta_objective(int which) {
  return [which](const std::vector<double>& x) {
    return pick_b(beta_values({x[0], x[1], x[2], x[3], x[4], RuleKind::VonNeumann}), which);
  };
}

double circ_dist(double a, double b) {
  double d = std::fabs(a - b);
  d = std::fmod(d, 2 * kPi);
  return std::min(d, 2 * kPi - d);
}

bool near(const std::vector<double>& found, const std::vector<double>& quoted) {
  for (size_t i = 0; i < quoted.size(); ++i)
    if (circ_dist(found[i], quoted[i]) > 0.02) return false;
  return true;
}

// A quoted argmax is accepted when the found point matches it per-dimension
// (couplings are circular), matches its sign-flipped twin (the correlators are
// invariant under negating all couplings), or is value-equivalent: the
// objective at the quoted point comes within 0.01 of the certified maximum
// (covers plateau rows and rounded quotations).
bool argmax_ok(const Objective& f, const std::vector<double>& found,
               const std::vector<double>& quoted, double max_value) {
  if (near(found, quoted)) return true;
  std::vector<double> neg(found);
  for (auto& c : neg) c = -c;
  if (near(neg, quoted)) return true;
  return f(quoted) >= max_value - 0.01;
}

ReproTable table1() {
  struct Row {
    const char* label;
    int which;
    RuleKind rule;
    bool equal;
    double reference;
    std::vector<double> quoted;
  };
  const std::vector<Row> row_defs = {
      {"k13_luders", 0, RuleKind::Luders, false, 1.45, {kPi / 2, kPi / 4}},
      {"k13_vn_equal", 0, RuleKind::VonNeumann, true, 1.75, {1.31}},
      {"k13_vn", 0, RuleKind::VonNeumann, false, 1.91, {0.98, 1.85}},
      {"k23_luders", 1, RuleKind::Luders, false, 1.0, {kPi, kPi}},
      {"k23_vn_equal", 1, RuleKind::VonNeumann, true, 1.0, {kPi}},
      {"k23_vn", 1, RuleKind::VonNeumann, false, 1.78, {-kPi / 3, 2 * kPi / 3}},
      {"k12_luders", 2, RuleKind::Luders, false, 1.45, {3 * kPi / 4, -kPi / 4}},
      {"k12_vn_equal", 2, RuleKind::VonNeumann, true, 1.0, {kPi}},
      {"k12_vn", 2, RuleKind::VonNeumann, false, 1.44, {2.41, -0.73}},
  };
  ReproTable t;
  t.target = "table1";
  t.header = {"reproduced", "reference", "deviation",     "g1_found", "g2_found",
              "g1_quoted",  "g2_quoted", "argmax_within", "row_ok"};
  for (const auto& r : row_defs) {
    const Objective f = k_objective(r.which, r.rule, r.equal);
    const ParamBox box = coupling_box(r.equal);
    const ArgMaxResult res = maximize(f, box, 121);
    const double dev = std::fabs(res.value - r.reference);
    const bool pt_ok = argmax_ok(f, res.point, r.quoted, res.value);
    const bool ok = dev <= 0.01 && pt_ok;
    const double f1 = res.point[0];
    const double f2 = r.equal ? res.point[0] : res.point[1];
    const double q1 = r.quoted[0];
    const double q2 = r.equal ? r.quoted[0] : r.quoted[1];
    t.labels.push_back(r.label);
    t.data.push_back({res.value, r.reference, dev, f1, f2, q1, q2, pt_ok ? 1.0 : 0.0,
                      ok ? 1.0 : 0.0});
    t.ok = t.ok && ok;
  }
  return t;
}

ReproTable table2() {
  struct Row {
    const char* label;
    int which;
    double g1, g2, xi, reference;
  };
  const std::vector<Row> row_defs = {
      {"k13_vn", 0, 0.98, 1.85, 1.0, 1.91},
      {"k23_vn", 1, kPi, kPi, 1.0 / std::sqrt(2.0), 2.0},
      {"k12_vn", 2, 2.41, -0.73, 1.0, 1.44},
  };
  ReproTable t;
  t.target = "table2";
  t.header = {"g1", "g2", "xi", "reproduced", "reference", "deviation", "row_ok"};
  for (const auto& r : row_defs) {
    const double v =
        pick_k(k_values({r.g1, r.g2, r.xi, InitialState::Ket001, RuleKind::VonNeumann}), r.which);
    const double dev = std::fabs(v - r.reference);
    const bool ok = dev <= 0.01;
    t.labels.push_back(r.label);
    t.data.push_back({r.g1, r.g2, r.xi, v, r.reference, dev, ok ? 1.0 : 0.0});
    t.ok = t.ok && ok;
  }
  return t;
}

ReproTable table4() {
  struct Row {
    const char* label;
    int which;
    double phi, theta, eps, lam, del;
  };
  // Quoted parameter rows, plus one diagnostic: the first row reaches its
  // quoted value 2 only with lam and del interchanged.
  const std::vector<Row> row_defs = {
      {"b31_vn", 0, kPi / 2, 0.0, 0.0, 0.1, 0.7},
      {"b23_vn", 1, kPi / 4, kPi / 2, 0.7, 1.0, 0.7},
      {"b12_vn", 2, 3 * kPi / 4, kPi / 2, 1.0, 1.0, 1.0},
      {"b31_vn_lam_del_swapped", 0, kPi / 2, 0.0, 0.0, 0.7, 0.1},
  };
  ReproTable t;
  t.target = "table4";
  t.header = {"phi",        "theta",     "eps",       "lam",   "del",
              "reproduced", "reference", "deviation", "row_ok"};
  for (const auto& r : row_defs) {
    const double v = pick_b(
        beta_values({r.theta, r.phi, r.eps, r.lam, r.del, RuleKind::VonNeumann}), r.which);
    const double dev = std::fabs(v - 2.0);
    const bool ok = dev <= 0.01;
    t.labels.push_back(r.label);
    t.data.push_back({r.phi, r.theta, r.eps, r.lam, r.del, v, 2.0, dev, ok ? 1.0 : 0.0});
    t.ok = t.ok && ok;
  }
  // Optimizer certification: each inequality's von Neumann maximum reaches 2
  // (>= 1.99 gate); grid kept at 13/dim so the 5-dim lattice fits the budget.
  const char* max_labels[3] = {"b31_vn_max", "b23_vn_max", "b12_vn_max"};
  for (int w = 0; w < 3; ++w) {
    const ArgMaxResult res = maximize(beta_objective(w), beta_box(), 13);
    const double dev = std::fabs(res.value - 2.0);
    const bool ok = res.value >= 1.99;
    t.labels.push_back(max_labels[w]);
    t.data.push_back({res.point[1], res.point[0], res.point[2], res.point[3], res.point[4],
                      res.value, 2.0, dev, ok ? 1.0 : 0.0});
    t.ok = t.ok && ok;
  }
  return t;
}

ReproTable fig1() {
  ReproTable t;
  t.target = "fig1";
  t.header = {"xi", "k13_vn", "k23_vn", "k12_vn"};
  const int steps = 101;
  double peak = -10.0, peak_xi = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double xi = static_cast<double>(k) / (steps - 1);
    const KValue kv = k_values({kPi, kPi, xi, InitialState::Ket001, RuleKind::VonNeumann});
    t.data.push_back({xi, kv.k13, kv.k23, kv.k12});
    if (kv.k23 > peak) {
      peak = kv.k23;
      peak_xi = xi;
    }
  }
  t.ok = std::fabs(peak - 2.0) <= 0.01 && std::fabs(peak_xi - 1.0 / std::sqrt(2.0)) <= 0.02;
  return t;
}

ReproTable fig2() {
  ReproTable t;
  t.target = "fig2";
  t.header = {"theta", "b31_row1", "b23_row2", "b12_row3", "b31_row1_lam_del_swapped"};
  const int steps = 101;
  struct Cfg {
    int which;
    double phi, eps, lam, del;
  };
  const Cfg cfgs[4] = {{0, kPi / 2, 0.0, 0.1, 0.7},
                       {1, kPi / 4, 0.7, 1.0, 0.7},
                       {2, 3 * kPi / 4, 1.0, 1.0, 1.0},
                       {0, kPi / 2, 0.0, 0.7, 0.1}};
  std::array<double, 4> peaks{-10.0, -10.0, -10.0, -10.0};
  for (int k = 0; k < steps; ++k) {
    const double th = 2 * kPi * k / (steps - 1);
    std::vector<double> row{th};
    for (int c = 0; c < 4; ++c) {
      const auto& cf = cfgs[c];
      const double v = pick_b(
          beta_values({th, cf.phi, cf.eps, cf.lam, cf.del, RuleKind::VonNeumann}), cf.which);
      row.push_back(v);
      peaks[c] = std::max(peaks[c], v);
    }
    t.data.push_back(std::move(row));
  }
  for (int c = 0; c < 3; ++c) t.ok = t.ok && std::fabs(peaks[c] - 2.0) <= 0.01;
  return t;
}

}  // namespace

ReproTable reproduce(const std::string& target) {
  if (target == "table1") return table1();
  if (target == "table2") return table2();
  if (target == "table4") return table4();
  if (target == "fig1") return fig1();
  if (target == "fig2") return fig2();
  throw std::invalid_argument(
      "unknown target '" + target + "' (expected table1|table2|table4|fig1|fig2)");
}

}  // namespace ludersgap
