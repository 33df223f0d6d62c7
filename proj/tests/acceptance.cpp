// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Criteria are asserted exactly as stated; known-unreachable
// reference values are allowed to fail honestly and are annotated with the
// measured value plus the closest passing variant.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ludersgap/audit.hpp"
#include "ludersgap/closed_forms.hpp"
#include "ludersgap/lgi.hpp"
#include "ludersgap/nci.hpp"
#include "ludersgap/optim.hpp"
#include "ludersgap/repro.hpp"

using namespace ludersgap;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Suite {
  int failed = 0;

  void criterion(int n, const char* name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::printf("PASS criterion %d: %s\n", n, name);
    } else {
      std::printf("FAIL criterion %d: %s%s%s\n", n, name, detail.empty() ? "" : " -- ",
                  detail.c_str());
      ++failed;
    }
  }

  void info(const std::string& line) { std::printf("INFO %s\n", line.c_str()); }
};

struct Rng {
  std::mt19937_64 s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  double uni() { return static_cast<double>(s() >> 11) * 0x1.0p-53; }
};

DensityMatrix random_state(Rng& rng) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(rng.uni() - 0.5, rng.uni() - 0.5);
  Mat3 rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix((rho + rho.adjoint()) / 2.0);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- criterion 1: fine-grained-update simulation vs the equal-coupling
// closed form; pins the generator convention, propagator sign, and update ----
bool run_c1(std::string& detail) {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double g = -kPi + 2 * kPi * k / 99.0;
    LgiParams p;
    p.g1 = p.g2 = g;
    p.xi = 1.0;
    p.rule = RuleKind::VonNeumann;
    worst = std::max(worst, std::abs(k_values(p).k13 - k13_closed_equal_g(g)));
  }
  detail = "max |simulated - closed| = " + fmt(worst);
  return worst <= 1e-9;
}

// ---- criterion 6: update-rule ceilings ----
bool run_c6(std::string& detail) {
  double worst_k = -10.0;
  for (int a = 0; a <= 200; ++a)
    for (int b = 0; b <= 200; ++b) {
      LgiParams p;
      p.g1 = -kPi + 2 * kPi * a / 200.0;
      p.g2 = -kPi + 2 * kPi * b / 200.0;
      p.rule = RuleKind::Luders;
      const KValue k = k_values(p);
      worst_k = std::max({worst_k, k.k13, k.k23, k.k12});
    }

  double worst_beta = -10.0;
  Rng rng(0xbe7a);
  for (int k = 0; k < 10000; ++k) {
    NciParams p;
    p.theta = 2 * kPi * rng.uni();
    p.phi = 2 * kPi * rng.uni();
    p.eps = rng.uni();
    p.lam = rng.uni();
    p.del = rng.uni();
    p.rule = RuleKind::Luders;
    const BetaValue b = beta_values(p);
    worst_beta = std::max({worst_beta, b.b31, b.b23, b.b12});
  }

  double worst_diag = -10.0;
  for (int k = 0; k <= 200; ++k) {
    LgiParams p;
    p.g1 = p.g2 = -kPi + 2 * kPi * k / 200.0;
    p.rule = RuleKind::VonNeumann;
    const KValue kv = k_values(p);
    worst_diag = std::max({worst_diag, kv.k23, kv.k12});
  }

  detail = "max Luders K = " + fmt(worst_k) + " (bound 1.5); max Luders beta = " +
           fmt(worst_beta) + " (bound 1); max equal-coupling vN K23/K12 = " + fmt(worst_diag) +
           " (bound 1)";
  return worst_k <= 1.5 + 1e-9 && worst_beta <= 1.0 + 1e-9 && worst_diag <= 1.0 + 1e-9;
}

// ---- criterion 7: structural identities of the two update rules ----
bool run_c7(std::string& detail) {
  Rng rng(0x1de7);
  double worst_decomp = 0.0, worst_marginal = 0.0, worst_flat = 0.0, worst_nondeg = 0.0;
  bool states_ok = true;

  // (a) Luders minus von Neumann equals the degenerate-block cross term.
  for (int k = 0; k < 1000; ++k) {
    const DensityMatrix rho = random_state(rng);
    const double xi = rng.uni();
    const double g = -kPi + 2 * kPi * rng.uni();
    const EigenBasis b = m1_basis(xi);
    const Unitary u = propagator(g);
    const ProjectorSet second = projectors_from_basis(m1_basis(1.0));
    const double cl = sequential_correlation(rho, b, UpdateRule::luders(), u, second);
    const double cv = sequential_correlation(rho, b, UpdateRule::von_neumann(b), u, second);
    const Mat3 evolved = u.mat.adjoint() * m1_observable() * u.mat;
    worst_decomp = std::max(worst_decomp, std::abs(cl - cv - vn_correction_term(rho, b, evolved)));
  }

  // (b) first-measurement outcome probabilities are rule-independent, and
  // both rules emit valid post-measurement states.
  for (int k = 0; k < 1000; ++k) {
    const bool lgi_side = rng.uni() < 0.5;
    const DensityMatrix rho =
        lgi_side ? random_state(rng) : psi(2 * kPi * rng.uni(), 2 * kPi * rng.uni());
    const EigenBasis bi =
        lgi_side ? m1_basis(rng.uni()) : nci_basis(1 + static_cast<int>(rng.uni() * 3) % 3,
                                                   rng.uni());
    for (const auto& [val, blk] : projectors_from_basis(bi).blocks) {
      if ((blk * rho.mat).trace().real() <= 1e-12) continue;
      const auto [pl, postl] = measure_update(rho, bi, UpdateRule::luders(), val);
      const auto [pv, postv] = measure_update(rho, bi, UpdateRule::von_neumann(bi), val);
      worst_marginal = std::max(worst_marginal, std::abs(pl - pv));
      states_ok = states_ok && std::abs(postl.mat.trace().real() - 1.0) < 1e-9 &&
                  std::abs(postv.mat.trace().real() - 1.0) < 1e-9;
    }
  }

  // (c) Luders results carry no dependence on the fine basis parameter.
  for (int k = 0; k < 200; ++k) {
    LgiParams a;
    a.g1 = -kPi + 2 * kPi * rng.uni();
    a.g2 = -kPi + 2 * kPi * rng.uni();
    a.rule = RuleKind::Luders;
    LgiParams b = a;
    a.xi = rng.uni();
    b.xi = rng.uni();
    const KValue ka = k_values(a), kb = k_values(b);
    worst_flat = std::max({worst_flat, std::abs(ka.k13 - kb.k13), std::abs(ka.k23 - kb.k23),
                           std::abs(ka.k12 - kb.k12)});
  }

  // (d) with a nondegenerate spectrum the two rules coincide.
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = random_state(rng);
    const Mat3 u = propagator(-kPi + 2 * kPi * rng.uni()).mat;
    const EigenBasis nondeg({u.col(0), u.col(1), u.col(2)}, {-1.0, 0.0, 1.0});
    const Unitary mid = propagator(-kPi + 2 * kPi * rng.uni());
    const ProjectorSet second = projectors_from_basis(m1_basis(1.0));
    const double cl = sequential_correlation(rho, nondeg, UpdateRule::luders(), mid, second);
    const double cv =
        sequential_correlation(rho, nondeg, UpdateRule::von_neumann(nondeg), mid, second);
    worst_nondeg = std::max(worst_nondeg, std::abs(cl - cv));
  }

  detail = "decomposition " + fmt(worst_decomp) + ", marginal " + fmt(worst_marginal) +
           ", basis-parameter flatness " + fmt(worst_flat) + ", nondegenerate equality " +
           fmt(worst_nondeg) + ", post-states valid: " + (states_ok ? "yes" : "no");
  return worst_decomp <= 1e-12 && worst_marginal <= 1e-12 && worst_flat <= 1e-12 &&
         worst_nondeg <= 1e-12 && states_ok;
}

// ---- criterion 8: transcription audit ----
bool run_c8(std::string& detail) {
  const auto rows = run_audit(500);
  const auto rows2 = run_audit(500);
  bool all_match = true, verdicts_expected = true, deterministic = rows.size() == rows2.size();
  for (size_t i = 0; i < rows.size() && deterministic; ++i)
    deterministic = rows[i].form == rows2[i].form && rows[i].pass == rows2[i].pass &&
                    rows[i].max_dev_published == rows2[i].max_dev_published;

  const std::vector<std::string> pass_as_published = {"k13_equal_g", "b31_luders", "b23_luders",
                                                      "b12_luders", "k12_vn_ket100"};
  for (const auto& r : rows) {
    const double best = std::min(r.max_dev_published, r.max_dev_corrected);
    all_match = all_match && best < 1e-9;
    const bool should_pass = std::find(pass_as_published.begin(), pass_as_published.end(),
                                       r.form) != pass_as_published.end();
    verdicts_expected = verdicts_expected && (r.pass == should_pass);
  }

  // The corrected general K13 appendix form must collapse to the
  // equal-coupling closed form on the diagonal at the aligned basis.
  double worst_reduce = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double g = -kPi + 2 * kPi * k / 200.0;
    worst_reduce = std::max(
        worst_reduce, std::abs(k_closed_form(KvForm::K13, g, g, 1.0, Transcription::Corrected) -
                               k13_closed_equal_g(g)));
  }

  detail = std::to_string(rows.size()) + " forms audited; corrected-or-published agreement: " +
           (all_match ? "yes" : "no") + "; verdict pattern as expected: " +
           (verdicts_expected ? "yes" : "no") + "; deterministic: " +
           (deterministic ? "yes" : "no") + "; equal-coupling reduction residual " +
           fmt(worst_reduce);
  return all_match && verdicts_expected && deterministic && worst_reduce <= 1e-9;
}

double column_max(const ReproTable& t, size_t col, double* arg_first_col = nullptr) {
  double best = -1e300;
  for (const auto& row : t.data)
    if (row[col] > best) {
      best = row[col];
      if (arg_first_col) *arg_first_col = row[0];
    }
  return best;
}

}  // namespace

int main() {
  Suite s;
  std::string d;

  std::printf("acceptance suite: sequential-measurement toolkit\n");
  std::printf("------------------------------------------------\n");

  // 1. Simulation agrees with the equal-coupling closed form.
  bool ok = run_c1(d);
  s.criterion(1, "equal-coupling closed form matches simulation on a 100-point grid", ok, d);

  // 2. Optimizer reproduces the bundled coupling-scan table.
  const ReproTable t1 = reproduce("table1");
  int t1_bad = 0;
  for (const auto& row : t1.data)
    if (row.back() != 1.0) ++t1_bad;
  s.criterion(2, "coupling-scan maxima and argmax locations (9 rows)", t1.ok,
              std::to_string(t1_bad) + " of 9 rows out of tolerance");

  // 3. Fixed-point evaluations match the bundled operating points.
  const ReproTable t2 = reproduce("table2");
  s.criterion(3, "fixed-point evaluations at quoted coupling triples (3 rows)", t2.ok);

  // 4. The swapped start state reaches the algebraic ceiling.
  {
    LgiParams p;
    p.state = InitialState::Ket100;
    p.rule = RuleKind::VonNeumann;
    p.g1 = p.g2 = kPi;
    p.xi = 1.0 / std::sqrt(2.0);
    const double v = k_values(p).k12;
    s.criterion(4, "alternate start state drives K12 to 2 at the tuned point",
                std::abs(v - 2.0) <= 0.005, "K12 = " + fmt(v));
  }

  // 5. Contextuality operating points and five-parameter maximization.
  const ReproTable t4 = reproduce("table4");
  {
    const double printed_b31 = t4.data[0][5];
    const double swapped_b31 = t4.data[3][5];
    std::string bad;
    for (size_t r = 0; r < t4.data.size(); ++r)
      if (t4.data[r].back() != 1.0) bad += (bad.empty() ? "" : ", ") + t4.labels[r];
    std::string det = "rows out of tolerance: {" + bad + "}; the first printed operating row "
                      "reproduces " +
                      fmt(printed_b31) +
                      " against a quoted 2, while the same row with its two basis parameters "
                      "transposed reproduces " +
                      fmt(swapped_b31);
    s.criterion(5, "contextuality operating points match quoted values (bundled table)", t4.ok,
                det);
    s.info("supplementary: transposed-parameter variant of the failing row = " +
           fmt(swapped_b31) + " (within 0.01 of 2)");
  }

  // 6. Ceilings of the coarse-update rule.
  ok = run_c6(d);
  s.criterion(6, "coarse-update ceilings: K <= 1.5, beta <= 1, equal-coupling vN K <= 1", ok, d);

  // 7. Structural identities.
  ok = run_c7(d);
  s.criterion(7, "update-rule decomposition and invariance identities", ok, d);

  // 8. Closed-form transcription audit.
  ok = run_c8(d);
  s.criterion(8, "closed-form audit: corrected forms agree, verdicts stable", ok, d);

  // 9. Figure sweeps reproduce shapes and peaks.
  const ReproTable f1 = reproduce("fig1");
  const ReproTable f2 = reproduce("fig2");
  {
    double xi_at_peak = 0.0;
    const double k23_peak = column_max(f1, 2, &xi_at_peak);
    double th1 = 0, th2 = 0, th3 = 0, th4 = 0;
    const double b31_peak = column_max(f2, 1, &th1);
    const double b23_peak = column_max(f2, 2, &th2);
    const double b12_peak = column_max(f2, 3, &th3);
    const double b31_swapped_peak = column_max(f2, 4, &th4);
    std::string det = "basis-parameter sweep peak K23 = " + fmt(k23_peak) + " at " +
                      fmt(xi_at_peak) + "; state-angle sweep peaks: " + fmt(b31_peak) + ", " +
                      fmt(b23_peak) + ", " + fmt(b12_peak) +
                      " (first row quoted at 2; its transposed-parameter variant peaks at " +
                      fmt(b31_swapped_peak) + ")";
    s.criterion(9, "figure sweeps: peak locations and heights", f1.ok && f2.ok, det);
  }

  std::printf("------------------------------------------------\n");
  std::printf("%d of 9 criteria passed, %d failed\n", 9 - s.failed, s.failed);
  if (s.failed > 0)
    std::printf("failing criteria assert quoted reference values the simulation "
                "demonstrably does not attain; see README notes and the audit output\n");
  return s.failed == 0 ? 0 : 1;
}
