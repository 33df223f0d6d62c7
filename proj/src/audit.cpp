#include "ludersgap/audit.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "ludersgap/closed_forms.hpp"
#include "ludersgap/lgi.hpp"
#include "ludersgap/nci.hpp"

namespace ludersgap {

namespace {

constexpr double kPi = 3.14159265358979323846;

// mt19937_64 with a hand-rolled double extraction so the draw sequence is
// identical on every platform.
struct Rng {
  std::mt19937_64 s;
  explicit Rng(uint64_t seed) : s(seed) {}
  double uni() { return static_cast<double>(s() >> 11) * 0x1.0p-53; }
  double uni(double lo, double hi) { return lo + (hi - lo) * uni(); }
};

using PointFn = std::function<std::vector<double>(Rng&)>;
using EvalFn = std::function<double(const std::vector<double>&)>;

AuditRow audit_row(const char* name, std::vector<std::string> params, int npts, uint64_t seed,
                   const PointFn& draw, const EvalFn& sim, const EvalFn& lit,
                   const EvalFn& corr) {
  AuditRow row;
  row.form = name;
  row.param_names = std::move(params);
  Rng rng(seed);
  for (int k = 0; k < npts; ++k) {
    const auto x = draw(rng);
    const double reference = sim(x);
    const double dev_lit = std::abs(lit(x) - reference);
    const double dev_corr = std::abs(corr(x) - reference);
    if (dev_lit > row.max_dev_published) {
      row.max_dev_published = dev_lit;
      row.worst_point = x;
    }
    row.max_dev_corrected = std::max(row.max_dev_corrected, dev_corr);
  }
  row.pass = row.max_dev_published < 1e-9;
  return row;
}

PointFn draw_couplings(int n) {
  return [n](Rng& r) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(r.uni(-kPi, kPi));
    return x;
  };
}

PointFn draw_couplings_xi() {
  return [](Rng& r) {
    return std::vector<double>{r.uni(-kPi, kPi), r.uni(-kPi, kPi), r.uni()};
  };
}

PointFn draw_angles_params() {
  return [](Rng& r) {
    return std::vector<double>{r.uni(0, 2 * kPi), r.uni(0, 2 * kPi), r.uni(), r.uni(), r.uni()};
  };
}

double k_sim(const std::vector<double>& x, double xi, InitialState st, int which) {
  const KValue kv = k_values({x[0], x[1], xi, st, RuleKind::VonNeumann});
  return which == 0 ? kv.k13 : (which == 1 ? kv.k23 : kv.k12);
}

double beta_sim(const std::vector<double>& x, RuleKind rule, int which) {
  const BetaValue b = beta_values({x[0], x[1], x[2], x[3], x[4], rule});
  return which == 0 ? b.b31 : (which == 1 ? b.b23 : b.b12);
}

double beta_lit(const std::vector<double>& x, Transcription t, int which) {
  const BetaValue b =
      beta_vn_closed({x[0], x[1], x[2], x[3], x[4], RuleKind::VonNeumann}, t);
  return which == 0 ? b.b31 : (which == 1 ? b.b23 : b.b12);
}

double beta_lud_closed(const std::vector<double>& x, int which) {
  const BetaValue b = beta_luders_closed(x[0], x[1]);
  return which == 0 ? b.b31 : (which == 1 ? b.b23 : b.b12);
}

}  // namespace

std::vector<AuditRow> run_audit(int points_per_form) {
  constexpr uint64_t kSeed = 0x5eedc0defull;
  const int n = points_per_form;
  std::vector<AuditRow> rows;

  rows.push_back(audit_row(
      "k13_equal_g", {"g"}, n, kSeed ^ 1, draw_couplings(1),
      [](const auto& x) { return k_sim({x[0], x[0]}, 1.0, InitialState::Ket001, 0); },
      [](const auto& x) { return k13_closed_equal_g(x[0]); },
      [](const auto& x) { return k13_closed_equal_g(x[0]); }));

  rows.push_back(audit_row(
      "k13_xi1", {"g1", "g2"}, n, kSeed ^ 2, draw_couplings(2),
      [](const auto& x) { return k_sim(x, 1.0, InitialState::Ket001, 0); },
      [](const auto& x) { return k13_closed_xi1(x[0], x[1], Transcription::AsPublished); },
      [](const auto& x) { return k13_closed_xi1(x[0], x[1], Transcription::Corrected); }));

  const std::vector<std::string> nci_names{"theta", "phi", "eps", "lam", "del"};
  const char* lud_names[3] = {"b31_luders", "b23_luders", "b12_luders"};
  for (int w = 0; w < 3; ++w)
    rows.push_back(audit_row(
        lud_names[w], nci_names, n, kSeed ^ (3 + w), draw_angles_params(),
        [w](const auto& x) { return beta_sim(x, RuleKind::Luders, w); },
        [w](const auto& x) { return beta_lud_closed(x, w); },
        [w](const auto& x) { return beta_lud_closed(x, w); }));

  const KvForm forms[3] = {KvForm::K13, KvForm::K23, KvForm::K12};
  const char* kv_names[3] = {"k13_vn", "k23_vn", "k12_vn"};
  for (int w = 0; w < 3; ++w)
    rows.push_back(audit_row(
        kv_names[w], {"g1", "g2", "xi"}, n, kSeed ^ (6 + w), draw_couplings_xi(),
        [w](const auto& x) { return k_sim(x, x[2], InitialState::Ket001, w); },
        [w, forms](const auto& x) {
          return k_closed_form(forms[w], x[0], x[1], x[2], Transcription::AsPublished);
        },
        [w, forms](const auto& x) {
          return k_closed_form(forms[w], x[0], x[1], x[2], Transcription::Corrected);
        }));

  rows.push_back(audit_row(
      "k12_vn_ket100", {"g1", "g2", "xi"}, n, kSeed ^ 9, draw_couplings_xi(),
      [](const auto& x) { return k_sim(x, x[2], InitialState::Ket100, 2); },
      [](const auto& x) {
        return k_closed_form(KvForm::K12Ket100, x[0], x[1], x[2], Transcription::AsPublished);
      },
      [](const auto& x) {
        return k_closed_form(KvForm::K12Ket100, x[0], x[1], x[2], Transcription::Corrected);
      }));

  const char* bv_names[3] = {"b31_vn", "b23_vn", "b12_vn"};
  for (int w = 0; w < 3; ++w)
    rows.push_back(audit_row(
        bv_names[w], nci_names, n, kSeed ^ (10 + w), draw_angles_params(),
        [w](const auto& x) { return beta_sim(x, RuleKind::VonNeumann, w); },
        [w](const auto& x) { return beta_lit(x, Transcription::AsPublished, w); },
        [w](const auto& x) { return beta_lit(x, Transcription::Corrected, w); }));

  return rows;
}

}  // namespace ludersgap
