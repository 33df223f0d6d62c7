#include "ludersgap/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ludersgap/audit.hpp"
#include "ludersgap/closed_forms.hpp"
#include "ludersgap/format.hpp"
#include "ludersgap/lgi.hpp"
#include "ludersgap/nci.hpp"
#include "ludersgap/optim.hpp"
#include "ludersgap/repro.hpp"

namespace ludersgap {

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::vector<std::string> kAllParams{"g1", "g2", "xi", "theta", "phi", "eps", "lam", "del"};
const std::vector<std::string> kLgiRequired{"g1", "g2", "xi"};
const std::vector<std::string> kNciRequired{"theta", "phi", "eps", "lam", "del"};

int fail(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return 2;
}

RuleKind parse_rule(const std::string& r) {
  if (r == "luders") return RuleKind::Luders;
  if (r == "vn") return RuleKind::VonNeumann;
  throw std::invalid_argument("rule must be 'luders' or 'vn'");
}

InitialState parse_state(const std::string& s) {
  if (s == "001") return InitialState::Ket001;
  if (s == "100") return InitialState::Ket100;
  throw std::invalid_argument("state must be '001' or '100'");
}

void require_params(const RunSpec& s, const std::vector<std::string>& names,
                    const std::string& skip = "") {
  for (const auto& n : names)
    if (n != skip && !s.parameters.count(n))
      throw std::invalid_argument("missing required parameter: " + n);
}

LgiParams lgi_from(const RunSpec& s, RuleKind rule) {
  return {s.parameters.at("g1"), s.parameters.at("g2"), s.parameters.at("xi"),
          parse_state(s.state), rule};
}

NciParams nci_from(const RunSpec& s, RuleKind rule) {
  return {s.parameters.at("theta"), s.parameters.at("phi"), s.parameters.at("eps"),
          s.parameters.at("lam"), s.parameters.at("del"), rule};
}

double nci_param_of(const NciParams& p, int i) {
  return i == 1 ? p.eps : (i == 2 ? p.lam : p.del);
}

// Correlator difference term: with B the evolved second observable,
// vn_correction_term equals (Luders - von Neumann) for the pair.
double lgi_pair_correction(const LgiParams& p, int r, int s) {
  const Vec3 v0 = p.state == InitialState::Ket001 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
  const double pre = r == 1 ? 0.0 : p.g1;
  const double mid = (r == 1 && s == 2) ? p.g1 : (r == 2 ? p.g2 : p.g1 + p.g2);
  const Mat3 upre = propagator(pre).mat;
  const Mat3 umid = propagator(mid).mat;
  const DensityMatrix rho(upre * (v0 * v0.adjoint()) * upre.adjoint());
  return vn_correction_term(rho, m1_basis(p.xi), umid.adjoint() * m1_observable() * umid);
}

double nci_pair_correction(const NciParams& p, int i, int j) {
  return vn_correction_term(psi(p.theta, p.phi), nci_basis(i, nci_param_of(p, i)),
                            nci_observables()[j - 1]);
}

void emit(const RunSpec& s, const ReproTable& t, std::ostream& out) {
  const std::string doc = s.output == "json" ? to_json(t) : to_csv(t);
  if (!s.output_path.empty()) {
    std::ofstream f(s.output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + s.output_path);
    f << doc;
  } else {
    out << doc;
  }
}

void emit_audit(const RunSpec& s, const std::vector<AuditRow>& rows, std::ostream& out) {
  const std::string doc = s.output == "json" ? to_json(rows) : to_csv(rows);
  if (!s.output_path.empty()) {
    std::ofstream f(s.output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + s.output_path);
    f << doc;
  } else {
    out << doc;
  }
}

int cmd_evaluate(const RunSpec& s, std::ostream& out) {
  parse_rule(s.rule);  // validated even though both rules are reported
  ReproTable t;
  t.target = "evaluate";
  t.header = {"luders", "vn", "luders_minus_vn"};
  if (s.scenario == "lgi") {
    require_params(s, kLgiRequired);
    const LgiParams pl = lgi_from(s, RuleKind::Luders);
    const LgiParams pv = lgi_from(s, RuleKind::VonNeumann);
    const int pairs[3][2] = {{1, 2}, {2, 3}, {1, 3}};
    const char* names[3] = {"c12", "c23", "c13"};
    for (int k = 0; k < 3; ++k) {
      const double cl = lgi_correlator(pl, pairs[k][0], pairs[k][1]);
      const double cv = lgi_correlator(pv, pairs[k][0], pairs[k][1]);
      t.labels.push_back(names[k]);
      t.data.push_back({cl, cv, lgi_pair_correction(pl, pairs[k][0], pairs[k][1])});
    }
    const KValue kl = k_values(pl), kv = k_values(pv);
    t.labels.insert(t.labels.end(), {"k13", "k23", "k12"});
    t.data.push_back({kl.k13, kv.k13, kl.k13 - kv.k13});
    t.data.push_back({kl.k23, kv.k23, kl.k23 - kv.k23});
    t.data.push_back({kl.k12, kv.k12, kl.k12 - kv.k12});
  } else if (s.scenario == "nci") {
    require_params(s, kNciRequired);
    const NciParams pl = nci_from(s, RuleKind::Luders);
    const NciParams pv = nci_from(s, RuleKind::VonNeumann);
    const int pairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
    const char* names[3] = {"c12", "c23", "c31"};
    for (int k = 0; k < 3; ++k) {
      const double cl = nci_correlator(pl, pairs[k][0], pairs[k][1]);
      const double cv = nci_correlator(pv, pairs[k][0], pairs[k][1]);
      t.labels.push_back(names[k]);
      t.data.push_back({cl, cv, nci_pair_correction(pl, pairs[k][0], pairs[k][1])});
    }
    const BetaValue bl = beta_values(pl), bv = beta_values(pv);
    t.labels.insert(t.labels.end(), {"b31", "b23", "b12"});
    t.data.push_back({bl.b31, bv.b31, bl.b31 - bv.b31});
    t.data.push_back({bl.b23, bv.b23, bl.b23 - bv.b23});
    t.data.push_back({bl.b12, bv.b12, bl.b12 - bv.b12});
  } else {
    throw std::invalid_argument("scenario must be 'lgi' or 'nci'");
  }
  emit(s, t, out);
  return 0;
}

struct AxisDomain {
  double lo, hi;
};

AxisDomain natural_domain(const std::string& axis) {
  if (axis == "g1" || axis == "g2") return {-kPi, kPi};
  if (axis == "theta" || axis == "phi") return {0.0, 2 * kPi};
  return {0.0, 1.0};
}

int cmd_sweep(const RunSpec& s, std::ostream& out) {
  if (s.steps <= 0) throw std::invalid_argument("steps must be positive");
  const bool lgi = s.scenario == "lgi";
  if (!lgi && s.scenario != "nci") throw std::invalid_argument("scenario must be 'lgi' or 'nci'");
  const auto& legal = lgi ? kLgiRequired : kNciRequired;
  if (std::find(legal.begin(), legal.end(), s.axis) == legal.end())
    throw std::invalid_argument("axis '" + s.axis + "' is not a parameter of scenario " +
                                s.scenario);
  require_params(s, legal, s.axis);
  const RuleKind rule = parse_rule(s.rule);
  AxisDomain dom = natural_domain(s.axis);
  if (s.has_range) dom = {s.from, s.to};

  ReproTable t;
  t.target = "sweep";
  t.header = lgi ? std::vector<std::string>{s.axis, "k13", "k23", "k12"}
                 : std::vector<std::string>{s.axis, "b31", "b23", "b12"};
  for (int k = 0; k < s.steps; ++k) {
    const double x =
        s.steps == 1 ? dom.lo : dom.lo + (dom.hi - dom.lo) * k / (s.steps - 1);
    RunSpec pt = s;
    pt.parameters[s.axis] = x;
    if (lgi) {
      const KValue kv = k_values(lgi_from(pt, rule));
      t.data.push_back({x, kv.k13, kv.k23, kv.k12});
    } else {
      const BetaValue b = beta_values(nci_from(pt, rule));
      t.data.push_back({x, b.b31, b.b23, b.b12});
    }
  }
  emit(s, t, out);
  return 0;
}

int cmd_maximize(const RunSpec& s, std::ostream& out) {
  const bool lgi = s.scenario == "lgi";
  if (!lgi && s.scenario != "nci") throw std::invalid_argument("scenario must be 'lgi' or 'nci'");
  const RuleKind rule = parse_rule(s.rule);
  const InitialState state = parse_state(s.state);

  const std::vector<std::string> lgi_objs{"k13", "k23", "k12"};
  const std::vector<std::string> nci_objs{"b31", "b23", "b12"};
  const auto& objs = lgi ? lgi_objs : nci_objs;
  const auto it = std::find(objs.begin(), objs.end(), s.objective);
  if (it == objs.end())
    throw std::invalid_argument("objective for scenario " + s.scenario + " must be one of " +
                                (lgi ? "k13|k23|k12" : "b31|b23|b12"));
  const int which = static_cast<int>(it - objs.begin());

  ParamBox box;
  std::vector<std::string> free_names;
  const auto& all = lgi ? kLgiRequired : kNciRequired;
  for (const auto& n : all)
    if (!s.parameters.count(n)) {
      const AxisDomain d = natural_domain(n);
      const bool periodic = n == "g1" || n == "g2" || n == "theta" || n == "phi";
      box.dims.push_back({n, d.lo, d.hi, periodic});
      free_names.push_back(n);
    }
  if (box.dims.empty()) throw std::invalid_argument("all parameters pinned: nothing to maximize");

  Objective f;
  if (lgi) {
    f = [&, which](const std::vector<double>& x) {
      RunSpec pt = s;
      for (size_t i = 0; i < free_names.size(); ++i) pt.parameters[free_names[i]] = x[i];
      const KValue kv = k_values(lgi_from(pt, rule));
      (void)state;
      return which == 0 ? kv.k13 : (which == 1 ? kv.k23 : kv.k12);
    };
  } else {
    f = [&, which](const std::vector<double>& x) {
      RunSpec pt = s;
      for (size_t i = 0; i < free_names.size(); ++i) pt.parameters[free_names[i]] = x[i];
      const BetaValue b = beta_values(nci_from(pt, rule));
      return which == 0 ? b.b31 : (which == 1 ? b.b23 : b.b12);
    };
  }
  const int nd = static_cast<int>(box.dims.size());
  const int pts = s.points > 0 ? s.points : (nd >= 5 ? 13 : default_points_per_dim(nd));
  const ArgMaxResult res = maximize(f, box, pts);

  ReproTable t;
  t.target = "maximize";
  t.header = free_names;
  t.header.insert(t.header.end(), {"value", "grid_best", "evaluations"});
  t.labels.push_back(s.objective);
  std::vector<double> row = res.point;
  row.insert(row.end(), {res.value, res.grid_best, static_cast<double>(res.evaluations)});
  t.data.push_back(std::move(row));
  emit(s, t, out);
  return 0;
}

int cmd_reproduce(const RunSpec& s, std::ostream& out) {
  const ReproTable t = reproduce(s.target);
  emit(s, t, out);
  return t.ok ? 0 : 1;
}

int cmd_audit(const RunSpec& s, std::ostream& out) {
  emit_audit(s, run_audit(500), out);
  return 0;
}

}  // namespace

int execute(const RunSpec& s, std::ostream& out, std::ostream& err) {
  try {
    if (s.command == "evaluate") return cmd_evaluate(s, out);
    if (s.command == "sweep") return cmd_sweep(s, out);
    if (s.command == "maximize") return cmd_maximize(s, out);
    if (s.command == "reproduce") return cmd_reproduce(s, out);
    if (s.command == "audit") return cmd_audit(s, out);
    return fail(err, "unknown command '" + s.command + "'");
  } catch (const std::exception& e) {
    return fail(err, e.what());
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Qutrit sequential-measurement toolkit: two state-update rules, "
               "temporal/contextual inequality scans, reference-table reproduction"};
  app.require_subcommand(1);

  RunSpec spec;
  std::map<std::string, std::string> raw;

  auto add_common = [&](CLI::App* c, bool with_state) {
    for (const auto& n : kAllParams)
      c->add_option("--" + n, raw[n], "parameter " + n + " (accepts pi, -pi/3, 1/sqrt2, ...)");
    c->add_option("--rule", spec.rule, "update rule")->check(CLI::IsMember({"luders", "vn"}));
    if (with_state)
      c->add_option("--state", spec.state, "start state")->check(CLI::IsMember({"001", "100"}));
    c->add_option("--output", spec.output, "output format")->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--out", spec.output_path, "write to file instead of stdout");
  };

  auto* ev = app.add_subcommand("evaluate", "single-point report: correlators under both rules");
  ev->add_option("scenario", spec.scenario, "lgi|nci")->required();
  add_common(ev, true);

  auto* sw = app.add_subcommand("sweep", "vary one parameter, emit one row per step");
  sw->add_option("scenario", spec.scenario, "lgi|nci")->required();
  sw->add_option("--axis", spec.axis, "parameter to sweep")->required();
  std::string from_tok, to_tok;
  sw->add_option("--from", from_tok, "sweep start (default: the parameter's domain)");
  sw->add_option("--to", to_tok, "sweep end");
  sw->add_option("--steps", spec.steps, "number of rows")->default_val(101);
  add_common(sw, true);

  auto* mx = app.add_subcommand("maximize", "grid + simplex search over unpinned parameters");
  mx->add_option("scenario", spec.scenario, "lgi|nci")->required();
  mx->add_option("--objective", spec.objective, "k13|k23|k12 or b31|b23|b12")->required();
  mx->add_option("--points", spec.points, "grid points per dimension");
  add_common(mx, true);

  auto* rp = app.add_subcommand("reproduce", "regenerate a bundled reference table or figure");
  rp->add_option("target", spec.target, "table1|table2|table4|fig1|fig2")->required();
  rp->add_option("--output", spec.output, "output format")->check(CLI::IsMember({"csv", "json"}));
  rp->add_option("--out", spec.output_path, "write to file instead of stdout");

  auto* au = app.add_subcommand("audit", "closed forms vs simulation on random points");
  au->add_option("--output", spec.output, "output format")->check(CLI::IsMember({"csv", "json"}));
  au->add_option("--out", spec.output_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (const auto& [name, tok] : raw)
      if (!tok.empty()) spec.parameters[name] = parse_param_token(tok);
    if (!from_tok.empty() && !to_tok.empty()) {
      spec.has_range = true;
      spec.from = parse_param_token(from_tok);
      spec.to = parse_param_token(to_tok);
    }
  } catch (const std::exception& e) {
    return fail(std::cerr, e.what());
  }

  if (ev->parsed()) spec.command = "evaluate";
  if (sw->parsed()) spec.command = "sweep";
  if (mx->parsed()) spec.command = "maximize";
  if (rp->parsed()) spec.command = "reproduce";
  if (au->parsed()) spec.command = "audit";
  return execute(spec, std::cout, std::cerr);
}

}  // namespace ludersgap
