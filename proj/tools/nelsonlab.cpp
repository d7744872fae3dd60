/*
 * Copyright 2026 The nelsonlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlab/closedform.hpp"
#include "nlab/config.hpp"
#include "nlab/jsonout.hpp"
#include "nlab/kernels.hpp"
#include "nlab/observables.hpp"
#include "nlab/particle.hpp"
#include "nlab/quadrature.hpp"
#include "nlab/spectral.hpp"
#include "nlab/verify.hpp"

using namespace nlab;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

constexpr double kPi = std::numbers::pi;

struct Row {
  std::string name;
  double value = 0.0;
  bool has_value = true;
  std::string relation;  // "<", "<=", "==" against ref, or empty
  double ref = 0.0;
  double tol = 0.0;
  std::string note;
  bool ok = true;
};

class Table {
 public:
  void value(const std::string& name, const std::function<double()>& f,
             std::string note = {}) {
    Row r;
    r.name = name;
    r.note = std::move(note);
    try {
      r.value = f();
    } catch (const std::exception& ex) {
      r.has_value = false;
      r.note = ex.what();
    }
    rows_.push_back(r);
  }
  void check(const std::string& name, const std::function<double()>& f,
             const std::string& rel, double ref, double tol = 0.0,
             std::string note = {}) {
    Row r;
    r.name = name;
    r.relation = rel;
    r.ref = ref;
    r.tol = tol;
    r.note = std::move(note);
    try {
      r.value = f();
      if (rel == "<")
        r.ok = r.value < ref;
      else if (rel == "<=")
        r.ok = r.value <= ref + tol;
      else if (rel == "==")
        r.ok = std::abs(r.value - ref) <= tol * std::max(1.0, std::abs(ref));
    } catch (const std::exception& ex) {
      r.has_value = false;
      r.ok = false;
      r.note = ex.what();
    }
    rows_.push_back(r);
  }
  bool all_ok() const {
    for (const auto& r : rows_)
      if (!r.ok) return false;
    return true;
  }
  Json json() const {
    Json a = Json::array();
    for (const auto& r : rows_) {
      Json o = Json::object();
      o.set("name", r.name);
      if (r.has_value)
        o.set_num("value", r.value);
      else
        o.set("value", nullptr);
      if (!r.relation.empty()) {
        o.set("relation", r.relation);
        o.set_num("reference", r.ref);
        if (r.tol > 0.0) o.set("tolerance", r.tol);
        o.set("ok", r.ok);
      }
      if (!r.note.empty()) o.set("note", r.note);
      a.push(std::move(o));
    }
    return a;
  }
  std::string csv() const {
    std::string s = "name,value,value_display,relation,reference,ok,note\n";
    for (const auto& r : rows_) {
      s += csv_field(r.name) + ',';
      s += (r.has_value ? format17(r.value) : "") + ',';
      s += (r.has_value ? format_display(r.value) : "") + ',';
      s += r.relation + ',';
      s += (r.relation.empty() ? "" : format17(r.ref)) + ',';
      s += std::string(r.relation.empty() ? "" : (r.ok ? "true" : "false")) + ',';
      s += csv_field(r.note) + '\n';
    }
    return s;
  }

 private:
  std::vector<Row> rows_;
};

Json header(const RunConfig& c) {
  Json h = Json::object();
  h.set("tool", "nelsonlab");
  h.set("version", "1.0.0");
  h.set("command", c.command);
  h.set("config", config_json(c));
  return h;
}

std::string csv_header(const RunConfig& c) {
  std::string s = "# nelsonlab 1.0.0 command=" + c.command + "\n";
  Json cfg = config_json(c);
  std::string line = cfg.dump(0);
  s += "# config " + line;
  return s;
}

ModelParams params_of(const RunConfig& c) {
  return make_params(c.e, c.Z, c.m, c.kappa, c.lambda);
}

SolveSetup setup_of(const RunConfig& c) {
  SolveSetup s;
  s.params = params_of(c);
  s.lambda1 = c.lambda1;
  s.res.n = c.grid_n;
  s.res.L = c.box_L;
  s.res.n_radial = c.modes_radial;
  s.res.n_angular = c.modes_angular;
  s.res.n_max = c.nmax;
  s.lanczos.tol = c.tol;
  s.lanczos.maxit = c.maxit;
  return s;
}

Json root_json(const RootReport& r) {
  Json o = Json::object();
  o.set("found", r.found);
  if (r.found)
    o.set_num("value", r.value);
  else
    o.set("value", nullptr);
  if (!r.note.empty()) o.set("note", r.note);
  return o;
}

struct Output {
  Json json;
  std::string csv;
  int status = kOk;
};

Output cmd_constants(const RunConfig& c) {
  const double e = c.e, Z = c.Z, tau = c.tau;
  Table t;
  const double euv = e_uv(Z);
  t.value("e_uv", [&] { return euv; });
  t.check("e_uv.residual", [&] { return std::abs(c_uv(euv, Z) - 1.0); }, "<",
          1e-12);
  t.value("c_uv", [&] { return c_uv(e, Z); });
  t.check("c_star(tau=0,rho=1)", [&] { return c_star_c1(e, Z, 0.0, 1.0).c_star; },
          "==", c_uv(e, Z), 1e-13, "equals C_UV(e)");
  t.value("c_star(tau,rho=e^2)",
          [&] { return c_star_c1(e, Z, tau, e * e).c_star; });
  t.value("c1(tau,rho=e^2)", [&] {
    const CStar s = c_star_c1(e, Z, tau, e * e);
    if (!s.c1_defined) throw DomainError("C_* >= 1, C_1 undefined");
    return s.c1;
  });
  t.value("c_d", [&] { return c_d(e, Z); });
  t.value("c_d_restated", [&] { return c_d_restated(e, Z); });
  t.value("log_factor_L", [&] { return log_factor_L(e, Z); });
  t.value("photon_K", [&] { return photon_K(e, Z); });
  t.value("photon_K_small",
          [&] { return photon_K(e, Z, LCoefficient::Small); });
  t.value("hard_photon_bound", [&] { return hard_photon_bound(e, Z); });
  t.value("soft_photon_bound", [&] { return soft_photon_bound(e, Z); });
  t.value("total_photon_bound", [&] { return total_photon_bound(e, Z); });
  t.value("c_tau", [&] { return c_tau(e, Z, tau); });
  t.value("f_ir", [&] { return f_ir(e, Z, tau); });
  t.value("q_bound", [&] { return q_bound(e, Z, tau); });
  t.value("g_ir", [&] { return g_ir(e, Z, tau); });
  t.value("moment_log_bound(R=1)", [&] { return moment_log_bound(e, Z, 1.0); });
  t.value("moment_abs_bound", [&] { return moment_abs_bound(e, Z); });
  t.value("moment_sq_bound(R=8)", [&] { return moment_sq_bound(e, Z, 8.0); });
  t.value("atomic_energy_rel", [&] { return atomic_energy_rel(e, Z); });
  const double rho = e * e;
  t.value("ceiling_f_over_sqrt_omega", [&] { return ceiling_f_over_sqrt_omega(rho, tau); });
  t.value("ceiling_f_ir_l2", [&] { return ceiling_f_ir_l2(); });
  t.value("ceiling_f_ir_over_sqrt_omega", [&] { return ceiling_f_ir_over_sqrt_omega(); });
  t.value("ceiling_f_uv_over_sqrt_omega", [&] { return ceiling_f_uv_over_sqrt_omega(rho, tau); });
  t.value("ceiling_f_uv_over_quarter_omega", [&] { return ceiling_f_uv_over_quarter_omega(rho, tau); });
  t.value("ceiling_a_squared", [&] { return ceiling_a_squared(rho, tau); });

  Output o;
  o.json = header(c);
  Json w = Json::object();
  try {
    const CouplingWindow cw = e_ir(Z, tau);
    w.set("tau", cw.tau);
    w.set("Z", cw.Z);
    w.set_num("e_uv", cw.e_uv);
    w.set("a_ir1", root_json(cw.a_ir1));
    w.set("a_ir2", root_json(cw.a_ir2));
    w.set("sqrtpi_over_c0", root_json(cw.sqrtpi_over_c0));
    w.set("one", cw.one);
    w.set("empty", cw.empty);
    w.set_num("e_ir", cw.e_ir);
    w.set("literal_defined", cw.literal_defined);
    if (cw.literal_defined)
      w.set_num("e_ir_literal", cw.e_ir_literal);
    else
      w.set("e_ir_literal", nullptr);
    if (!cw.note.empty()) w.set("note", cw.note);
  } catch (const std::exception& ex) {
    w.set("error", ex.what());
  }
  o.json.set("coupling_window", std::move(w));
  o.json.set("values", t.json());
  o.csv = t.csv();
  o.status = t.all_ok() ? kOk : kCheckFailed;
  return o;
}

Output cmd_integrals(const RunConfig& c) {
  Table t;
  const double inf = std::numeric_limits<double>::infinity();
  t.check("shell_moment(a=0,b=2,full)",
          [&] { return shell_moment(0.0, 2.0, 1.0, {0.0, inf, Region::Full}).value; },
          "==", 8.0 * kPi, 1e-9, "analytic 8 pi/c with c = 1");
  t.check("shell_moment(a=0,b=2,c=4)",
          [&] { return shell_moment(0.0, 2.0, 4.0, {0.0, inf, Region::Full}).value; },
          "==", 2.0 * kPi, 1e-9, "analytic 8 pi/c with c = 4");
  t.check("effective_mass_coefficient",
          [&] { return effective_mass_coefficient().value; }, "==",
          1.0 / (6.0 * kPi * kPi), 1e-9, "analytic 1/(6 pi^2)");
  t.value("effective_mass_coefficient_massive",
          [&] { return effective_mass_coefficient(true).value; });
  const double cin_ceiling =
      std::numbers::egamma + std::log(15.0) + 91.0 / 30.0;
  t.check("cin(100)", [&] { return cin(100.0); }, "<=", cin_ceiling);
  t.check("cin(1e4)", [&] { return cin(1e4); }, "<=",
          cin_ceiling + 2.0 * std::log(1e4));
  const NormBundle nb = f_tau_norms(0.0, inf, 0.0, 1.0);
  t.check("f_ir_l2(tau=0)", [&] { return nb.f_ir_l2; }, "<", ceiling_f_ir_l2());
  t.check("f_ir_over_sqrt_omega(tau=0)", [&] { return nb.f_ir_over_sqrt_omega; },
          "<", ceiling_f_ir_over_sqrt_omega());
  t.check("f_uv_over_sqrt_omega(tau=0)", [&] { return nb.f_uv_over_sqrt_omega; },
          "<", ceiling_f_uv_over_sqrt_omega(1.0, 0.0));
  t.check("f_uv_over_quarter_omega(tau=0)",
          [&] { return nb.f_uv_over_quarter_omega; }, "<",
          ceiling_f_uv_over_quarter_omega(1.0, 0.0));
  if (c.e != 0.0) {
    const double rho = c.e * c.e;
    const NormBundle nt = f_tau_norms(params_of(c), c.tau, rho);
    t.value("f_ir_l2(tau)", [&] { return nt.f_ir_l2; });
    t.value("f_ir_over_sqrt_omega(tau)", [&] { return nt.f_ir_over_sqrt_omega; });
    t.check("f_uv_over_sqrt_omega(tau)", [&] { return nt.f_uv_over_sqrt_omega; },
            "<", ceiling_f_uv_over_sqrt_omega(rho, c.tau));
    t.check("f_uv_over_quarter_omega(tau)",
            [&] { return nt.f_uv_over_quarter_omega; }, "<",
            ceiling_f_uv_over_quarter_omega(rho, c.tau));
  }
  t.value("energy_renormalization",
          [&] { return energy_renormalization(params_of(c)).value; });
  t.value("correction_potential(x=1)",
          [&] { return correction_potential(params_of(c), 1.0); });
  Output o;
  o.json = header(c);
  o.json.set("values", t.json());
  o.csv = t.csv();
  o.status = t.all_ok() ? kOk : kCheckFailed;
  return o;
}

Json ground_json(const GroundStateReport& g) {
  Json o = Json::object();
  o.set("variant", g.variant);
  o.set("dimension", g.dimension);
  o.set("frame_tau", g.frame_tau);
  o.set_num("frame_rho", g.frame_rho);
  o.set_num("energy", g.energy);
  o.set_num("energy_rel", g.energy_rel);
  o.set_num("atomic_energy", g.atomic_energy);
  o.set_num("atomic_energy_rel", g.atomic_energy_rel);
  o.set_num("atomic_analytic", g.atomic_analytic);
  o.set_num("residual", g.residual);
  o.set("iterations", g.iterations);
  o.set("restarts", g.restarts);
  o.set("converged", g.converged);
  Json ph = Json::object();
  ph.set_num("total", g.photons.total);
  ph.set_num("soft", g.photons.soft);
  ph.set_num("hard", g.photons.hard);
  o.set("photons", std::move(ph));
  Json mo = Json::object();
  mo.set_num("abs", g.moments.abs);
  mo.set_num("abs_squared", g.moments.abs_squared);
  mo.set_num("log3", g.moments.log3);
  mo.set_num("exp", g.moments.exp);
  mo.set_num("exp_beta", g.moments.exp_beta);
  o.set("moments_rel", std::move(mo));
  Json ov = Json::object();
  ov.set_num("overlap_P", g.overlap.overlap_P);
  ov.set_num("overlap_Q", g.overlap.overlap_Q);
  ov.set_num("vacuum_weight", g.overlap.vacuum_weight);
  o.set("overlap", std::move(ov));
  if (!g.note.empty()) o.set("note", g.note);
  return o;
}

std::string ground_csv(const GroundStateReport& g) {
  Table t;
  auto v = [&](const char* n, double x) { t.value(n, [x] { return x; }); };
  v("dimension", static_cast<double>(g.dimension));
  v("energy", g.energy);
  v("energy_rel", g.energy_rel);
  v("atomic_energy", g.atomic_energy);
  v("atomic_energy_rel", g.atomic_energy_rel);
  v("residual", g.residual);
  v("iterations", g.iterations);
  v("photons.total", g.photons.total);
  v("photons.soft", g.photons.soft);
  v("photons.hard", g.photons.hard);
  v("moments.abs", g.moments.abs);
  v("moments.abs_squared", g.moments.abs_squared);
  v("moments.log3", g.moments.log3);
  v("moments.exp", g.moments.exp);
  v("overlap_P", g.overlap.overlap_P);
  v("overlap_Q", g.overlap.overlap_Q);
  v("vacuum_weight", g.overlap.vacuum_weight);
  return t.csv();
}

Output cmd_solve(const RunConfig& c) {
  const SolvedModel m = solve_ground(setup_of(c));
  Output o;
  o.json = header(c);
  o.json.set("ground_state", ground_json(m.report));
  o.csv = ground_csv(m.report);
  o.status = m.report.converged ? kOk : kCheckFailed;
  return o;
}

Json report_json(const BoundReport& r) {
  Json o = Json::object();
  o.set("id", r.id);
  o.set("anchor", r.anchor);
  o.set_num("lhs", r.lhs);
  o.set_num("rhs", r.rhs);
  o.set_num("slack", r.slack);
  o.set("status", status_name(r.status));
  if (!r.reason.empty()) o.set("reason", r.reason);
  o.set("notes", r.notes);
  return o;
}

VerifySetup verify_setup(const RunConfig& c) {
  VerifySetup v;
  v.solve = setup_of(c);
  v.tau = c.tau;
  v.select = split_list(c.select);
  return v;
}

Output cmd_verify(const RunConfig& c) {
  const SuiteResult r = run_suite(verify_setup(c));
  Output o;
  o.json = header(c);
  Json params = config_json(c);
  Json reps = Json::array();
  int pass = 0, fail = 0, skip = 0;
  for (const auto& b : r.reports) {
    Json j = report_json(b);
    j.set("params", params);
    reps.push(std::move(j));
    (b.status == Status::Pass ? pass : b.status == Status::Fail ? fail : skip)++;
  }
  Json sum = Json::object();
  sum.set("pass", pass);
  sum.set("fail", fail);
  sum.set("skipped", skip);
  o.json.set("summary", std::move(sum));
  o.json.set("reports", std::move(reps));
  if (r.solved) o.json.set("ground_state", ground_json(r.ground));
  Json d = Json::object();
  for (const auto& x : r.diagnostics) d.set_num(x.name, x.value);
  o.json.set("diagnostics", std::move(d));
  std::string s = "id,status,lhs,rhs,slack,slack_display,reason,notes\n";
  for (const auto& b : r.reports)
    s += b.id + ',' + status_name(b.status) + ',' + format17(b.lhs) + ',' +
         format17(b.rhs) + ',' + format17(b.slack) + ',' +
         format_display(b.slack) + ',' + csv_field(b.reason) + ',' +
         csv_field(b.notes) + '\n';
  o.csv = s;
  o.status = fail ? kCheckFailed : kOk;
  return o;
}

Output cmd_scan(const RunConfig& c) {
  static const std::vector<std::string> axes = {"e",   "Z",   "m",      "kappa",
                                                "lambda", "tau", "lambda1"};
  if (std::find(axes.begin(), axes.end(), c.axis) == axes.end())
    throw ConfigError("scan axis must be one of e, Z, m, kappa, lambda, tau, lambda1");
  std::vector<std::string> ids;
  const auto sel = split_list(c.select);
  for (const auto& id : check_ids())
    if (selected(sel, id)) ids.push_back(id);
  std::string s = c.axis + ",energy_rel,photons_total,overlap_P";
  for (const auto& id : ids) s += ',' + id + ".slack," + id + ".status";
  s += '\n';
  Json rows = Json::array();
  int failures = 0;
  for (int i = 0; i < c.steps; ++i) {
    const double x = c.steps == 1 ? c.from
                                  : c.from + (c.to - c.from) * i / (c.steps - 1);
    RunConfig ci = c;
    apply_config(ci, c.axis, format17(x));
    validate_config(ci);
    const SuiteResult r = run_suite(verify_setup(ci));
    failures += r.failures();
    std::map<std::string, const BoundReport*> by;
    for (const auto& b : r.reports) by[b.id] = &b;
    s += format17(x) + ',' + format17(r.ground.energy_rel) + ',' +
         format17(r.ground.photons.total) + ',' +
         format17(r.ground.overlap.overlap_P);
    Json row = Json::object();
    row.set_num(c.axis, x);
    row.set_num("energy_rel", r.ground.energy_rel);
    row.set_num("photons_total", r.ground.photons.total);
    row.set_num("overlap_P", r.ground.overlap.overlap_P);
    Json checks = Json::object();
    for (const auto& id : ids) {
      const BoundReport* b = by.count(id) ? by[id] : nullptr;
      const bool has = b && b->status != Status::Skipped;
      s += ',' + (has ? format17(b->slack) : std::string()) + ',' +
           (b ? status_name(b->status) : "absent");
      Json cj = Json::object();
      if (has)
        cj.set_num("slack", b->slack);
      else
        cj.set("slack", nullptr);
      cj.set("status", b ? status_name(b->status) : "absent");
      checks.set(id, std::move(cj));
    }
    row.set("checks", std::move(checks));
    rows.push(std::move(row));
    s += '\n';
  }
  Output o;
  o.json = header(c);
  o.json.set("rows", std::move(rows));
  o.csv = s;
  o.status = failures ? kCheckFailed : kOk;
  return o;
}

Output cmd_effmass(const RunConfig& c) {
  const ModelParams p = params_of(c);
  const ModeGrid modes =
      build_modes(c.kappa, c.lambda, c.modes_radial, c.modes_angular);
  LanczosOptions lo;
  lo.tol = c.tol;
  lo.maxit = c.maxit;
  const EffectiveMass r = effective_mass_numeric(p, modes, c.nmax, lo);
  const double coef = 1.0 / (6.0 * kPi * kPi);
  Table t;
  t.value("m_eff_over_m", [&] { return r.ratio; });
  t.value("riemann", [&] { return r.riemann; },
          "e^2 times the mode sum of the second order integrand");
  t.value("perturbative_continuum", [&] { return c.e * c.e * coef; },
          "e^2/(6 pi^2)");
  t.value("quadratic_form", [&] { return r.quadratic_form; });
  t.check("mean_W", [&] { return r.mean_W; }, "<", 1e-8, 0.0,
          "gradient of E_P at P = 0");
  t.value("m_eff_over_m_minus_one_vs_riemann",
          [&] {
            if (r.riemann == 0.0) return std::abs(r.ratio - 1.0);
            return std::abs(r.ratio - 1.0 - r.riemann) / r.riemann;
          },
          "relative; second order agreement, expected below 1e-3 for small e");
  t.check("m_eff_over_m_at_least_one", [&] { return 1.0 - r.ratio; }, "<=", 0.0,
          1e-14);
  t.value("ground_energy", [&] { return r.ground_energy; });
  t.value("cg_iterations", [&] { return r.cg_iterations; });
  for (int nr : {2, 4, 8, 12, 24}) {
    const ModeGrid g = build_modes(c.kappa, c.lambda, nr, c.modes_angular);
    t.value("riemann_coefficient_over_continuum(n_radial=" + std::to_string(nr) +
                ")",
            [&] { return effective_mass_riemann(g, c.m) / coef; });
  }
  Output o;
  o.json = header(c);
  o.json.set("dimension", FockBasis(static_cast<int>(modes.size()), c.nmax).dim());
  o.json.set("converged", r.converged);
  if (!r.note.empty()) o.json.set("note", r.note);
  o.json.set("values", t.json());
  o.csv = t.csv();
  o.status = r.converged && t.all_ok() ? kOk : kCheckFailed;
  return o;
}

Output cmd_binding(const RunConfig& c) {
  const ModelParams p = params_of(c);
  const double az = p.alpha * p.Z;
  Table t;
  const double pnorm2 = radial_pnorm2_l1(az);
  auto element = [az](double shift) { return radial_resolvent_l1(az, shift); };
  const BindingExpansion b = binding_second_order(p.e, p.Z, element, pnorm2);
  const double e_at = atomic_energy_rel(p.e, p.Z);
  const double analytic = -e_at * p.e * p.e / (6.0 * kPi * kPi);
  t.value("atomic_energy_rel", [&] { return e_at; });
  t.value("pnorm2", [&] { return pnorm2; }, "radial discretization of the exact (alpha Z)^2");
  t.value("second_order", [&] { return b.second_order; });
  t.value("leading_term", [&] { return b.leading_term; });
  t.value("ratio_term", [&] { return b.ratio_term; });
  t.check("ratio_one_term", [&] { return b.ratio_one_term; }, "==",
          p.e == 0.0 ? 0.0 : -e_at * p.e * p.e / (6.0 * kPi * kPi) * pnorm2 /
                                 (az * az),
          1e-6, "-E_at e^2/(6 pi^2) with the discrete |p psi_at|^2");
  t.value("ratio_one_analytic", [&] { return analytic; }, "-E_at e^2/(6 pi^2)");
  t.check("abs_second_order_vs_envelope", [&] { return std::abs(b.second_order); },
          "<=", b.envelope);
  t.check("worst_envelope_ratio", [&] { return b.worst_envelope_ratio; }, "<=",
          1.0, 1e-12);

  const SolveSetup s = setup_of(c);
  const SolvedModel m = solve_ground(s);
  const SpectralResult v0 = solve_v0(s);
  const double to_rel = m.frame.r_of(2.0 * m.frame.tau);
  const double E = m.report.energy_rel;
  const double Ev0 = v0.energy * to_rel;
  t.value("discrete_energy_rel", [&] { return E; });
  t.value("discrete_v0_energy_rel", [&] { return Ev0; });
  t.check("discrete_binding_minus_atomic",
          [&] { return -m.report.atomic_energy_rel - (Ev0 - E); }, "<=", 0.0,
          1e-10 * std::max(1.0, std::abs(e_at)),
          "-E_at_h <= E_v0 - E");
  Output o;
  o.json = header(c);
  o.json.set("values", t.json());
  o.csv = t.csv();
  o.status = t.all_ok() ? kOk : kCheckFailed;
  return o;
}

int emit(const RunConfig& c, const Output& o, bool csv) {
  const std::string text = csv ? csv_header(c) + o.csv : o.json.dump(2);
  if (c.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
  }
  return o.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nelsonlab: truncated Nelson model ground states and bounds"};
  app.require_subcommand(1, 1);
  std::map<std::string, std::string> flags;
  std::map<std::string, CLI::Option*> opts;
  const std::map<std::string, std::string> help = {
      {"e", "charge"},
      {"Z", "nuclear charge"},
      {"m", "particle mass"},
      {"kappa", "infrared cutoff"},
      {"lambda", "ultraviolet cutoff"},
      {"tau", "scale exponent for the overlap constants"},
      {"lambda1", "Bohr radius of the solver frame"},
      {"grid-n", "grid points per axis"},
      {"box-L", "half box length in frame units"},
      {"modes-radial", "radial mode nodes"},
      {"modes-angular", "directions per radial node"},
      {"nmax", "total boson number cap"},
      {"tol", "Lanczos residual tolerance"},
      {"maxit", "Lanczos iteration limit"},
      {"format", "json or csv"},
      {"out", "output path (default stdout)"},
      {"select", "comma separated check id prefixes"},
      {"axis", "scan axis"},
      {"from", "scan start"},
      {"to", "scan end"},
      {"steps", "scan points"}};
  for (const auto& k : config_keys())
    opts[k] = app.add_option("--" + k, flags[k], help.at(k));
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"constants", "closed form constants and coupling window"},
      {"integrals", "quadrature table against analytic oracles and ceilings"},
      {"solve", "ground state of the truncated model"},
      {"verify", "inequality and identity suite"},
      {"scan", "verify suite along a parameter axis"},
      {"effmass", "effective mass from the fiber model"},
      {"binding", "binding energy, second order and discrete"}};
  for (const auto& [name, desc] : commands)
    app.add_subcommand(name, desc)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? kOk : kUsage;
  }

  RunConfig cfg;
  bool format_set = false;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!config_path.empty())
      for (const auto& [k, v] : read_config_file(config_path)) {
        apply_config(cfg, k, v);
        format_set |= k == "format";
      }
    for (const auto& k : config_keys())
      if (opts[k]->count() > 0) {
        apply_config(cfg, k, flags[k]);
        format_set |= k == "format";
      }
    validate_config(cfg);
  } catch (const ConfigError& ex) {
    std::cerr << "nelsonlab: " << ex.what() << "\n";
    return kUsage;
  }
  const bool csv = cfg.format == "csv" || (cfg.command == "scan" && !format_set);

  try {
    Output o;
    if (cfg.command == "constants") o = cmd_constants(cfg);
    else if (cfg.command == "integrals") o = cmd_integrals(cfg);
    else if (cfg.command == "solve") o = cmd_solve(cfg);
    else if (cfg.command == "verify") o = cmd_verify(cfg);
    else if (cfg.command == "scan") o = cmd_scan(cfg);
    else if (cfg.command == "effmass") o = cmd_effmass(cfg);
    else o = cmd_binding(cfg);
    return emit(cfg, o, csv);
  } catch (const ConfigError& ex) {
    std::cerr << "nelsonlab: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "nelsonlab: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "nelsonlab: internal error: " << ex.what() << "\n";
    return kInternal;
  }
}
