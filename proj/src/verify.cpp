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
#include "nlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "nlab/closedform.hpp"
#include "nlab/spectral.hpp"

namespace nlab {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "skipped";
}

double report_atol(double rhs) { return 1e-10 * std::max(1.0, std::abs(rhs)); }

BoundReport make_report(std::string id, std::string anchor, double lhs,
                        double rhs, std::string notes) {
  BoundReport r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.status = r.slack >= -report_atol(rhs) ? Status::Pass : Status::Fail;
  r.notes = std::move(notes);
  return r;
}

BoundReport skipped_report(std::string id, std::string anchor,
                           std::string reason) {
  BoundReport r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.status = Status::Skipped;
  r.reason = std::move(reason);
  r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
  return r;
}

int SuiteResult::failures() const {
  return static_cast<int>(std::count_if(
      reports.begin(), reports.end(),
      [](const BoundReport& r) { return r.status == Status::Fail; }));
}

bool selected(const std::vector<std::string>& select, const std::string& id) {
  if (select.empty()) return true;
  for (const auto& s : select)
    if (id.compare(0, s.size(), s) == 0) return true;
  return false;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "energy.upper",         "energy.lower",       "binding",
      "localization.gradient", "localization.sqrt", "localization.log",
      "moments.log",          "moments.abs",        "moments.square",
      "moments.exp",          "photons.hard",       "photons.soft",
      "photons.total",        "identity.pull_through",
      "identity.telescoping", "overlap.g_ir",       "overlap.markov",
      "overlap.q_bound"};
  return ids;
}

const std::vector<double>& moment_radii() {
  static const std::vector<double> r = {5.0, 6.0, 8.0, 16.0, 32.0, 100.0};
  return r;
}

const std::vector<double>& exp_radii() {
  static const std::vector<double> r = {8.0, 16.0, 32.0, 100.0};
  return r;
}

namespace {

constexpr double kIdentityTol = 1e-10;

const char* anchor_of(const std::string& id) {
  static const std::vector<std::pair<std::string, const char*>> a = {
      {"energy.upper", "variational upper bound E <= E_at"},
      {"energy.lower", "ultraviolet lower bound E >= E_at - C_UV(e)"},
      {"binding", "strict positivity of the binding energy"},
      {"localization.gradient", "gradient ceiling of the cut-off profile G_R"},
      {"localization.sqrt", "localization bound |G psi|^2, G_R = chi_R |x|^(1/2)"},
      {"localization.log", "localization bound |G psi|^2, G_R = chi_R log(3+c|x|)^(1/2)"},
      {"moments.log", "ground state expectation of log(3+|x|)"},
      {"moments.abs", "ground state expectation of |x| (Bohr radius)"},
      {"moments.square", "ground state expectation of |x|^2"},
      {"moments.exp", "exponential decay of the ground state"},
      {"photons.hard", "hard photon number bound 4 alpha C_D^2/(3 pi)"},
      {"photons.soft", "soft photon number bound"},
      {"photons.total", "total photon number bound K e^2/(4 pi)"},
      {"identity.pull_through", "pull-through formula for [a_j, H]"},
      {"identity.telescoping", "soft photon telescoping identities"},
      {"overlap.g_ir", "overlap with the decoupled ground state >= G_IR(e)"},
      {"overlap.markov", "vacuum weight >= 1 - <N_f>"},
      {"overlap.q_bound", "<psi, Q psi> <= 8 (4 pi/Z)^2 F_IR(e)"}};
  for (const auto& [k, v] : a)
    if (k == id) return v;
  return "";
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// sup over r >= R/2 of G_R(r)^2 / r for the log profile.
double log_profile_sup(double R, double c) {
  auto q = [&](double r) {
    const double G = localization_value(Profile::Log, r, R, c);
    return G * G / r;
  };
  double best_r = R, best = q(R);
  const int n = 4000;
  for (int i = 0; i <= n; ++i) {
    const double r = 0.5 * R * std::pow(400.0, static_cast<double>(i) / n);
    const double v = q(r);
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  const double lo = std::max(0.5 * R, best_r / std::pow(400.0, 1.0 / n));
  const double hi = best_r * std::pow(400.0, 1.0 / n);
  auto res = boost::math::tools::brent_find_minima(
      [&](double r) { return -q(r); }, lo, hi, 50);
  return std::max(best, -res.second);
}

struct Runner {
  const VerifySetup& s;
  SuiteResult out;
  SolvedModel model;
  bool have_model = false;

  void add(BoundReport r) { out.reports.push_back(std::move(r)); }
  BoundReport report(const std::string& id, double lhs, double rhs,
                     std::string notes = {}) {
    return make_report(id, anchor_of(id), lhs, rhs, std::move(notes));
  }
  BoundReport skip(const std::string& id, std::string reason) {
    return skipped_report(id, anchor_of(id), std::move(reason));
  }
  bool want(const std::string& id) const { return selected(s.select, id); }
};

}  // namespace

SuiteResult run_suite(const VerifySetup& s) {
  Runner run{s, {}, {}, false};
  const ModelParams& p = s.solve.params;
  const double e = std::abs(p.e);
  const double Z = p.Z;
  const double euv = e_uv(Z);
  const bool uv_ok = e < euv;
  const std::string uv_reason = "C_UV >= 1 (|e| >= e_uv = " + fmt(euv) + ")";
  const std::string e0_reason =
      "e = 0: relativistic length scale 4 pi/(e^2 Z) is infinite";

  bool need_ground = false;
  for (const auto& id : check_ids())
    if (run.want(id) && id.rfind("identity", 0) != 0 &&
        id != "localization.gradient")
      need_ground = true;
  if (need_ground) {
    run.model = solve_ground(s.solve);
    run.have_model = true;
    run.out.solved = true;
    run.out.ground = run.model.report;
    const auto& g = run.out.ground;
    run.out.diagnostics.push_back({"atomic_energy_discrete", g.atomic_energy});
    run.out.diagnostics.push_back({"atomic_energy_analytic", g.atomic_analytic});
    run.out.diagnostics.push_back(
        {"atomic_energy_gap", g.atomic_energy - g.atomic_analytic});
    run.out.diagnostics.push_back({"ground_residual", g.residual});
    if (p.e != 0.0) {
      PositionFunction f;
      f.kind = PositionKind::Abs;
      const Hamiltonian& H = *run.model.H;
      const double r_at = spatial_moment(
          H, H.product_with_vacuum(run.model.atomic.psi), f);
      const double hyd = 1.5 / (p.alpha * Z);
      run.out.diagnostics.push_back({"atomic_mean_radius", r_at});
      run.out.diagnostics.push_back({"atomic_mean_radius_analytic", hyd});
    }
  }
  const GroundStateReport& g = run.out.ground;

  // Energy window.
  if (run.want("energy.upper")) {
    if (!uv_ok)
      run.add(run.skip("energy.upper", uv_reason));
    else
      run.add(run.report("energy.upper", g.energy_rel, g.atomic_energy_rel,
                         "relativistic units; discrete E_at_h reference"));
  }
  if (run.want("energy.lower")) {
    if (!uv_ok)
      run.add(run.skip("energy.lower", uv_reason));
    else
      run.add(run.report(
          "energy.lower", g.atomic_energy_rel - c_uv(p.e, Z), g.energy_rel,
          "relativistic units; truncation only raises the energy, so a "
          "failure here signals an implementation bug"));
  }

  if (run.want("binding")) {
    const SpectralResult v0 = solve_v0(s.solve);
    const double to_rel = run.model.frame.r_of(2.0 * run.model.frame.tau);
    run.out.v0_energy_rel = v0.energy * to_rel;
    run.out.diagnostics.push_back({"v0_energy_rel", run.out.v0_energy_rel});
    run.add(run.report("binding", -g.atomic_energy_rel,
                       run.out.v0_energy_rel - g.energy_rel,
                       "E_v0 - E >= -E_at_h, relativistic units"));
  }

  // Localization in the solver frame (Bohr radius lambda1).
  const double lambda1 = s.solve.lambda1;
  const double R_loc = 4.0 * lambda1;
  if (run.want("localization.gradient")) {
    if (p.e == 0.0) {
      run.add(run.skip("localization.gradient", e0_reason));
    } else {
      const PositionGrid grid(s.solve.res.n, s.solve.res.L);
      const double d = localization_grad_sup(grid, Profile::Sqrt, R_loc, 1.0);
      run.add(run.report("localization.gradient", d * d,
                         grad_ceiling_sqrt(R_loc),
                         "discrete squared gradient of chi_R |x|^(1/2), R = " +
                             fmt(R_loc)));
    }
  }
  for (const char* id : {"localization.sqrt", "localization.log"}) {
    if (!run.want(id)) continue;
    if (p.e == 0.0) {
      run.add(run.skip(id, e0_reason));
      continue;
    }
    if (!uv_ok) {
      run.add(run.skip(id, uv_reason));
      continue;
    }
    const bool is_sqrt = std::string(id) == "localization.sqrt";
    PositionFunction f;
    f.kind = PositionKind::Localization;
    f.R = R_loc;
    f.profile = is_sqrt ? Profile::Sqrt : Profile::Log;
    f.c = is_sqrt ? 1.0 : run.model.frame.r_of(-run.model.frame.tau);
    const double lhs = frame_expectation(*run.model.H, run.model.ground.vector, f);
    const double grad =
        is_sqrt ? grad_ceiling_sqrt(R_loc) : grad_ceiling_log(R_loc, f.c);
    const double sup = is_sqrt ? 1.0 : log_profile_sup(R_loc, f.c);
    const double rhs = lambda1 * lambda1 * (grad + 2.0 * sup / lambda1);
    run.add(run.report(id, lhs, rhs,
                       "frame units, R = " + fmt(R_loc) + ", lambda1 = " +
                           fmt(lambda1)));
  }

  // Moments in relativistic units.
  auto moment_gate = [&](const char* id) -> bool {
    if (!run.want(id)) return false;
    if (p.e == 0.0) {
      run.add(run.skip(id, e0_reason));
      return false;
    }
    if (!uv_ok) {
      run.add(run.skip(id, uv_reason));
      return false;
    }
    return true;
  };
  if (moment_gate("moments.log"))
    run.add(run.report("moments.log", g.moments.log3,
                       moment_log_bound(p.e, Z, 1.0), "R = 1"));
  if (moment_gate("moments.abs"))
    run.add(run.report("moments.abs", g.moments.abs, moment_abs_bound(p.e, Z)));
  // Tightest scanned R.
  if (moment_gate("moments.square")) {
    double best = std::numeric_limits<double>::infinity(), bestR = 0.0;
    for (double R : moment_radii()) {
      const double b = moment_sq_bound(p.e, Z, R);
      if (b < best) {
        best = b;
        bestR = R;
      }
    }
    run.add(run.report("moments.square", g.moments.abs_squared, best,
                       "tightest R = " + fmt(bestR)));
  }
  if (moment_gate("moments.exp")) {
    const double beta = g.moments.exp_beta;
    double best = std::numeric_limits<double>::infinity(), bestR = 0.0;
    std::string scanned;
    for (double R : exp_radii()) {
      if (!(exp_decay_window(p.e, Z, R, beta) > 0.0)) continue;
      const double b = exp_decay_bound(p.e, Z, R, beta);
      scanned += (scanned.empty() ? "" : ",") + fmt(R);
      if (b < best) {
        best = b;
        bestR = R;
      }
    }
    if (bestR == 0.0)
      run.add(run.skip("moments.exp", "beta window closed for every scanned R"));
    else
      run.add(run.report("moments.exp", g.moments.exp, best,
                         "beta = " + fmt(beta) + ", R scanned {" + scanned +
                             "}, tightest R = " + fmt(bestR)));
  }

  // Photon numbers.
  struct PhotonCheck {
    const char* id;
    double lhs;
    double (*bound)(double, double);
  };
  const PhotonCheck photon_checks[] = {
      {"photons.hard", g.photons.hard, hard_photon_bound},
      {"photons.soft", g.photons.soft,
       [](double ee, double zz) { return soft_photon_bound(ee, zz); }},
      {"photons.total", g.photons.total,
       [](double ee, double zz) { return total_photon_bound(ee, zz); }}};
  for (const auto& c : photon_checks) {
    if (!run.want(c.id)) continue;
    if (!uv_ok) {
      run.add(run.skip(c.id, uv_reason));
      continue;
    }
    try {
      run.add(run.report(c.id, c.lhs, c.bound(p.e, Z)));
    } catch (const DomainError& ex) {
      run.add(run.skip(c.id, ex.what()));
    }
  }

  // Operator identities on dedicated small models.
  if (run.want("identity.pull_through")) {
    const PositionGrid grid(8, 8.0);
    const ModeGrid modes = build_modes(p.kappa, p.lambda, 1, 3);
    const Hamiltonian H(p, make_frame_rho(0.0, 1.0), grid, modes, 3,
                        Variant::Gross);
    double worst = 0.0;
    for (int j = 0; j < static_cast<int>(modes.size()); ++j)
      worst = std::max(worst, pull_through_residual(H, j));
    run.add(run.report("identity.pull_through", worst, kIdentityTol,
                       "max over 3 modes, n = 8, L = 8, N_max = 3, tau = 0"));
  }
  if (run.want("identity.telescoping")) {
    if (p.m != 1.0) {
      run.add(run.skip("identity.telescoping", "telescoping identity needs m = 1"));
    } else {
      TelescopeSetup t;
      t.params = p;
      t.modes = snap_modes(build_modes(0.1, 0.6, 1, 2), t.L, 1.0).modes;
      LanczosOptions lo = s.solve.lanczos;
      const TelescopeResult r = soft_decomposition_residual(t, lo);
      if (!r.lattice_ok) {
        run.add(run.skip("identity.telescoping", r.note));
      } else {
        run.add(run.report(
            "identity.telescoping", std::max(r.res1, r.res2), kIdentityTol,
            "res1 = " + fmt(r.res1) + ", res2 = " + fmt(r.res2) +
                ", n = 8, L = 8 pi, eps = 3/4, fine grid " +
                std::to_string(r.n_fine)));
        run.out.diagnostics.push_back({"telescoping_res1", r.res1});
        run.out.diagnostics.push_back({"telescoping_res2", r.res2});
      }
    }
  }

  // Overlap chain.
  if (run.want("overlap.g_ir")) {
    const CouplingWindow w = e_ir(Z, s.tau);
    run.out.diagnostics.push_back({"e_ir", w.e_ir});
    double gir = std::numeric_limits<double>::quiet_NaN();
    std::string gir_error;
    try {
      gir = g_ir(p.e, Z, s.tau);
      run.out.diagnostics.push_back({"g_ir", gir});
    } catch (const DomainError& ex) {
      gir_error = ex.what();
    }
    if (!gir_error.empty())
      run.add(run.skip("overlap.g_ir", gir_error));
    else if (w.empty || !(e < w.e_ir))
      run.add(run.skip("overlap.g_ir",
                       w.empty ? "G_IR window empty: " + w.note
                               : "|e| outside the G_IR window (e_ir = " +
                                     fmt(w.e_ir) + ")"));
    else if (!(gir > 0.0))
      run.add(run.skip("overlap.g_ir", "G_IR(e) <= 0"));
    else
      run.add(run.report("overlap.g_ir", gir, g.overlap.overlap_P,
                         "tau = " + fmt(s.tau)));
  }
  if (run.want("overlap.markov"))
    run.add(run.report("overlap.markov", 1.0 - g.photons.total,
                       g.overlap.vacuum_weight));
  if (run.want("overlap.q_bound")) {
    const RootReport a1 = a_ir1(Z, s.tau);
    double lim = std::min(euv, 1.0);
    if (a1.found) lim = std::min(lim, a1.value);
    if (!a1.found)
      run.add(run.skip("overlap.q_bound", "a_IR1 has no root: " + a1.note));
    else if (!(e < lim))
      run.add(run.skip("overlap.q_bound",
                       "|e| >= min(e_uv, a_IR1, 1) = " + fmt(lim)));
    else
      run.add(run.report("overlap.q_bound", g.overlap.overlap_Q,
                         q_bound(p.e, Z, s.tau), "tau = " + fmt(s.tau)));
  }

  // Suite order is the declared id order.
  const auto& ids = check_ids();
  std::stable_sort(run.out.reports.begin(), run.out.reports.end(),
                   [&](const BoundReport& a, const BoundReport& b) {
                     return std::find(ids.begin(), ids.end(), a.id) <
                            std::find(ids.begin(), ids.end(), b.id);
                   });
  return std::move(run.out);
}

}  // namespace nlab
