#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

#include "vpanel/boundary_method.hpp"
#include "vpanel/dynamics.hpp"
#include "vpanel/errors.hpp"
#include "vpanel/kernels.hpp"

namespace vpanel::cli {

namespace {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("VORTEX_PANEL_LOG");
    if (!env) return 0;
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
  }();
  return level;
}

// output sink: file when --out given, stdout otherwise
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw SchemaError("cannot open output file '" + path + "'");
      out = &file;
    }
  }
  std::ostream& stream() { return *out; }
};

std::string diagnostics_path(const std::string& out_path) {
  const auto dot = out_path.rfind('.');
  const auto slash = out_path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out_path + ".diagnostics.json";
  }
  return out_path.substr(0, dot) + ".diagnostics.json";
}

}  // namespace

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[vortex-panel] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[vortex-panel] " << msg << "\n";
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

namespace {

void validate_config_vorticity(const VorticityConfig& cfg) {
  try {
    validate_exterior(cfg);
  } catch (const DomainError& e) {
    throw SchemaError(std::string("invalid vorticity: ") + e.what());
  }
}

}  // namespace

int cmd_converge(const GlobalOptions& opt) {
  const RunConfig rc = load_run_config(opt.config_path, "converge");
  const ConvergeConfig& cc = *rc.converge;
  validate_config_vorticity(rc.vorticity);

  const std::vector<Point2> eval_points =
      circle_points(cc.eval_circle.radius, cc.eval_circle.points);
  log_info("converge: " + std::to_string(cc.n_list.size()) + " mesh sizes, " +
           std::to_string(eval_points.size()) + " evaluation points");

  const SweepResult sweep =
      convergence_sweep(rc.vorticity, cc.n_list, eval_points, opt.workers);

  Sink sink(opt.out_path);
  auto& os = sink.stream();
  os << "n,sup_error,error_ratio_vs_prev,runtime_seconds\n";
  for (size_t i = 0; i < sweep.records.size(); ++i) {
    const auto& rec = sweep.records[i];
    os << rec.n << "," << format_number(rec.sup_error) << ",";
    if (i > 0 && rec.sup_error > 0.0) {
      os << format_number(sweep.records[i - 1].sup_error / rec.sup_error);
    }
    os << "," << format_number(rec.runtime_seconds) << "\n";
  }
  if (sweep.slope_defined) {
    os << "# fitted_slope = " << format_number(sweep.slope) << "\n";
  } else {
    os << "# fitted_slope =\n";
    os << "# warning = degenerate-fit\n";
  }

  if (cc.slope_band) {
    if (!sweep.slope_defined) return kExitCheckFailure;
    const auto [lo, hi] = *cc.slope_band;
    if (sweep.slope < lo || sweep.slope > hi) {
      log_info("converge: slope " + format_number(sweep.slope) + " outside [" +
               format_number(lo) + ", " + format_number(hi) + "]");
      return kExitCheckFailure;
    }
  }
  return kExitOk;
}

namespace {

struct IdentityResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

json to_json(const IdentityResult& r) {
  return json{{"identity", r.name},
              {"residual", r.residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

}  // namespace

int cmd_identities(const GlobalOptions& opt) {
  const RunConfig rc = load_run_config(opt.config_path, "identities");
  const IdentitiesConfig& ic = *rc.identities;

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<IdentityResult> results;
  auto add = [&](const std::string& name, double residual, double tol) {
    const double scaled = tol * opt.tolerance_scale;
    results.push_back({name, residual, scaled, residual <= scaled});
  };

  for (int n : ic.sizes) {
    const UniformBoundaryMesh mesh = build_uniform_mesh(n);
    const auto [rows, cols] = cancellation_sums(mesh);
    double cancel = 0.0;
    for (int i = 0; i < n; ++i) {
      cancel = std::max({cancel, std::abs(rows[i]), std::abs(cols[i])});
    }
    add("cotangent-cancellation n=" + std::to_string(n), cancel, n * 1e-12);

    const CotangentSystem sys = assemble_system(mesh);
    double iso_gap = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> z(n);
      for (double& v : z) v = unit(rng);
      const auto [lhs, rhs] = isometry_gap(sys, z);
      iso_gap = std::max(iso_gap, std::abs(lhs - rhs) / (1.0 + lhs));
    }
    add("l2-isometry n=" + std::to_string(n), iso_gap, 1e-9);

    double est_violation = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> v(n - 1);
      for (double& x : v) x = unit(rng);
      const double gamma = 2.0 * unit(rng);
      const BoundaryDensities d = solve_constrained(sys, v, gamma);
      const double bound = norm_linf(v) + std::abs(gamma) +
                           std::sqrt(static_cast<double>(n)) * std::abs(mean(v));
      est_violation = std::max(est_violation, norm_l2(d.gamma_n) - bound);
    }
    add("density-l2-bound n=" + std::to_string(n), std::max(est_violation, 0.0), 1e-12);
  }

  {
    const int m = 256;
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> coef(2 * 9 + 1);
      for (double& c : coef) c = unit(rng);
      PeriodicSamples g;
      g.grid_kind = GridKind::node;
      g.values.resize(m);
      for (int j = 0; j < m; ++j) {
        const double t = kTwoPi * j / m;
        double v = coef[0];
        for (int k = 1; k <= 9; ++k) {
          v += coef[2 * k - 1] * std::cos(k * t) + coef[2 * k] * std::sin(k * t);
        }
        g.values[j] = v;
      }
      const PeriodicSamples hg = hilbert_spectral(g);
      const PeriodicSamples hhg = hilbert_spectral(hg);
      const double gm = mean(g.values);
      double sup = 0.0, amp = 0.0;
      for (int j = 0; j < m; ++j) {
        sup = std::max(sup, std::abs(hhg.values[j] + 4.0 * kPi * kPi * (g.values[j] - gm)));
        amp = std::max(amp, std::abs(g.values[j]));
      }
      worst = std::max(worst, sup / amp);
    }
    add("hilbert-involution", worst, 1e-8);
  }

  {
    const auto [lhs1, rhs1] = check_ball_circulation({2.0, 0.0}, 512);
    add("ball-circulation x=(2,0)", norm(lhs1 - rhs1), 1e-10);
    const auto [lhs2, rhs2] = check_vortex_identity({2.0, 0.0}, 0.0, 1024);
    add("vortex-identity x=(2,0) phi=0", norm(lhs2 - rhs2), 1e-6);
  }

  {
    // benchmark solve: interpolation rows and mean constraint
    VorticityConfig cfg;
    cfg.vortices.push_back({{2.0, 0.0}, kTwoPi});
    cfg.gamma = 0.5;
    const BoundaryProblem p = solve_boundary(cfg, 64);
    add("interpolation-rows n=64", p.interp_residual, 1e-9);
    add("mean-constraint n=64", p.mean_residual, 1e-12);
  }

  bool all_pass = true;
  json report;
  report["schema_version"] = kSchemaVersion;
  report["seed"] = opt.seed;
  report["tolerance_scale"] = opt.tolerance_scale;
  report["identities"] = json::array();
  for (const auto& r : results) {
    report["identities"].push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  report["all_pass"] = all_pass;

  Sink sink(opt.out_path);
  sink.stream() << report.dump(2) << "\n";
  return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_simulate(const GlobalOptions& opt) {
  const RunConfig rc = load_run_config(opt.config_path, "simulate");
  const SimulateConfig& sc = *rc.simulate;
  if (!rc.vorticity.blobs.empty()) {
    throw SchemaError("simulate moves point vortices only; remove 'vorticity.blobs'");
  }

  FreeVortexState initial;
  for (const auto& v : rc.vorticity.vortices) {
    initial.positions.push_back(v.position);
    initial.strengths.push_back(v.strength);
  }
  // validation before any stepping: exit 2 on a vortex inside the disk
  validate_config_vorticity(rc.vorticity);

  SimulationConfig sim;
  sim.n_boundary = sc.n_boundary;
  sim.gamma = rc.vorticity.gamma;
  sim.dt = sc.dt;
  sim.steps = sc.steps;
  sim.blob_delta = sc.blob_delta;

  log_info("simulate: " + std::to_string(initial.positions.size()) + " vortices, " +
           std::to_string(sim.steps) + " steps, n_boundary=" + std::to_string(sim.n_boundary));
  const Trajectory traj = simulate(initial, sim);

  Sink sink(opt.out_path);
  auto& os = sink.stream();
  os << "step,time";
  for (size_t k = 0; k < initial.positions.size(); ++k) {
    os << ",y" << k + 1 << "_1,y" << k + 1 << "_2";
  }
  os << "\n";
  for (size_t s = 0; s < traj.states.size(); ++s) {
    if (s % sc.record_every != 0 && s + 1 != traj.states.size()) continue;
    const auto& st = traj.states[s];
    os << s << "," << format_number(st.time);
    for (const Point2& p : st.positions) {
      os << "," << format_number(p.x1) << "," << format_number(p.x2);
    }
    os << "\n";
  }

  double max_mean_resid = 0.0;
  double min_bd = std::numeric_limits<double>::infinity();
  for (const auto& d : traj.diagnostics) {
    max_mean_resid = std::max(max_mean_resid, d.mean_residual);
    min_bd = std::min(min_bd, d.min_boundary_distance);
  }
  json diag;
  diag["schema_version"] = kSchemaVersion;
  diag["steps_completed"] = static_cast<long>(traj.states.size()) - 1;
  diag["total_free_circulation"] =
      traj.diagnostics.empty() ? 0.0 : traj.diagnostics.back().total_strength;
  diag["max_mean_gamma_residual"] = max_mean_resid;
  diag["min_boundary_distance"] = std::isfinite(min_bd) ? json(min_bd) : json();
  diag["warnings"] = traj.warnings;
  if (traj.failure_reason) {
    diag["failure"] = {{"reason", *traj.failure_reason}, {"step", traj.failed_at_step}};
  } else {
    diag["failure"] = nullptr;
  }

  const std::string dpath =
      opt.out_path.empty() ? std::string() : diagnostics_path(opt.out_path);
  if (dpath.empty()) {
    std::cout << diag.dump(2) << "\n";
  } else {
    std::ofstream df(dpath);
    if (!df) throw SchemaError("cannot open diagnostics file '" + dpath + "'");
    df << diag.dump(2) << "\n";
  }

  return traj.failure_reason ? kExitRuntimeAbort : kExitOk;
}

int cmd_field(const GlobalOptions& opt) {
  const RunConfig rc = load_run_config(opt.config_path, "field");
  const FieldConfig& fc = *rc.field;
  validate_config_vorticity(rc.vorticity);

  const bool needs_approx =
      std::any_of(fc.fields.begin(), fc.fields.end(),
                  [](const std::string& f) { return f == "u_app" || f == "diff_app_R"; });
  std::unique_ptr<BoundaryProblem> problem;
  if (needs_approx) {
    problem = std::make_unique<BoundaryProblem>(solve_boundary(rc.vorticity, fc.n_boundary));
  }

  std::vector<Point2> points;
  if (fc.grid) {
    const GridSpec& g = *fc.grid;
    for (int iy = 0; iy < g.ny; ++iy) {
      for (int ix = 0; ix < g.nx; ++ix) {
        const double x = g.nx == 1 ? g.x_min : g.x_min + (g.x_max - g.x_min) * ix / (g.nx - 1);
        const double y = g.ny == 1 ? g.y_min : g.y_min + (g.y_max - g.y_min) * iy / (g.ny - 1);
        points.push_back({x, y});
      }
    }
  } else {
    points = circle_points(fc.circle->radius, fc.circle->points);
  }

  Sink sink(opt.out_path);
  auto& os = sink.stream();
  os << "x1,x2,masked";
  for (const auto& f : fc.fields) os << "," << f << "_1," << f << "_2";
  os << "\n";

  int masked_count = 0;
  for (const Point2& p : points) {
    const bool masked = norm(p) <= 1.0;
    if (masked) ++masked_count;
    os << format_number(p.x1) << "," << format_number(p.x2) << "," << (masked ? 1 : 0);
    for (const auto& f : fc.fields) {
      Vec2 v{0.0, 0.0};
      if (!masked) {
        if (f == "u_P") {
          v = velocity_plane(rc.vorticity, p);
        } else if (f == "u_R") {
          v = velocity_remainder_exact(rc.vorticity, p);
        } else if (f == "u_app") {
          v = velocity_approx(*problem, p);
        } else {
          v = velocity_approx(*problem, p) - velocity_remainder_exact(rc.vorticity, p);
        }
      }
      os << "," << format_number(v.u1) << "," << format_number(v.u2);
    }
    os << "\n";
  }
  if (masked_count == static_cast<int>(points.size())) {
    os << "# warning = all-points-masked\n";
    log_info("field: every requested point lies inside the disk");
  }
  return kExitOk;
}

int cmd_hilbert(const GlobalOptions& opt) {
  const RunConfig rc = load_run_config(opt.config_path, "hilbert");
  const HilbertConfig& hc = *rc.hilbert;

  std::vector<double> values = hc.values;
  if (!hc.input.empty()) {
    std::ifstream in(hc.input);
    if (!in) throw SchemaError("cannot open samples file '" + hc.input + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      try {
        values.push_back(std::stod(line));
      } catch (const std::exception&) {
        throw SchemaError("samples file has a non-numeric line: '" + line + "'");
      }
    }
  }
  if (static_cast<int>(values.size()) < 4) {
    throw SchemaError("hilbert needs at least 4 samples");
  }

  PeriodicSamples in_samples;
  in_samples.values = values;
  in_samples.grid_kind = hc.grid_kind == "midpoint" ? GridKind::midpoint : GridKind::node;

  PeriodicSamples out_samples;
  if (hc.mode == "spectral") {
    out_samples = hilbert_spectral(in_samples);
  } else {
    if (in_samples.grid_kind != GridKind::node) {
      throw SchemaError("'hilbert.mode' = 'pv' requires node-grid input");
    }
    out_samples = hilbert_pv(in_samples);
  }

  Sink sink(opt.out_path);
  auto& os = sink.stream();
  os << "theta,transform\n";
  for (int j = 0; j < out_samples.size(); ++j) {
    os << format_number(out_samples.angle(j)) << "," << format_number(out_samples.values[j])
       << "\n";
  }
  return kExitOk;
}

}  // namespace vpanel::cli
