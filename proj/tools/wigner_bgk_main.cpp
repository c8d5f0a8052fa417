// wigner-bgk: stationary quartic-well Wigner equilibria and the first-order
// Wigner-Poisson system. Subcommands evaluate equilibria on grids, verify
// them against the stationary equation and the admissibility conditions,
// scan for critical quantum strengths, tabulate Wigner-Poisson curves, and
// drive the spectral stationarity check.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or validation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "wigner/admissibility.hpp"
#include "wigner/evolution.hpp"
#include "wigner/presets.hpp"
#include "wigner/report_io.hpp"
#include "wigner/residual.hpp"
#include "wigner/wigner_poisson.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wigner;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string preset;
  std::optional<int> mu;
  std::optional<double> gamma, a0, b0, c0;
  std::string out;
  std::string format = "csv";
  std::optional<double> tol;
};

void add_io_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tol", opts.tol, "tolerance override for this subcommand");
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--preset", opts.preset, "named parameter set (see --list-presets)");
  cmd->add_option("--mu", opts.mu, "well orientation, +1 or -1")
      ->check(CLI::IsMember({-1, 1}));
  cmd->add_option("--gamma", opts.gamma, "dimensionless quantum strength");
  cmd->add_option("--a0", opts.a0, "energy-linear amplitude constant");
  cmd->add_option("--b0", opts.b0, "energy-constant amplitude constant");
  cmd->add_option("--c0", opts.c0, "exponent integration constant");
  add_io_opts(cmd, opts);
}

QuarticEquilibrium resolve_equilibrium(const CommonOpts& opts) {
  int mu = 0;
  double gamma = 0, a0 = 0, b0 = 0, c0 = 0;
  bool have = false;
  if (!opts.preset.empty()) {
    const auto p = find_preset(opts.preset);
    if (!p) throw ValidationError("unknown preset: " + opts.preset);
    mu = p->mu;
    gamma = p->gamma;
    a0 = p->a0;
    b0 = p->b0;
    c0 = p->c0;
    have = true;
  }
  if (opts.mu) mu = *opts.mu;
  if (opts.gamma) gamma = *opts.gamma;
  if (opts.a0) a0 = *opts.a0;
  if (opts.b0) b0 = *opts.b0;
  if (opts.c0) c0 = *opts.c0;
  if (!have && !(opts.mu && opts.gamma && opts.b0 && opts.c0))
    throw ValidationError("give --preset or all of --mu, --gamma, --b0, --c0 (--a0 defaults to 0)");
  return QuarticEquilibrium({mu, gamma}, {a0, b0, c0});
}

ordered_json params_json(const QuarticEquilibrium& eq) {
  return ordered_json{{"mu", eq.params().mu},
                      {"gamma", eq.params().gamma},
                      {"a0", eq.consts().a0},
                      {"b0", eq.consts().b0},
                      {"c0", eq.consts().c0}};
}

// Writes to the chosen sink; keeps stdout usable when no path is given.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + path);
  out << payload;
}

int cmd_eval(const CommonOpts& opts, int nq, int np, std::optional<double> qmax,
             std::optional<double> pmax) {
  const QuarticEquilibrium eq = resolve_equilibrium(opts);
  if (nq < 1 || np < 1) throw ValidationError("grid must have at least one point per axis");
  const double q_half =
      qmax ? *qmax : (eq.q_max() ? 0.98 * *eq.q_max() : integration_window(eq).q_half);
  const double p_half = pmax ? *pmax : p_half_width(eq, 0.0);

  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(nq) * np);
  for (int i = 0; i < nq; ++i) {
    const double q = nq == 1 ? q_half : -q_half + 2.0 * q_half * i / (nq - 1.0);
    for (int j = 0; j < np; ++j) {
      const double p = np == 1 ? p_half : -p_half + 2.0 * p_half * j / (np - 1.0);
      rows.push_back({q, p, eval_wigner({q, p}, eq)});
    }
  }
  std::ostringstream os;
  if (opts.format == "csv") {
    write_csv(os, {"q", "p", "F"}, rows);
  } else {
    ordered_json j{{"parameters", params_json(eq)}, {"columns", {"q", "p", "F"}}};
    j["rows"] = rows;
    os << j.dump(2) << '\n';
  }
  emit(opts.out, os.str());
  return kExitPass;
}

int cmd_verify(const CommonOpts& opts, const std::string& dump_residuals) {
  const QuarticEquilibrium eq = resolve_equilibrium(opts);
  const double tol = opts.tol.value_or(1e-7);

  ordered_json report{{"parameters", params_json(eq)}, {"residual_tolerance", tol}};
  std::vector<std::string> warnings;
  if (eq.q_max()) {
    warnings.push_back(
        "bounded support: F grows like (q_max-|q|)^(-3/4) toward the edge; "
        "squared-integral conditions cannot converge");
    if (eq.boundary_singular())
      warnings.push_back("c0 < 24 gamma: coefficient functions diverge at the support edge");
  }

  double ode_max = 0.0;
  const double q_half = eq.q_max() ? 0.9 * *eq.q_max() : 4.0;
  for (int i = 0; i < 200; ++i) {
    const double q = -q_half + 2.0 * q_half * i / 199.0;
    ode_max = std::max(ode_max, ode_residual(q, eq).max_abs());
  }
  const ResidualReport qp = residual_qp(eq);
  const ResidualReport hq = residual_Hq(eq);
  report["ode_residual_max"] = ode_max;
  report["residual_qp"] = ordered_json::parse(to_json_string(qp));
  report["residual_Hq"] = ordered_json::parse(to_json_string(hq));
  if (!dump_residuals.empty()) {
    std::ostringstream os;
    std::vector<std::vector<double>> rows;
    for (const auto& s : residual_samples_qp(eq)) rows.push_back({s.q, s.p, s.value});
    write_csv(os, {"q", "p", "residual"}, rows);
    emit(dump_residuals, os.str());
  }

  bool pass = ode_max <= tol && qp.max_abs_residual <= tol && hq.max_abs_residual <= tol;
  try {
    const AdmissibilityReport adm = check_admissibility(eq);
    report["admissibility"] = ordered_json::parse(to_json_string(adm));
    pass = pass && adm.pass();
  } catch (const Error& e) {
    report["admissibility_error"] = e.what();
    pass = false;
  }
  report["warnings"] = warnings;
  report["pass"] = pass;
  emit(opts.out, report.dump(2) + "\n");
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_scan(const CommonOpts& opts, const std::string& predicate, int a0_sign, double lo,
             double hi) {
  const double tol = opts.tol.value_or(1e-4);
  ScanPredicate pred;
  if (predicate == "two-hump")
    pred = ScanPredicate::kTwoHumpOnset;
  else if (predicate == "negativity")
    pred = ScanPredicate::kNegativityOnset;
  else if (predicate == "density")
    pred = ScanPredicate::kDensityNegative;
  else
    throw ValidationError("predicate must be two-hump, negativity or density");

  const double gamma_star = critical_gamma(pred, a0_sign, lo, hi, tol);
  ordered_json record{
      {"predicate", predicate},
      {"family", {{"mu", -1}, {"c0", 1.0}, {"b0_over_a0", -2.5}, {"a0_sign", a0_sign}}},
      {"bracket", {lo, hi}},
      {"tolerance", tol},
      {"gamma_critical", gamma_star},
  };
  if (opts.format == "csv") {
    std::ostringstream os;
    write_csv(os, {"gamma_critical", "bracket_lo", "bracket_hi", "tolerance"},
              {{gamma_star, lo, hi, tol}});
    emit(opts.out, os.str());
  } else {
    emit(opts.out, record.dump(2) + "\n");
  }
  return kExitPass;
}

ordered_json wp_units_json(const WPUnits& u) {
  return ordered_json{{"e", u.e},           {"m", u.m},
                      {"hbar", u.hbar},     {"n0", u.n0},
                      {"omega_p", u.omega_p}, {"epsilon0", u.epsilon0}};
}

int cmd_wp(const CommonOpts& opts, std::vector<double> c0_list, double b0, int points,
           double lo_frac, double hi_frac, bool profile, double phi0, double dphi0,
           double x_max, int steps, bool phi0_given) {
  if (c0_list.empty()) c0_list = {1.0, 2.0, 3.0};
  const WPUnits units{};  // natural units

  if (profile) {
    if (c0_list.size() != 1)
      throw ValidationError("--profile integrates a single equilibrium; give one --c0");
    const WPEquilibrium eq(units, c0_list.front(), b0);
    const double start = phi0_given ? phi0 : wp_phi(units.n0, eq);
    const ProfileResult res = wp_phi_profile(x_max, steps, eq, {start, dphi0});
    std::ostringstream os;
    if (opts.format == "csv") {
      std::vector<std::vector<double>> rows;
      for (const auto& pt : res.points) rows.push_back({pt.x, pt.phi, pt.n});
      write_csv(os, {"x", "phi", "n"}, rows);
    } else {
      ordered_json j{{"units", wp_units_json(units)},
                     {"c0", c0_list.front()},
                     {"b0", b0},
                     {"boundary", {{"phi0", start}, {"dphi0", dphi0}}},
                     {"exited", res.exited}};
      if (res.exited) j["exit_x"] = res.exit_x;
      ordered_json rows = ordered_json::array();
      for (const auto& pt : res.points) rows.push_back({pt.x, pt.phi, pt.n});
      j["columns"] = {"x", "phi", "n"};
      j["rows"] = rows;
      os << j.dump(2) << '\n';
    }
    emit(opts.out, os.str());
    return kExitPass;
  }

  ordered_json meta{{"units", wp_units_json(units)}, {"b0", b0}};
  ordered_json curves = ordered_json::array();
  std::ostringstream csv;
  for (double c0 : c0_list) {
    const WPEquilibrium eq(units, c0, b0);
    const WPTable table = tabulate(eq, points, lo_frac, hi_frac);
    if (opts.format == "csv") {
      csv << "# c0 = " << format_full(c0) << ", n_cut = " << format_full(eq.n_cut()) << "\n";
      std::vector<std::vector<double>> rows;
      for (std::size_t i = 0; i < table.n.size(); ++i)
        rows.push_back({table.n[i], table.coeff_c[i], table.coeff_b[i], table.phi[i]});
      write_csv(csv, {"n", "C", "B", "phi"}, rows);
    } else {
      curves.push_back({{"c0", c0},
                        {"n_cut", eq.n_cut()},
                        {"n", table.n},
                        {"C", table.coeff_c},
                        {"B", table.coeff_b},
                        {"phi", table.phi}});
    }
  }
  if (opts.format == "csv") {
    emit(opts.out, csv.str());
    // the authoritative metadata record rides alongside the CSV
    const std::string meta_text = meta.dump(2) + "\n";
    if (!opts.out.empty()) emit(opts.out + ".meta.json", meta_text);
  } else {
    meta["curves"] = curves;
    emit(opts.out, meta.dump(2) + "\n");
  }
  return kExitPass;
}

int cmd_evolve(const CommonOpts& opts, double t_final, int n, std::optional<double> dt,
               const std::string& snapshot, const std::string& snapshot_format,
               double perturb_b) {
  const QuarticEquilibrium eq = resolve_equilibrium(opts);
  if (eq.params().mu != -1)
    throw ValidationError(
        "evolve supports only mu = -1 equilibria; the truncated-support mu = +1 "
        "solution is verified through the residual checks instead");
  const double tol = opts.tol.value_or(1e-3);
  EvolutionGrid grid = auto_evolution_grid(eq, t_final, n, n);
  if (dt) {
    grid.dt = *dt;
    const long steps = std::lround(t_final / *dt);
    if (steps > 0) grid.dt = t_final / static_cast<double>(steps);
  }

  Field2D f0 =
      perturb_b == 1.0
          ? sample(eq, grid)
          : sample(
                [&](double q, double p) {
                  if (!eq.in_support(q)) return 0.0;
                  const double h = energy({q, p}, eq.params());
                  return (coeff_A(q, eq) * h + perturb_b * coeff_B(q, eq)) *
                         std::exp(coeff_C(q, eq) * h);
                },
                grid);
  double mass_drift = 0.0;
  EvolveOptions evo;
  evo.max_mass_drift = &mass_drift;
  const Field2D f_t = evolve(f0, grid, eq.params(), evo);
  const double deviation = relative_l2_diff(f_t, f0);

  if (!snapshot.empty()) {
    std::ostringstream os;
    if (snapshot_format == "csv") {
      write_field_csv(os, f_t);
    } else {
      write_field_binary(os, f_t, grid.dt, grid.t_final, params_json(eq).dump());
    }
    emit(snapshot, os.str());
  }

  const bool pass = deviation <= tol;
  ordered_json record{
      {"parameters", params_json(eq)},
      {"grid",
       {{"nq", grid.nq},
        {"np", grid.np},
        {"half_width_q", grid.half_width_q},
        {"half_width_p", grid.half_width_p},
        {"dt", grid.dt},
        {"t_final", grid.t_final}}},
      {"perturb_b", perturb_b},
      {"deviation", deviation},
      {"max_mass_drift", mass_drift},
      {"tolerance", tol},
      {"pass", pass},
  };
  emit(opts.out, record.dump(2) + "\n");
  return pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Stationary Wigner-function equilibria of the quartic anharmonic well and the "
      "first-order Wigner-Poisson system"};
  app.require_subcommand(1);
  bool list_presets = false;
  app.add_flag("--list-presets", list_presets, "print the preset table and exit");

  CommonOpts eval_opts, verify_opts, scan_opts, wp_opts, evolve_opts;

  auto* eval = app.add_subcommand("eval", "evaluate an equilibrium on a phase-space grid");
  add_common(eval, eval_opts);
  int eval_nq = 101, eval_np = 101;
  std::optional<double> eval_qmax, eval_pmax;
  eval->add_option("--nq", eval_nq, "grid points in q");
  eval->add_option("--np", eval_np, "grid points in p");
  eval->add_option("--qmax", eval_qmax, "q half-width (default: support or decay window)");
  eval->add_option("--pmax", eval_pmax, "p half-width (default: 8 Gaussian widths)");

  auto* verify = app.add_subcommand(
      "verify", "check the stationary equation and the admissibility conditions");
  add_common(verify, verify_opts);
  std::string verify_dump;
  verify->add_option("--dump-residuals", verify_dump,
                     "also write the (q, p, residual) grid to this CSV path");

  auto* scan = app.add_subcommand("scan", "bisect a critical quantum strength");
  add_common(scan, scan_opts);
  std::string scan_predicate = "two-hump";
  int scan_sign = +1;
  double scan_lo = 0.1, scan_hi = 1.0;
  scan->add_option("--predicate", scan_predicate, "two-hump | negativity | density");
  scan->add_option("--a0-sign", scan_sign, "branch of the reference family (+1 or -1)")
      ->check(CLI::IsMember({-1, 1}));
  scan->add_option("--lo", scan_lo, "bracket lower end")->required();
  scan->add_option("--hi", scan_hi, "bracket upper end")->required();

  auto* wp = app.add_subcommand("wp", "tabulate Wigner-Poisson equilibrium curves");
  add_io_opts(wp, wp_opts);
  std::vector<double> wp_c0;
  double wp_b0 = 1.0, wp_lo_frac = 1e-4, wp_hi_frac = 0.98;
  int wp_points = 400;
  bool wp_profile = false;
  double wp_phi0 = 0.0, wp_dphi0 = 0.0, wp_xmax = 20.0;
  int wp_steps = 2000;
  wp->add_option("--c0", wp_c0, "exponent constants (default: 1 2 3)");
  wp->add_option("--b0", wp_b0, "amplitude constant (default 1)");
  wp->add_option("--points", wp_points, "table rows per curve");
  wp->add_option("--n-lo-frac", wp_lo_frac, "lowest density as a fraction of the cutoff");
  wp->add_option("--n-hi-frac", wp_hi_frac, "highest density as a fraction of the cutoff");
  wp->add_flag("--profile", wp_profile, "integrate the spatial potential profile instead");
  auto* phi0_opt = wp->add_option("--phi0", wp_phi0, "boundary potential at x = 0");
  wp->add_option("--dphi0", wp_dphi0, "boundary slope at x = 0");
  wp->add_option("--x-max", wp_xmax, "profile length");
  wp->add_option("--steps", wp_steps, "profile integration steps");

  auto* evolve_cmd = app.add_subcommand(
      "evolve", "spectral stationarity check for a mu = -1 equilibrium");
  add_common(evolve_cmd, evolve_opts);
  double evolve_T = 10.0, evolve_perturb = 1.0;
  int evolve_n = 256;
  std::optional<double> evolve_dt;
  std::string snapshot, snapshot_format = "csv";
  evolve_cmd->add_option("--T", evolve_T, "final time");
  evolve_cmd->add_option("--n", evolve_n, "grid points per axis (power of two)");
  evolve_cmd->add_option("--dt", evolve_dt, "time step (default: stability-bounded)");
  evolve_cmd->add_option("--snapshot", snapshot, "write the final field to this path");
  evolve_cmd->add_option("--snapshot-format", snapshot_format, "csv | bin")
      ->check(CLI::IsMember({"csv", "bin"}));
  evolve_cmd->add_option("--perturb-b", evolve_perturb,
                         "scale the B coefficient function of the initial data");

  CLI11_PARSE(app, argc, argv);

  if (list_presets) {
    for (const auto& p : presets())
      std::cout << p.name << ": mu=" << p.mu << " gamma=" << p.gamma << " a0=" << p.a0
                << " b0=" << p.b0 << " c0=" << p.c0 << "\n";
    return kExitPass;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_opts, eval_nq, eval_np, eval_qmax, eval_pmax);
    if (verify->parsed()) return cmd_verify(verify_opts, verify_dump);
    if (scan->parsed())
      return cmd_scan(scan_opts, scan_predicate, scan_sign, scan_lo, scan_hi);
    if (wp->parsed())
      return cmd_wp(wp_opts, wp_c0, wp_b0, wp_points, wp_lo_frac, wp_hi_frac, wp_profile,
                    wp_phi0, wp_dphi0, wp_xmax, wp_steps, phi0_opt->count() > 0);
    if (evolve_cmd->parsed())
      return cmd_evolve(evolve_opts, evolve_T, evolve_n, evolve_dt, snapshot,
                        snapshot_format, evolve_perturb);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand given\n";
  return kExitUsage;
}
