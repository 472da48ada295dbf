/*
   Copyright 2026 the tfsde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tfsde/kernel.hpp"
#include "tfsde/moments.hpp"
#include "tfsde/output.hpp"
#include "tfsde/simulator.hpp"
#include "tfsde/verification.hpp"

namespace {

using namespace tfsde;

struct CommonOut {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOut& com) {
  cmd->add_option("--format", com.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", com.out_path,
                  "output file (default: stdout; relative paths resolve "
                  "against TFSDE_OUT_DIR)");
}

std::string resolve_out(const std::string& path) {
  std::string dir = default_output_dir();
  if (dir.empty() || path.empty() || path.front() == '/') return path;
  return dir + "/" + path;
}

void emit(const OutputRecord& rec, const CommonOut& com) {
  std::string text = com.format == "json" ? to_json(rec) : to_csv(rec);
  if (com.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(resolve_out(com.out_path));
  if (!f) throw std::runtime_error("cannot open " + com.out_path);
  f << text;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) v.push_back(std::stod(tok));
  return v;
}

InitialMeasure build_measure(double lebesgue,
                             const std::vector<std::string>& atoms,
                             const std::vector<std::string>& pieces) {
  InitialMeasure m = InitialMeasure::lebesgue(lebesgue);
  for (const auto& a : atoms) {
    double loc, mass;
    char c;
    std::istringstream in(a);
    if (!(in >> loc >> c >> mass) || c != ':')
      throw std::domain_error("atom spec must be loc:mass");
    m.atoms.push_back({loc, mass});
  }
  // density pieces lo:hi:value; adjacent pieces may touch
  std::vector<std::array<double, 3>> parsed;
  for (const auto& p : pieces) {
    double lo, hi, val;
    char c1, c2;
    std::istringstream in(p);
    if (!(in >> lo >> c1 >> hi >> c2 >> val) || c1 != ':' || c2 != ':')
      throw std::domain_error("density spec must be lo:hi:value");
    parsed.push_back({lo, hi, val});
  }
  std::sort(parsed.begin(), parsed.end());
  for (const auto& [lo, hi, val] : parsed) {
    if (!m.density_breakpoints.empty() &&
        lo < m.density_breakpoints.back())
      throw std::domain_error("density pieces must not overlap");
    if (!m.density_breakpoints.empty() &&
        lo > m.density_breakpoints.back()) {
      m.density_values.push_back(0.0);
      m.density_breakpoints.push_back(lo);
    }
    if (m.density_breakpoints.empty()) m.density_breakpoints.push_back(lo);
    m.density_values.push_back(val);
    m.density_breakpoints.push_back(hi);
  }
  m.validate();
  return m;
}

int run_cli(int argc, char** argv) {
  CLI::App app{
      "tfsde: Green functions, moment-bound kernels and Monte Carlo "
      "simulation for stochastic time-fractional diffusion equations"};
  app.require_subcommand(1);

  // ---- ml ----------------------------------------------------------
  auto* ml = app.add_subcommand("ml", "two-parameter Mittag-Leffler values");
  double ml_alpha, ml_beta2;
  std::string ml_zgrid = "0:0:1";
  CommonOut ml_out;
  EvalPolicy pol;
  ml->add_option("--alpha", ml_alpha, "first parameter")->required();
  ml->add_option("--beta2", ml_beta2, "second parameter")->required();
  ml->add_option("--z", ml_zgrid, "argument grid start:stop:count");
  ml->add_option("--rel-tol", pol.rel_tol, "series relative tolerance");
  add_common(ml, ml_out);
  ml->callback([&] {
    OutputRecord rec;
    rec.command = "ml";
    rec.params = {{"alpha", std::to_string(ml_alpha)},
                  {"beta2", std::to_string(ml_beta2)},
                  {"z", ml_zgrid}};
    rec.columns = {"z", "value"};
    for (double z : parse_grid(ml_zgrid))
      rec.rows.push_back({z, mittag_leffler({ml_alpha, ml_beta2}, z, pol)});
    emit(rec, ml_out);
  });

  // ---- mainardi ----------------------------------------------------
  auto* ma = app.add_subcommand("mainardi",
                                "two-parameter Mainardi function values");
  double ma_lambda, ma_mu;
  std::string ma_zgrid = "0:5:11";
  int ma_deriv = 0;
  double ma_moment = std::nan("");
  double ma_cosine = std::nan("");
  CommonOut ma_out;
  ma->add_option("--lambda", ma_lambda, "order in [0,1)")->required();
  ma->add_option("--mu", ma_mu, "second parameter")->required();
  ma->add_option("--z", ma_zgrid, "argument grid start:stop:count");
  ma->add_option("--derivative", ma_deriv, "derivative order (default 0)");
  ma->add_option("--moment", ma_moment,
                 "emit the moment integral of order a instead");
  ma->add_option("--cosine", ma_cosine,
                 "emit the cosine-transform value at this frequency instead");
  add_common(ma, ma_out);
  ma->callback([&] {
    OutputRecord rec;
    rec.command = "mainardi";
    rec.params = {{"lambda", std::to_string(ma_lambda)},
                  {"mu", std::to_string(ma_mu)}};
    MainardiParams mp{ma_lambda, ma_mu};
    if (!std::isnan(ma_moment)) {
      rec.columns = {"a", "moment"};
      rec.rows.push_back({ma_moment, mainardi_moment(mp, ma_moment)});
    } else if (!std::isnan(ma_cosine)) {
      rec.columns = {"xi", "transform"};
      rec.rows.push_back({ma_cosine, mainardi_cosine_transform(mp, ma_cosine)});
    } else {
      rec.columns = {"z", "value"};
      for (double z : parse_grid(ma_zgrid))
        rec.rows.push_back({z, mainardi_derivative(mp, z, ma_deriv)});
    }
    emit(rec, ma_out);
  });

  // ---- green -------------------------------------------------------
  auto* gr = app.add_subcommand("green", "Green-function evaluations");
  double gr_beta, gr_t = 1.0;
  std::string gr_xgrid = "0:0:1";
  std::string gr_kind = "primary";
  bool gr_mass = false;
  double gr_moment = std::nan(""), gr_laplace = std::nan("");
  std::string gr_fourier;
  int gr_deriv = -1;
  bool gr_asym = false;
  CommonOut gr_out;
  gr->add_option("--beta", gr_beta, "fractional index in (0,2]")->required();
  gr->add_option("--t", gr_t, "time > 0");
  gr->add_option("--x", gr_xgrid, "space grid start:stop:count");
  gr->add_option("--kind", gr_kind, "primary or star")
      ->check(CLI::IsMember({"primary", "star"}));
  gr->add_flag("--mass", gr_mass, "emit the total mass");
  gr->add_option("--moment-a", gr_moment, "emit the |x|^a moment");
  gr->add_option("--fourier", gr_fourier,
                 "emit the Fourier transform on this xi grid");
  gr->add_option("--laplace-z", gr_laplace,
                 "emit the Laplace transform at this z");
  gr->add_option("--derivative", gr_deriv, "spatial derivative order");
  gr->add_flag("--asymptotics", gr_asym, "emit the tail envelope (A,a,b,c)");
  add_common(gr, gr_out);
  gr->callback([&] {
    FractionalIndex beta(gr_beta);
    GreenKind kind = gr_kind == "star" ? GreenKind::Star : GreenKind::Primary;
    OutputRecord rec;
    rec.command = "green";
    rec.params = {{"beta", std::to_string(gr_beta)},
                  {"kind", gr_kind},
                  {"t", std::to_string(gr_t)}};
    if (gr_mass) {
      rec.columns = {"t", "mass"};
      rec.rows.push_back({gr_t, green_total_mass(beta, kind, gr_t)});
    } else if (!std::isnan(gr_moment)) {
      rec.columns = {"a", "moment"};
      rec.rows.push_back({gr_moment, green_moment(beta, kind, gr_moment, gr_t)});
    } else if (!gr_fourier.empty()) {
      rec.columns = {"xi", "fourier"};
      for (double xi : parse_grid(gr_fourier))
        rec.rows.push_back({xi, green_fourier(beta, kind, gr_t, xi)});
    } else if (!std::isnan(gr_laplace)) {
      rec.columns = {"z", "laplace"};
      rec.rows.push_back({gr_laplace, green_laplace(beta, kind, gr_laplace)});
    } else if (gr_asym) {
      auto p = asymptotic_params(beta, kind);
      rec.columns = {"A", "a", "b", "c"};
      rec.rows.push_back({p.A, p.a, p.b, p.c});
    } else if (gr_deriv >= 0) {
      rec.columns = {"x", "derivative"};
      for (double x : parse_grid(gr_xgrid))
        rec.rows.push_back({x, green_derivative(beta, kind, gr_t, x, gr_deriv)});
    } else {
      rec.columns = {"x", "value"};
      for (double x : parse_grid(gr_xgrid))
        rec.rows.push_back({x, green(beta, kind, gr_t, x)});
    }
    emit(rec, gr_out);
  });

  // ---- kernel ------------------------------------------------------
  auto* ke = app.add_subcommand("kernel", "moment-bound kernel machinery");
  double ke_beta, ke_lambda = 1.0, ke_t = 1.0;
  std::string ke_xgrid = "0:0:1";
  bool ke_constants = false;
  int ke_series = 0;
  double ke_heat_nu = std::nan("");
  CommonOut ke_out;
  ke->add_option("--beta", ke_beta, "fractional index in (0,2)")->required();
  ke->add_option("--lambda", ke_lambda, "coupling scale");
  ke->add_option("--t", ke_t, "time > 0");
  ke->add_option("--x", ke_xgrid, "space grid start:stop:count");
  ke->add_flag("--constants", ke_constants,
               "emit hat_c, tilde_c, psi and the bound parameters");
  ke->add_option("--series", ke_series,
                 "emit numeric partial sums L_0..L_n of the kernel series");
  ke->add_option("--heat-exact", ke_heat_nu,
                 "emit the exact heat-case kernel for this nu");
  add_common(ke, ke_out);
  ke->callback([&] {
    FractionalIndex beta(ke_beta);
    OutputRecord rec;
    rec.command = "kernel";
    rec.params = {{"beta", std::to_string(ke_beta)},
                  {"lambda", std::to_string(ke_lambda)},
                  {"t", std::to_string(ke_t)}};
    if (ke_constants) {
      double sigma = ke_beta / 2.0 + 2.0 * (1.0 - beta.ceil_beta);
      double gamma = ke_lambda * ke_lambda * psi(beta, false) *
                     tilde_c(ke_beta) * std::tgamma(1.0 - sigma);
      rec.columns = {"hat_c", "tilde_c", "psi_upper", "sigma", "gamma",
                     "upsilon"};
      rec.rows.push_back({hat_c(ke_beta), tilde_c(ke_beta), psi(beta, false),
                          sigma, gamma,
                          std::pow(gamma, 1.0 / (1.0 - sigma))});
      if (beta.beta < 1.0) {
        rec.columns.push_back("psi_lower");
        rec.rows[0].push_back(psi(beta, true));
      }
    } else if (!std::isnan(ke_heat_nu)) {
      rec.columns = {"x", "kernel"};
      for (double x : parse_grid(ke_xgrid))
        rec.rows.push_back(
            {x, kernel_heat_exact(ke_heat_nu, ke_lambda, ke_t, x)});
    } else if (ke_series > 0) {
      KernelSeriesGrid grid;
      double sigma = ke_beta / 2.0 + 2.0 * (1.0 - beta.ceil_beta);
      grid.constants = {ke_lambda * ke_lambda * psi(beta, false),
                        tilde_c(ke_beta), sigma};
      grid.reference = [&](double t, double x) {
        return reference_kernel_dispatch(beta, t, x);
      };
      auto xs = parse_grid(ke_xgrid);
      double xmax = 0.0;
      for (double x : xs) xmax = std::max(xmax, std::fabs(x));
      grid.x_max_hint = xmax + 1.0;
      KernelSeriesEvaluator ev(
          [&](double t, double x) {
            return green(beta, GreenKind::Primary, t, x);
          },
          ke_lambda, ke_t, ke_series, grid);
      rec.columns = {"x", "partial_sum", "tail_estimate"};
      for (int n = 0; n <= ke_series; ++n)
        rec.columns.push_back("l" + std::to_string(n));
      for (double x : xs) {
        auto r = ev.evaluate(x);
        std::vector<double> row{x, r.partial_sums.back(), r.tail_estimate};
        for (double v : r.ln_values) row.push_back(v);
        rec.rows.push_back(std::move(row));
      }
    } else {
      bool slow = beta.beta < 1.0;
      rec.columns = {"x", "upper_mittag", "upper_exp"};
      if (slow) {
        rec.columns.push_back("lower_mittag");
        rec.columns.push_back("lower_exp");
      }
      for (double x : parse_grid(ke_xgrid)) {
        auto up = kernel_upper(beta, ke_lambda, ke_t, x);
        std::vector<double> row{x, up.mittag_form, up.exp_form};
        if (slow) {
          auto lo = kernel_lower(beta, ke_lambda, ke_t, x);
          row.push_back(lo.mittag_form);
          row.push_back(lo.exp_form);
        }
        rec.rows.push_back(std::move(row));
      }
    }
    emit(rec, ke_out);
  });

  // ---- moments -----------------------------------------------------
  auto* mo = app.add_subcommand("moments", "certified moment bounds");
  double mo_beta, mo_t = 1.0, mo_lip = 1.0, mo_vip = 0.0, mo_liplow = 0.0,
                  mo_viplow = 0.0;
  int mo_p = 2;
  std::string mo_xgrid = "0:0:1";
  double mo_mu_leb = 0.0, mo_nu_leb = std::nan("");
  std::vector<std::string> mo_mu_atoms, mo_mu_density, mo_nu_atoms;
  CommonOut mo_out;
  mo->add_option("--beta", mo_beta, "fractional index in (0,2)")->required();
  mo->add_option("--p", mo_p, "moment order (even, >= 2)");
  mo->add_option("--t", mo_t, "time > 0");
  mo->add_option("--x", mo_xgrid, "space grid start:stop:count");
  mo->add_option("--lip", mo_lip, "upper linear-growth constant of rho");
  mo->add_option("--vip", mo_vip, "upper affine constant of rho");
  mo->add_option("--lip-lower", mo_liplow, "lower growth constant");
  mo->add_option("--vip-lower", mo_viplow, "lower affine constant");
  mo->add_option("--mu-lebesgue", mo_mu_leb, "constant multiple of dx in mu");
  mo->add_option("--mu-atom", mo_mu_atoms, "atom loc:mass (repeatable)");
  mo->add_option("--mu-density", mo_mu_density,
                 "piecewise density lo:hi:value (repeatable)");
  mo->add_option("--nu-lebesgue", mo_nu_leb,
                 "fast regime: constant multiple of dx in nu");
  mo->add_option("--nu-atom", mo_nu_atoms, "fast regime: atom loc:mass");
  add_common(mo, mo_out);
  mo->callback([&] {
    FractionalIndex beta(mo_beta);
    RhoSpec rho{mo_lip, mo_vip, mo_liplow, mo_viplow};
    InitialMeasure mu = build_measure(mo_mu_leb, mo_mu_atoms, mo_mu_density);
    std::optional<InitialMeasure> nu;
    if (!beta.slow) {
      nu = build_measure(std::isnan(mo_nu_leb) ? 0.0 : mo_nu_leb, mo_nu_atoms,
                         {});
    }
    OutputRecord rec;
    rec.command = "moments";
    rec.params = {{"beta", std::to_string(mo_beta)},
                  {"p", std::to_string(mo_p)},
                  {"t", std::to_string(mo_t)}};
    bool with_lower = beta.beta < 1.0 && mo_liplow > 0.0;
    rec.columns = {"x", "j0", "upper"};
    if (with_lower) rec.columns.push_back("lower");
    for (double x : parse_grid(mo_xgrid)) {
      const InitialMeasure* nup = nu ? &*nu : nullptr;
      std::vector<double> row{x, j0(beta, mu, nup, mo_t, x),
                              moment_upper(beta, mo_p, rho, mu, nup, mo_t, x)};
      if (with_lower)
        row.push_back(second_moment_lower(beta, rho, mu, mo_t, x));
      rec.rows.push_back(std::move(row));
    }
    emit(rec, mo_out);
  });

  // ---- lyapunov ----------------------------------------------------
  auto* ly = app.add_subcommand("lyapunov", "moment Lyapunov exponent bounds");
  double ly_beta, ly_lip = 1.0, ly_liplow = 0.0;
  int ly_p = 2;
  CommonOut ly_out;
  ly->add_option("--beta", ly_beta, "fractional index, excluding 1 and 2")
      ->required();
  ly->add_option("--p", ly_p, "moment order >= 2");
  ly->add_option("--lip", ly_lip, "upper growth constant");
  ly->add_option("--lip-lower", ly_liplow, "lower growth constant");
  add_common(ly, ly_out);
  ly->callback([&] {
    FractionalIndex beta(ly_beta);
    RhoSpec rho{ly_lip, 0.0, ly_liplow, 0.0};
    auto b = lyapunov_bounds(beta, ly_p, rho);
    OutputRecord rec;
    rec.command = "lyapunov";
    rec.params = {{"beta", std::to_string(ly_beta)},
                  {"p", std::to_string(ly_p)}};
    double pexp = ly_beta < 1.0 ? (4.0 - ly_beta) / (2.0 - ly_beta)
                                : (8.0 - ly_beta) / (6.0 - ly_beta);
    rec.columns = {"p", "upper", "p_exponent"};
    std::vector<double> row{double(ly_p), b.upper, pexp};
    if (b.lower) {
      rec.columns.push_back("lower");
      row.push_back(*b.lower);
    }
    rec.rows.push_back(std::move(row));
    emit(rec, ly_out);
  });

  // ---- simulate ----------------------------------------------------
  auto* si = app.add_subcommand("simulate",
                                "Monte Carlo simulation of the mild equation");
  SimConfig sim;
  double si_beta = 1.0, si_mu_leb = 1.0, si_nu_leb = std::nan("");
  std::vector<std::string> si_mu_atoms;
  std::string si_tprobes = "0.1,0.25,0.5", si_xprobes = "0";
  int si_p = 2;
  CommonOut si_out;
  si->add_option("--beta", si_beta, "fractional index")->required();
  si->add_option("--t-max", sim.t_max, "final time");
  si->add_option("--n-time", sim.n_time, "number of time steps");
  si->add_option("--n-space", sim.n_space, "number of space cells (even)");
  si->add_option("--x-half-width", sim.x_half_width, "half width of the window");
  si->add_option("--replicates", sim.replicates, "Monte Carlo replicates");
  si->add_option("--seed", sim.seed, "noise seed");
  si->add_option("--rho-lambda", sim.rho.lambda, "affine coupling slope");
  si->add_option("--rho-shift", sim.rho.shift, "affine coupling shift");
  si->add_option("--mu-lebesgue", si_mu_leb, "constant initial data");
  si->add_option("--mu-atom", si_mu_atoms, "atom loc:mass (repeatable)");
  si->add_option("--nu-lebesgue", si_nu_leb, "fast regime velocity constant");
  si->add_option("--p", si_p, "moment order to report");
  si->add_option("--t-probes", si_tprobes, "comma list of probe times");
  si->add_option("--x-probes", si_xprobes, "comma list of probe locations");
  si->add_option("--threads", sim.n_threads, "worker threads (0 = auto)");
  add_common(si, si_out);
  si->callback([&] {
    sim.beta = FractionalIndex(si_beta);
    sim.mu = build_measure(si_mu_leb, si_mu_atoms, {});
    if (!std::isnan(si_nu_leb))
      sim.nu = InitialMeasure::lebesgue(si_nu_leb);
    sim.t_probes = parse_list(si_tprobes);
    sim.x_probes = parse_list(si_xprobes);
    auto result = simulate(sim);
    auto est = estimate_moments(result, si_p);
    OutputRecord rec;
    rec.command = "simulate";
    rec.params = {{"beta", std::to_string(si_beta)},
                  {"p", std::to_string(si_p)},
                  {"replicates", std::to_string(sim.replicates)},
                  {"seed", std::to_string(sim.seed)}};
    rec.columns = {"t", "x", "mean_power", "std_err"};
    for (std::size_t ti = 0; ti < est.t_grid.size(); ++ti)
      for (std::size_t xi = 0; xi < est.x_probe.size(); ++xi)
        rec.rows.push_back({est.t_grid[ti], est.x_probe[xi],
                            est.mean_power[ti][xi], est.std_err[ti][xi]});
    emit(rec, si_out);
  });

  // ---- verify ------------------------------------------------------
  auto* ve = app.add_subcommand("verify", "run a module invariant suite");
  std::string ve_suite = "all";
  SimVerifyOptions ve_opts;
  std::string ve_out_path;
  ve->add_option("--suite", ve_suite,
                 "specfun, green, kernel, moments, simulator or all")
      ->check(CLI::IsMember(
          {"specfun", "green", "kernel", "moments", "simulator", "all"}));
  ve->add_option("--replicates", ve_opts.replicates,
                 "simulator suite replicates");
  ve->add_option("--seed", ve_opts.seed, "simulator suite seed");
  ve->add_option("--out", ve_out_path, "write the JSON report here");
  ve->callback([&] {
    std::vector<SuiteReport> reports;
    if (ve_suite == "specfun" || ve_suite == "all")
      reports.push_back(verify_specfun());
    if (ve_suite == "green" || ve_suite == "all")
      reports.push_back(verify_green());
    if (ve_suite == "kernel" || ve_suite == "all")
      reports.push_back(verify_kernel());
    if (ve_suite == "moments" || ve_suite == "all")
      reports.push_back(verify_moments());
    if (ve_suite == "simulator" || ve_suite == "all")
      reports.push_back(verify_simulator(ve_opts));
    std::string text = report_json(reports);
    if (ve_out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(resolve_out(ve_out_path));
      f << text;
    }
    for (const auto& r : reports)
      if (!r.all_pass())
        throw std::runtime_error("verify: suite " + r.suite + " failed");
  });

  // ---- plot-green --------------------------------------------------
  auto* pl = app.add_subcommand("plot-green", "render Green-function curves");
  std::string pl_betas = "0.125,0.5,1,1.5,1.6667,1.875";
  double pl_t = 1.0;
  std::string pl_xgrid = "-5:5:801";
  std::string pl_scale = "linear";
  std::string pl_out = "green.svg";
  bool pl_spacetime = false;
  pl->add_option("--beta-list", pl_betas, "comma list of beta values");
  pl->add_option("--t", pl_t, "time of the slice");
  pl->add_option("--x", pl_xgrid, "space grid start:stop:count");
  pl->add_option("--scale", pl_scale, "linear or log10")
      ->check(CLI::IsMember({"linear", "log10"}));
  pl->add_option("--out", pl_out, "output SVG path");
  pl->add_flag("--spacetime", pl_spacetime,
               "one file per beta with time slices t = 1..5");
  pl->callback([&] {
    auto betas = parse_list(pl_betas);
    auto xs = parse_grid(pl_xgrid);
    bool logy = pl_scale == "log10";
    auto curve_for = [&](const FractionalIndex& fb, double t) {
      SvgCurve c;
      auto p = fb.beta < 2.0 ? asymptotic_params(fb, GreenKind::Primary)
                             : AsymptoticParams{0, 0, 0, 0};
      char lab[96];
      if (fb.beta < 2.0)
        std::snprintf(lab, sizeof(lab), "beta=%.4g t=%.3g (b=%.3g c=%.3g)",
                      fb.beta, t, p.b, p.c);
      else
        std::snprintf(lab, sizeof(lab), "beta=%.4g t=%.3g", fb.beta, t);
      c.label = lab;
      for (double x : xs) {
        double g = green(fb, GreenKind::Primary, t, x);
        c.x.push_back(x);
        c.y.push_back(logy ? std::log10(std::max(g, 1e-18)) : g);
      }
      return c;
    };
    std::string ylab = logy ? "log10 G_beta(t, x)" : "G_beta(t, x)";
    if (!pl_spacetime) {
      std::vector<SvgCurve> curves;
      for (double b : betas) curves.push_back(curve_for(FractionalIndex(b), pl_t));
      std::ofstream f(resolve_out(pl_out));
      if (!f) throw std::runtime_error("cannot open " + pl_out);
      f << render_svg(curves, "time-fractional diffusion Green functions",
                      "x", ylab);
    } else {
      for (double b : betas) {
        std::vector<SvgCurve> curves;
        for (double t : {1.0, 2.0, 3.0, 4.0, 5.0})
          curves.push_back(curve_for(FractionalIndex(b), t));
        std::string path = pl_out;
        auto dot = path.rfind(".svg");
        char suffix[32];
        std::snprintf(suffix, sizeof(suffix), "_beta%.4g.svg", b);
        if (dot != std::string::npos)
          path = path.substr(0, dot) + suffix;
        else
          path += suffix;
        std::ofstream f(resolve_out(path));
        if (!f) throw std::runtime_error("cannot open " + path);
        f << render_svg(curves, "Green function, space-time slices", "x",
                        ylab);
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const tfsde::accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 3;
  } catch (const tfsde::divergence_error& e) {
    std::cerr << "divergence error at step " << e.step() << ": " << e.what()
              << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
