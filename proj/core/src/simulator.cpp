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

#include "tfsde/simulator.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tfsde/philox.hpp"
#include "tfsde/quadrature.hpp"

namespace tfsde {

namespace {
std::mutex fftw_plan_mutex;
}

void RhoFunction::validate() const {
  if (table_u.size() != table_value.size())
    throw std::domain_error("RhoFunction: table arrays differ in size");
  if (!table_u.empty() && table_u.size() < 2)
    throw std::domain_error("RhoFunction: table needs at least two points");
  for (std::size_t i = 1; i < table_u.size(); ++i)
    if (!(table_u[i] > table_u[i - 1]))
      throw std::domain_error("RhoFunction: table abscissae must increase");
}

double RhoFunction::operator()(double u) const {
  if (table_u.empty()) return lambda * u + shift;
  // piecewise linear with end-slope extrapolation
  std::size_t n = table_u.size();
  std::size_t i;
  if (u <= table_u.front())
    i = 0;
  else if (u >= table_u.back())
    i = n - 2;
  else
    i = static_cast<std::size_t>(
            std::upper_bound(table_u.begin(), table_u.end(), u) -
            table_u.begin()) -
        1;
  double w = (u - table_u[i]) / (table_u[i + 1] - table_u[i]);
  return table_value[i] * (1.0 - w) + table_value[i + 1] * w;
}

void SimConfig::validate() const {
  rho.validate();
  mu.validate();
  if (nu) nu->validate();
  if (beta.slow && nu)
    throw std::domain_error("SimConfig: nu is only part of the fast regime");
  if (!beta.slow && !nu)
    throw std::domain_error("SimConfig: fast regime requires nu");
  if (!(t_max > 0.0)) throw std::domain_error("SimConfig: t_max > 0");
  if (n_time < 2 || n_space < 8)
    throw std::domain_error("SimConfig: grid too small");
  if (n_space % 2)
    throw std::domain_error("SimConfig: n_space must be even");
  if (!(x_half_width > 0.0))
    throw std::domain_error("SimConfig: x_half_width > 0");
  if (replicates < 1) throw std::domain_error("SimConfig: replicates >= 1");

  // spatial truncation: Green mass leaking past the window at t_max must
  // stay below 1e-4, certified by the stretched-exponential envelope
  if (beta.beta < 2.0) {
    auto p = asymptotic_params(beta, GreenKind::Primary);
    const double hb = beta.beta / 2.0;
    const double pref = std::pow(t_max, beta.ceil_beta - 1.0 - hb);
    const double y0 = x_half_width * std::pow(t_max, -hb);
    auto env = [&](double y) {
      return pref * p.A * std::pow(y, p.a) * std::exp(-p.b * std::pow(y, p.c));
    };
    double leak = 2.0 * std::pow(t_max, hb) *
                  quad::integrate(env, y0, y0 + 200.0, 1e-8);
    leak /= green_total_mass(beta, GreenKind::Primary, t_max);
    if (!(leak < 1e-4))
      throw std::domain_error(
          "SimConfig: spatial window too narrow, Green-function leakage "
          "exceeds 1e-4");
  } else if (!(x_half_width > t_max)) {
    throw std::domain_error(
        "SimConfig: wave cone reaches past the spatial window");
  }
}

namespace {

struct FftPlans {
  int padded;
  fftw_plan fwd;
  fftw_plan inv;

  FftPlans(int p, double* rbuf, fftw_complex* cbuf) : padded(p) {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fwd = fftw_plan_dft_r2c_1d(p, rbuf, cbuf, FFTW_ESTIMATE);
    inv = fftw_plan_dft_c2r_1d(p, cbuf, rbuf, FFTW_ESTIMATE);
  }
  ~FftPlans() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
  }
};

struct Workspace {
  double* real;
  fftw_complex* cplx;
  int padded;

  explicit Workspace(int p) : padded(p) {
    real = fftw_alloc_real(p);
    cplx = fftw_alloc_complex(p / 2 + 1);
  }
  ~Workspace() {
    fftw_free(real);
    fftw_free(cplx);
  }
};

// initial field values for the left-point coupling at step 0; atoms get the
// half-step Green proxy since a Dirac mass has no pointwise trace
std::vector<double> initial_field(const SimConfig& cfg,
                                  const std::vector<double>& xs, double dt) {
  std::vector<double> u0(xs.size());
  const InitialMeasure& m = cfg.mu;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    double v = m.lebesgue_scale + m.density_at(xs[j]);
    u0[j] = v;
  }
  if (!m.atoms.empty() && cfg.beta.beta < 2.0) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      for (const auto& a : m.atoms)
        u0[j] += a.mass * green(cfg.beta, GreenKind::Primary, 0.5 * dt,
                                xs[j] - a.location);
    }
  }
  return u0;
}

}  // namespace

SimResult simulate(const SimConfig& cfg) {
  cfg.validate();

  const int n = cfg.n_space;
  const int padded = 2 * n;
  const int nc = padded / 2 + 1;
  const double dt = cfg.t_max / cfg.n_time;
  const double dx = 2.0 * cfg.x_half_width / n;
  const double noise_sd = std::sqrt(dt * dx);

  std::vector<double> xs(n);
  for (int j = 0; j < n; ++j) xs[j] = -cfg.x_half_width + j * dx;

  // snapped probes
  std::vector<int> t_idx, x_idx;
  SimResult result;
  for (double tp : cfg.t_probes) {
    int k = std::clamp(static_cast<int>(std::lround(tp / dt)), 1, cfg.n_time);
    t_idx.push_back(k);
    result.t_probes.push_back(k * dt);
  }
  for (double xp : cfg.x_probes) {
    int j = std::clamp(
        static_cast<int>(std::lround((xp + cfg.x_half_width) / dx)), 0, n - 1);
    x_idx.push_back(j);
    result.x_probes.push_back(xs[j]);
  }
  result.dt = dt;
  result.dx = dx;
  result.increment_lags = cfg.increment_lags;

  // Green rows in frequency space: lag m*dt for m = 1..n_time plus the
  // half-step row for the newest slice
  Workspace main_ws(padded);
  FftPlans plans(padded, main_ws.real, main_ws.cplx);

  auto green_at = [&](double tau, double x) {
    return green(cfg.beta, GreenKind::Primary, tau, x);
  };
  std::vector<std::vector<std::complex<double>>> ghat(cfg.n_time + 1);
  auto build_row = [&](double tau, std::vector<std::complex<double>>& dest) {
    std::memset(main_ws.real, 0, sizeof(double) * padded);
    main_ws.real[0] = green_at(tau, 0.0);
    for (int i = 1; i < n; ++i) {
      double v = green_at(tau, i * dx);
      main_ws.real[i] = v;
      main_ws.real[padded - i] = v;
    }
    fftw_execute_dft_r2c(plans.fwd, main_ws.real, main_ws.cplx);
    dest.resize(nc);
    for (int l = 0; l < nc; ++l)
      dest[l] = {main_ws.cplx[l][0], main_ws.cplx[l][1]};
  };
  build_row(0.5 * dt, ghat[0]);  // half-step row
  for (int m = 1; m <= cfg.n_time; ++m) build_row(m * dt, ghat[m]);

  // homogeneous part at every step
  std::vector<std::vector<double>> j0_rows(cfg.n_time + 1,
                                           std::vector<double>(n));
  {
    const InitialMeasure* nu_ptr = cfg.nu ? &*cfg.nu : nullptr;
    bool flat = cfg.mu.is_pure_lebesgue() &&
                (cfg.beta.slow || (nu_ptr && nu_ptr->is_pure_lebesgue()));
    for (int k = 1; k <= cfg.n_time; ++k) {
      double t = k * dt;
      if (flat) {
        double v = cfg.beta.slow
                       ? cfg.mu.lebesgue_scale
                       : nu_ptr->lebesgue_scale * t + cfg.mu.lebesgue_scale;
        std::fill(j0_rows[k].begin(), j0_rows[k].end(), v);
      } else {
        for (int j = 0; j < n; ++j)
          j0_rows[k][j] = j0(cfg.beta, cfg.mu, nu_ptr, t, xs[j]);
      }
    }
  }
  const std::vector<double> u0 = initial_field(cfg, xs, dt);

  // increment bookkeeping
  const int n_lags = static_cast<int>(cfg.increment_lags.size());
  const int jc0 = n / 4, jc1 = 3 * n / 4;  // central window for statistics
  std::vector<int> series_cols;
  if (cfg.record_increments)
    for (int j = jc0; j <= jc1; j += std::max(1, n / 32)) series_cols.push_back(j);

  const int reps = cfg.replicates;
  result.probe_values.assign(
      reps, std::vector<std::vector<double>>(
                t_idx.size(), std::vector<double>(x_idx.size(), 0.0)));
  if (cfg.record_increments) {
    result.time_increments.assign(reps, std::vector<double>(n_lags, 0.0));
    result.space_increments.assign(reps, std::vector<double>(n_lags, 0.0));
  }

  auto run_replicate = [&](int rep, Workspace& ws,
                           std::vector<std::vector<std::complex<double>>>& qhat,
                           std::vector<double>& u,
                           std::vector<std::complex<double>>& acc,
                           std::vector<std::vector<double>>& series) {
    u = u0;
    for (int lag_i = 0; lag_i < n_lags && cfg.record_increments; ++lag_i) {
      result.time_increments[rep][lag_i] = 0.0;
      result.space_increments[rep][lag_i] = 0.0;
    }
    if (cfg.record_increments)
      for (std::size_t c = 0; c < series_cols.size(); ++c)
        series[c].assign(cfg.n_time + 1, u0[series_cols[c]]);

    for (int step = 0; step < cfg.n_time; ++step) {
      // q_step = rho(u_step) dW_step, then its spectrum
      for (int j = 0; j < n; ++j) {
        double dw = noise_sd * keyed_normal(cfg.seed,
                                            static_cast<std::uint32_t>(rep),
                                            static_cast<std::uint32_t>(step),
                                            static_cast<std::uint32_t>(j));
        ws.real[j] = cfg.rho(u[j]) * dw;
      }
      std::memset(ws.real + n, 0, sizeof(double) * (padded - n));
      fftw_execute_dft_r2c(plans.fwd, ws.real, ws.cplx);
      for (int l = 0; l < nc; ++l)
        qhat[step][l] = {ws.cplx[l][0], ws.cplx[l][1]};

      // u at t_{step+1} = J0 + sum_k g[lag] * q_k
      std::fill(acc.begin(), acc.end(), std::complex<double>(0.0, 0.0));
      for (int k = 0; k <= step; ++k) {
        const auto& g = (k == step) ? ghat[0] : ghat[step + 1 - k];
        const auto& q = qhat[k];
        for (int l = 0; l < nc; ++l) acc[l] += g[l] * q[l];
      }
      for (int l = 0; l < nc; ++l) {
        ws.cplx[l][0] = acc[l].real();
        ws.cplx[l][1] = acc[l].imag();
      }
      fftw_execute_dft_c2r(plans.inv, ws.cplx, ws.real);
      const double norm = 1.0 / padded;
      const auto& j0r = j0_rows[step + 1];
      for (int j = 0; j < n; ++j) {
        u[j] = j0r[j] + ws.real[j] * norm;
        if (!(std::fabs(u[j]) < 1e12))
          throw divergence_error("simulate: field magnitude exceeded 1e12",
                                 static_cast<std::size_t>(step + 1));
      }

      if (cfg.record_increments)
        for (std::size_t c = 0; c < series_cols.size(); ++c)
          series[c][step + 1] = u[series_cols[c]];

      for (std::size_t ti = 0; ti < t_idx.size(); ++ti)
        if (t_idx[ti] == step + 1)
          for (std::size_t xi = 0; xi < x_idx.size(); ++xi)
            result.probe_values[rep][ti][xi] = u[x_idx[xi]];

      // spatial increments from the final field
      if (cfg.record_increments && step + 1 == cfg.n_time) {
        for (int lag_i = 0; lag_i < n_lags; ++lag_i) {
          int lag = cfg.increment_lags[lag_i];
          double s = 0.0;
          int cnt = 0;
          for (int j = jc0; j + lag <= jc1; ++j) {
            double d = u[j + lag] - u[j];
            s += d * d;
            ++cnt;
          }
          result.space_increments[rep][lag_i] = s / cnt;
        }
      }
    }

    // time increments over the second half of the run
    if (cfg.record_increments) {
      for (int lag_i = 0; lag_i < n_lags; ++lag_i) {
        int lag = cfg.increment_lags[lag_i];
        double s = 0.0;
        int cnt = 0;
        for (std::size_t c = 0; c < series_cols.size(); ++c) {
          for (int k = cfg.n_time / 2; k + lag <= cfg.n_time; ++k) {
            double d = series[c][k + lag] - series[c][k];
            s += d * d;
            ++cnt;
          }
        }
        result.time_increments[rep][lag_i] = s / cnt;
      }
    }
  };

  int hw = cfg.n_threads > 0
               ? cfg.n_threads
               : static_cast<int>(std::thread::hardware_concurrency());
  hw = std::max(1, std::min(hw, reps));

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&](int lo, int hi) {
    try {
      Workspace ws(padded);
      std::vector<std::vector<std::complex<double>>> qhat(
          cfg.n_time, std::vector<std::complex<double>>(nc));
      std::vector<double> u(n);
      std::vector<std::complex<double>> acc(nc);
      std::vector<std::vector<double>> series(series_cols.size());
      for (int rep = lo; rep < hi; ++rep)
        run_replicate(rep, ws, qhat, u, acc, series);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (hw == 1) {
    worker(0, reps);
  } else {
    std::vector<std::thread> pool;
    int chunk = (reps + hw - 1) / hw;
    for (int th = 0; th < hw; ++th) {
      int lo = th * chunk, hi = std::min(reps, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  return result;
}

MomentEstimate estimate_moments(const SimResult& result, int p) {
  if (p < 1) throw std::domain_error("estimate_moments: require p >= 1");
  const int reps = static_cast<int>(result.probe_values.size());
  if (reps < 2)
    throw std::domain_error(
        "estimate_moments: need at least two replicates for an error bar");

  MomentEstimate est;
  est.t_grid = result.t_probes;
  est.x_probe = result.x_probes;
  est.p = p;
  est.replicates = reps;
  const std::size_t nt = result.t_probes.size();
  const std::size_t nx = result.x_probes.size();
  est.mean_power.assign(nt, std::vector<double>(nx, 0.0));
  est.std_err.assign(nt, std::vector<double>(nx, 0.0));

  std::vector<double> v(reps);
  for (std::size_t ti = 0; ti < nt; ++ti) {
    for (std::size_t xi = 0; xi < nx; ++xi) {
      double total = 0.0;
      for (int r = 0; r < reps; ++r) {
        v[r] = std::pow(std::fabs(result.probe_values[r][ti][xi]),
                        static_cast<double>(p));
        total += v[r];
      }
      double mean = total / reps;
      // jackknife over leave-one-out means
      double jk_mean = 0.0;
      for (int r = 0; r < reps; ++r) jk_mean += (total - v[r]) / (reps - 1);
      jk_mean /= reps;
      double ss = 0.0;
      for (int r = 0; r < reps; ++r) {
        double th = (total - v[r]) / (reps - 1);
        ss += (th - jk_mean) * (th - jk_mean);
      }
      est.mean_power[ti][xi] = mean;
      est.std_err[ti][xi] =
          std::sqrt(ss * (reps - 1) / static_cast<double>(reps));
    }
  }
  return est;
}

namespace {

SlopeEstimate weighted_log_slope(const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& sigmas) {
  const std::size_t n = xs.size();
  double sw = 0, swx = 0, swy = 0;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = std::max(sigmas[i], 1e-12);
    w[i] = 1.0 / (s * s);
    sw += w[i];
    swx += w[i] * xs[i];
    swy += w[i] * ys[i];
  }
  double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += w[i] * (xs[i] - xbar) * (xs[i] - xbar);
    sxy += w[i] * (xs[i] - xbar) * (ys[i] - ybar);
  }
  SlopeEstimate out{};
  out.slope = sxy / sxx;
  out.ci = 1.96 / std::sqrt(sxx);
  return out;
}

}  // namespace

SlopeEstimate estimate_lyapunov(const MomentEstimate& estimate,
                                std::pair<double, double> window,
                                int x_index) {
  if (!(window.second > window.first))
    throw std::domain_error("estimate_lyapunov: empty window");
  std::vector<double> xs, ys, sg;
  for (std::size_t ti = 0; ti < estimate.t_grid.size(); ++ti) {
    double t = estimate.t_grid[ti];
    if (t < window.first || t > window.second) continue;
    double m = estimate.mean_power[ti][x_index];
    if (!(m > 0.0))
      throw std::domain_error(
          "estimate_lyapunov: nonpositive moment estimate in window");
    xs.push_back(t);
    ys.push_back(std::log(m));
    sg.push_back(estimate.std_err[ti][x_index] / m);
  }
  if (xs.size() < 2)
    throw std::domain_error("estimate_lyapunov: fewer than two points in window");
  return weighted_log_slope(xs, ys, sg);
}

SlopeEstimate empirical_increment_scaling(const SimResult& result,
                                          IncrementDirection direction) {
  const auto& per_rep = direction == IncrementDirection::Time
                            ? result.time_increments
                            : result.space_increments;
  if (per_rep.empty())
    throw std::domain_error(
        "empirical_increment_scaling: run simulate with record_increments");
  const int reps = static_cast<int>(per_rep.size());
  const std::size_t n_lags = result.increment_lags.size();
  if (n_lags < 2)
    throw std::domain_error("empirical_increment_scaling: need >= 2 lags");

  const double unit =
      direction == IncrementDirection::Time ? result.dt : result.dx;
  std::vector<double> xs(n_lags), ys(n_lags), sg(n_lags);
  for (std::size_t li = 0; li < n_lags; ++li) {
    double mean = 0.0;
    for (int r = 0; r < reps; ++r) mean += per_rep[r][li];
    mean /= reps;
    double ss = 0.0;
    for (int r = 0; r < reps; ++r)
      ss += (per_rep[r][li] - mean) * (per_rep[r][li] - mean);
    double se = std::sqrt(ss / (static_cast<double>(reps) - 1.0) / reps);
    xs[li] = std::log(result.increment_lags[li] * unit);
    ys[li] = std::log(mean);
    sg[li] = se / mean;
  }
  return weighted_log_slope(xs, ys, sg);
}

}  // namespace tfsde
