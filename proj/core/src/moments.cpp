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

#include "tfsde/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tfsde/kernel.hpp"
#include "tfsde/quadrature.hpp"

namespace tfsde {

void InitialMeasure::validate() const {
  if (density_breakpoints.empty()) {
    if (!density_values.empty())
      throw std::domain_error("InitialMeasure: density values without breaks");
  } else {
    if (density_values.size() + 1 != density_breakpoints.size())
      throw std::domain_error(
          "InitialMeasure: need one density value per interval");
    for (std::size_t i = 1; i < density_breakpoints.size(); ++i)
      if (!(density_breakpoints[i] > density_breakpoints[i - 1]))
        throw std::domain_error(
            "InitialMeasure: breakpoints must be strictly increasing");
  }
}

bool InitialMeasure::is_pure_lebesgue() const {
  return atoms.empty() && density_values.empty();
}

double InitialMeasure::density_at(double y) const {
  if (density_breakpoints.empty()) return 0.0;
  if (y < density_breakpoints.front() || y >= density_breakpoints.back())
    return 0.0;
  auto it = std::upper_bound(density_breakpoints.begin(),
                             density_breakpoints.end(), y);
  std::size_t i = static_cast<std::size_t>(it - density_breakpoints.begin());
  return density_values[i - 1];
}

InitialMeasure InitialMeasure::lebesgue(double c) {
  InitialMeasure m;
  m.lebesgue_scale = c;
  return m;
}

InitialMeasure InitialMeasure::dirac(double location, double mass) {
  InitialMeasure m;
  m.atoms.push_back({location, mass});
  return m;
}

void RhoSpec::validate() const {
  if (!(lip_upper > 0.0))
    throw std::domain_error("RhoSpec: require lip_upper > 0");
  if (vip_upper < 0.0 || lip_lower < 0.0 || vip_lower < 0.0)
    throw std::domain_error("RhoSpec: negative envelope constant");
}

double f_eta(const FractionalIndex& beta, double eta, double x) {
  if (!(eta > 0.0)) throw std::domain_error("f_eta: require eta > 0");
  if (!(beta.beta < 2.0)) throw std::domain_error("f_eta: require beta < 2");
  return std::exp(-0.5 * eta *
                  std::pow(std::fabs(x), 2.0 / (2.0 - beta.beta)));
}

namespace {

// convolution of one measure with a pointwise kernel x -> K(t, x - y)
double convolve_measure(const InitialMeasure& m,
                        const std::function<double(double)>& kernel_at,
                        double mass_of_kernel, double x, double spread) {
  double acc = m.lebesgue_scale * mass_of_kernel;
  for (const auto& a : m.atoms) acc += a.mass * kernel_at(x - a.location);
  for (std::size_t i = 0; i + 1 < m.density_breakpoints.size(); ++i) {
    double lo = m.density_breakpoints[i];
    double hi = m.density_breakpoints[i + 1];
    double v = m.density_values[i];
    if (v == 0.0) continue;
    // integrate K(x - y) over [lo, hi]; clip against the kernel support
    double a = x - hi, b = x - lo;
    a = std::max(a, -spread);
    b = std::min(b, spread);
    if (a >= b) continue;
    auto f = [&](double u) { return kernel_at(u); };
    double piece;
    if (a < 0.0 && b > 0.0)  // cusp of the kernel at the origin
      piece = quad::integrate(f, a, 0.0, 1e-9) +
              quad::integrate(f, 0.0, b, 1e-9);
    else
      piece = quad::integrate(f, a, b, 1e-9);
    acc += v * piece;
  }
  return acc;
}

double measure_span(const InitialMeasure& m) {
  double s = 0.0;
  for (const auto& a : m.atoms) s = std::max(s, std::fabs(a.location));
  if (!m.density_breakpoints.empty())
    s = std::max({s, std::fabs(m.density_breakpoints.front()),
                  std::fabs(m.density_breakpoints.back())});
  return s;
}

}  // namespace

double j0(const FractionalIndex& beta, const InitialMeasure& mu,
          const InitialMeasure* nu, double t, double x,
          const EvalPolicy& policy) {
  mu.validate();
  if (!(t > 0.0)) throw std::domain_error("j0: require t > 0");

  if (beta.slow) {
    if (nu != nullptr)
      throw std::domain_error("j0: nu is only part of the fast regime");
    double spread = green_tail_cut(beta, GreenKind::Primary, t, 1e-14);
    auto k = [&](double u) {
      return green(beta, GreenKind::Primary, t, u, policy);
    };
    return convolve_measure(mu, k, green_total_mass(beta, GreenKind::Primary, t),
                            x, spread);
  }

  if (nu == nullptr)
    throw std::domain_error("j0: fast regime requires the velocity measure nu");
  nu->validate();

  if (beta.beta == 2.0) {
    // G_2 is the half indicator; G_2^* a symmetric pair of Dirac masses
    auto k2 = [&](double u) { return std::fabs(u) <= t ? 0.5 : 0.0; };
    double acc = convolve_measure(*nu, k2, t, x, t);
    if (!mu.atoms.empty())
      throw std::domain_error(
          "j0: atomic mu has no pointwise value under G_2^*");
    acc += mu.lebesgue_scale +
           0.5 * (mu.density_at(x - t) + mu.density_at(x + t));
    return acc;
  }

  double spread_p = green_tail_cut(beta, GreenKind::Primary, t, 1e-14);
  double spread_s = green_tail_cut(beta, GreenKind::Star, t, 1e-14);
  auto kp = [&](double u) {
    return green(beta, GreenKind::Primary, t, u, policy);
  };
  auto ks = [&](double u) { return green(beta, GreenKind::Star, t, u, policy); };
  double acc = convolve_measure(
      *nu, kp, green_total_mass(beta, GreenKind::Primary, t), x, spread_p);
  acc += convolve_measure(mu, ks, green_total_mass(beta, GreenKind::Star, t),
                          x, spread_s);
  return acc;
}

namespace {

// k(tau) = gamma tau^{-sigma} E_{a,a}(gamma tau^a), a = 1 - sigma: the
// Mittag-Leffler form of the kernel bound without the spatial factor (its
// space integral, since the reference kernels have unit mass).
struct BoundKernel {
  double sigma;
  double gamma;

  double alpha() const { return 1.0 - sigma; }
  double operator()(double tau) const {
    return gamma * std::pow(tau, -sigma) *
           mittag_leffler({alpha(), alpha()}, gamma * std::pow(tau, alpha()));
  }
  // int_0^t k = E_{a,1}(gamma t^a) - 1
  double time_mass(double t) const {
    return mittag_leffler({alpha(), 1.0}, gamma * std::pow(t, alpha())) - 1.0;
  }
};

// outer time integral int_0^t k(tau) h(tau) dtau with the left endpoint
// power tau^{-sigma} (sigma > 0) and an optional right endpoint power
// (t - tau)^{-p_right} inside h
double convolve_time(const BoundKernel& k, const std::function<double(double)>& h,
                     double t, double p_right) {
  auto f = [&](double tau) { return k(tau) * h(tau); };
  double mid = 0.5 * t;
  double left = quad::integrate_left_singular(f, 0.0, mid,
                                              std::max(k.sigma, 0.0), 1e-7);
  auto f_rev = [&](double u) { return f(t - u); };  // u = t - tau
  double right =
      quad::integrate_left_singular(f_rev, 0.0, mid, p_right, 1e-7);
  return left + right;
}

}  // namespace

double moment_upper(const FractionalIndex& beta, int p, const RhoSpec& rho,
                    const InitialMeasure& mu, const InitialMeasure* nu,
                    double t, double x, const EvalPolicy& policy) {
  rho.validate();
  if (p < 2 || (p % 2) != 0)
    throw std::domain_error("moment_upper: p must be an even integer >= 2");
  if (!(beta.beta < 2.0))
    throw std::domain_error("moment_upper: require beta in (0, 2)");
  if (!(t > 0.0)) throw std::domain_error("moment_upper: require t > 0");

  const double lambda =
      (p == 2) ? rho.lip_upper : 4.0 * std::sqrt(double(p)) * rho.lip_upper;
  const double sigma = beta.beta / 2.0 + 2.0 * (1.0 - beta.ceil_beta);
  const double gamma = lambda * lambda * psi(beta, false) *
                       tilde_c(beta.beta) * std::tgamma(1.0 - sigma);
  const BoundKernel kern{sigma, gamma};
  const double base = (p == 2) ? 1.0 : 2.0;
  const double vip2 = rho.vip_upper * rho.vip_upper;

  const double j0_here = j0(beta, mu, nu, t, x, policy);

  const bool flat =
      mu.is_pure_lebesgue() && (beta.slow || (nu && nu->is_pure_lebesgue()));
  if (flat) {
    if (beta.slow) {
      const double c = mu.lebesgue_scale;
      return base * c * c + (vip2 + base * c * c) * kern.time_mass(t);
    }
    const double c_nu = nu->lebesgue_scale;
    const double c_mu = mu.lebesgue_scale;
    auto h = [&](double tau) {
      double j = c_nu * (t - tau) + c_mu;
      return vip2 + base * j * j;
    };
    return base * j0_here * j0_here + convolve_time(kern, h, t, 0.0);
  }

  const bool atoms = !mu.atoms.empty() || (nu && !nu->atoms.empty());
  const double p_right = atoms ? beta.beta / 2.0 : 0.0;
  const double span = measure_span(mu) + (nu ? measure_span(*nu) : 0.0);

  auto q_integral = [&](double tau) {
    // int Gref(tau, y) J0^2(t - tau, x - y) dy
    double s = t - tau;
    if (s <= 0.0) return 0.0;
    double w_ref = beta.slow ? 45.0 * std::pow(tau, beta.beta / 2.0)
                             : 14.0 * std::pow(tau, beta.beta / 2.0);
    double w = w_ref + span + green_tail_cut(beta, GreenKind::Primary, t, 1e-12);
    auto f = [&](double y) {
      double j = j0(beta, mu, nu, s, x - y, policy);
      return reference_kernel_dispatch(beta, tau, y) * j * j;
    };
    return quad::integrate(f, -w, w, 1e-6, 12);
  };
  auto h = [&](double tau) { return vip2 + base * q_integral(tau); };
  return base * j0_here * j0_here + convolve_time(kern, h, t, p_right);
}

double second_moment_lower(const FractionalIndex& beta, const RhoSpec& rho,
                           const InitialMeasure& mu, double t, double x,
                           const EvalPolicy& policy) {
  rho.validate();
  if (!(beta.beta < 1.0))
    throw std::domain_error("second_moment_lower: slow regime (0, 1) only");
  if (!(rho.lip_lower > 0.0))
    throw std::domain_error("second_moment_lower: requires lip_lower > 0");
  if (!(t > 0.0)) throw std::domain_error("second_moment_lower: require t > 0");

  const double lambda = rho.lip_lower;
  const double sigma = beta.beta / 2.0;  // scale-free lower exponent
  const double gamma = lambda * lambda * psi(beta, true) *
                       std::tgamma(1.0 - sigma) / std::sqrt(2.0);
  const BoundKernel kern{sigma, gamma};
  const double vip2 = rho.vip_lower * rho.vip_lower;

  const double j0_here = j0(beta, mu, nullptr, t, x, policy);

  if (mu.is_pure_lebesgue()) {
    const double c = mu.lebesgue_scale;
    return c * c + (vip2 + c * c) * kern.time_mass(t);
  }

  const bool atoms = !mu.atoms.empty();
  const double p_right = atoms ? beta.beta / 2.0 : 0.0;
  const double span = measure_span(mu);
  ReferenceKernel lower_ref{ReferenceKernelKind::LowerGauss, beta, 1};

  auto q_integral = [&](double tau) {
    double s = t - tau;
    if (s <= 0.0) return 0.0;
    double w = 14.0 * std::pow(tau, beta.beta / 2.0) + span +
               green_tail_cut(beta, GreenKind::Primary, t, 1e-12);
    auto f = [&](double y) {
      double j = j0(beta, mu, nullptr, s, x - y, policy);
      return reference_kernel(lower_ref, tau, y) * j * j;
    };
    return quad::integrate(f, -w, w, 1e-6, 12);
  };
  auto h = [&](double tau) { return vip2 + q_integral(tau); };
  return j0_here * j0_here + convolve_time(kern, h, t, p_right);
}

LyapunovBounds lyapunov_bounds(const FractionalIndex& beta, int p,
                               const RhoSpec& rho) {
  rho.validate();
  if (p < 2) throw std::domain_error("lyapunov_bounds: require p >= 2");
  const double b = beta.beta;
  if (b == 1.0)
    throw std::domain_error(
        "lyapunov_bounds: beta = 1 is the heat endpoint (upper exponent "
        "reduces to p^3); the theorem covers beta in (0,1) and (1,2)");
  if (b == 2.0)
    throw std::domain_error(
        "lyapunov_bounds: beta = 2 is the wave endpoint (upper exponent "
        "reduces to p^{3/2}); the theorem covers beta in (0,1) and (1,2)");

  const double l2 = rho.lip_upper * rho.lip_upper;
  LyapunovBounds out{};
  if (b < 1.0) {
    out.upper = 0.5 *
                std::pow(16.0 * l2 * hat_c(b) * psi(beta, false) *
                             std::tgamma(1.0 - b / 2.0),
                         2.0 / (2.0 - b)) *
                std::pow(double(p), (4.0 - b) / (2.0 - b));
    if (rho.lip_lower > 0.0) {
      // (p/2) Ups_lower with the scale-free sigma = beta/2
      double ll2 = rho.lip_lower * rho.lip_lower;
      out.lower = 0.5 * p *
                  std::pow(ll2 * psi(beta, true) *
                               std::tgamma(1.0 - b / 2.0) / std::sqrt(2.0),
                           2.0 / (2.0 - b));
    }
  } else {
    out.upper = 0.5 *
                std::pow(std::pow(2.0, 4.5) * l2 * psi(beta, false) *
                             std::tgamma(3.0 - b / 2.0),
                         2.0 / (6.0 - b)) *
                std::pow(double(p), (8.0 - b) / (6.0 - b));
  }
  return out;
}

HolderExponents holder_exponents(const FractionalIndex& beta,
                                 std::optional<double> data_alpha) {
  if (!(beta.beta <= 1.0))
    throw std::domain_error(
        "holder_exponents: proven for the slow regime beta in (0, 1] only");
  const double b = beta.beta;
  HolderExponents out{};
  if (!data_alpha) {
    out.time_exp = (2.0 - b) / 4.0;
    out.space_exp = 0.5;
    out.regime = HolderExponents::Regime::Interior;
    return out;
  }
  const double a = *data_alpha;
  if (!(a > 0.0 && a <= 1.0))
    throw std::domain_error("holder_exponents: data_alpha must be in (0, 1]");
  out.time_exp = std::min(a * b / 2.0, (2.0 - b) / 4.0);
  out.space_exp = std::min(a * b, 0.5);
  out.regime = HolderExponents::Regime::GlobalWithHolderData;
  return out;
}

}  // namespace tfsde
