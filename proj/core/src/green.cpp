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

#include "tfsde/green.hpp"

#include <cmath>
#include <stdexcept>

#include "tfsde/quadrature.hpp"

namespace tfsde {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FractionalIndex::FractionalIndex(double b) : beta(b) {
  if (!(b > 0.0) || !(b <= 2.0) || !std::isfinite(b))
    throw std::domain_error("FractionalIndex: require beta in (0, 2]");
  ceil_beta = (b <= 1.0) ? 1 : 2;
  slow = (b <= 1.0);
}

int effective_ceil(const FractionalIndex& beta, GreenKind kind) {
  return kind == GreenKind::Star ? 1 : beta.ceil_beta;
}

double green(const FractionalIndex& beta, GreenKind kind, double t, double x,
             const EvalPolicy& policy) {
  if (!(t > 0.0)) throw std::domain_error("green: require t > 0");
  if (beta.beta == 2.0) {
    if (kind == GreenKind::Star)
      throw unsupported_distribution_error(
          "green: G_2^* is a pair of Dirac masses and has no pointwise "
          "values");
    return std::fabs(x) <= t ? 0.5 : 0.0;
  }
  const int cb = effective_ceil(beta, kind);
  const double half_beta = beta.beta / 2.0;
  const double pref = 0.5 * std::pow(t, cb - 1.0 - half_beta);
  const double y = std::fabs(x) * std::pow(t, -half_beta);
  return pref * mainardi({half_beta, static_cast<double>(cb)}, y, policy);
}

double green_total_mass(const FractionalIndex& beta, GreenKind kind,
                        double t) {
  if (!(t > 0.0)) throw std::domain_error("green_total_mass: require t > 0");
  return std::pow(t, effective_ceil(beta, kind) - 1.0);
}

double green_moment(const FractionalIndex& beta, GreenKind kind, double a,
                    double t) {
  if (!(a > -1.0)) throw std::domain_error("green_moment: require a > -1");
  if (!(t > 0.0)) throw std::domain_error("green_moment: require t > 0");
  const int cb = effective_ceil(beta, kind);
  const double e = a * beta.beta / 2.0 + cb;
  return std::tgamma(a + 1.0) * rgamma(e) * std::pow(t, e - 1.0);
}

double green_fourier(const FractionalIndex& beta, GreenKind kind, double t,
                     double xi, const EvalPolicy& policy) {
  if (!(t > 0.0)) throw std::domain_error("green_fourier: require t > 0");
  const int cb = effective_ceil(beta, kind);
  const double z = -std::pow(t, beta.beta) * xi * xi;
  return std::pow(t, cb - 1.0) *
         mittag_leffler({beta.beta, static_cast<double>(cb)}, z, policy);
}

double green_laplace(const FractionalIndex& beta, GreenKind kind, double z,
                     const EvalPolicy& policy) {
  const int cb = effective_ceil(beta, kind);
  return 0.5 *
         mittag_leffler({beta.beta / 2.0, static_cast<double>(cb)}, -z,
                        policy);
}

double green_derivative(const FractionalIndex& beta, GreenKind kind, double t,
                        double x, int n, const EvalPolicy& policy) {
  if (!(t > 0.0)) throw std::domain_error("green_derivative: require t > 0");
  if (n < 0) throw std::domain_error("green_derivative: require n >= 0");
  if (beta.beta == 2.0)
    throw unsupported_distribution_error(
        "green_derivative: not defined pointwise for beta = 2");
  const int cb = effective_ceil(beta, kind);
  const double half_beta = beta.beta / 2.0;
  const double pref = 0.5 * std::pow(t, cb - 1.0 - (n + 1) * half_beta);
  const double y = std::fabs(x) * std::pow(t, -half_beta);
  const double m =
      mainardi({half_beta, cb - n * half_beta}, y, policy);
  const bool right_side = !std::signbit(x);  // +0.0 maps to the right limit
  if (right_side) return ((n & 1) ? -1.0 : 1.0) * pref * m;
  return pref * m;
}

AsymptoticParams asymptotic_params(const FractionalIndex& beta,
                                   GreenKind kind) {
  const double b = beta.beta;
  if (!(b < 2.0))
    throw std::domain_error(
        "asymptotic_params: no stretched-exponential regime at beta = 2");
  const int cb = effective_ceil(beta, kind);
  AsymptoticParams p{};
  p.A = std::pow(2.0 * kPi * (2.0 - b) *
                     std::pow(2.0, (b + 4.0 * (1.0 - cb)) / (2.0 - b)) *
                     std::pow(b, 2.0 * (1.0 + b - 2.0 * cb) / (b - 2.0)),
                 -0.5);
  p.a = (1.0 + b - 2.0 * cb) / (2.0 - b);
  p.c = 2.0 / (2.0 - b);
  p.b = (2.0 - b) * std::pow(2.0, -2.0 / (2.0 - b)) *
        std::pow(b, b / (2.0 - b));
  return p;
}

double green_tail_cut(const FractionalIndex& beta, GreenKind kind, double t,
                      double abs_tol) {
  if (!(abs_tol > 0.0))
    throw std::domain_error("green_tail_cut: require abs_tol > 0");
  if (beta.beta == 2.0) return t;  // compact support
  const AsymptoticParams p = asymptotic_params(beta, kind);
  const int cb = effective_ceil(beta, kind);
  const double half_beta = beta.beta / 2.0;
  const double pref = std::pow(t, cb - 1.0 - half_beta);
  // envelope in x: 10 * pref * A * y^a * exp(-b y^c), y = |x| / t^{beta/2}
  auto env = [&](double y) {
    return 10.0 * pref * p.A * std::pow(y, p.a) * std::exp(-p.b * std::pow(y, p.c));
  };
  double y = 1.0;
  while (env(y) > abs_tol && y < 1e6) y *= 2.0;
  double lo = y / 2.0, hi = y;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (env(mid) > abs_tol ? lo : hi) = mid;
  }
  return hi * std::pow(t, half_beta);
}

namespace {

// integral_0^T E_{beta,1}(-r^beta xi^2)^2 dr
double squared_ml_time_integral(double b, double T, double xi,
                                const EvalPolicy& policy) {
  const double xi2 = xi * xi;
  auto f = [&](double r) {
    double e = mittag_leffler({b, 1.0}, -std::pow(r, b) * xi2, policy);
    return e * e;
  };
  return quad::integrate(f, 0.0, T, 1e-9);
}

// integral_lo^hi g(xi) cos(xi d) dxi summed over half-periods
double oscillatory_cos_integral(const std::function<double(double)>& g,
                                double d, double lo, double hi) {
  const double half_period = kPi / d;
  double acc = 0.0;
  double a = lo;
  while (a < hi) {
    double b = std::min(a + half_period, hi);
    acc += quad::integrate([&](double x) { return g(x) * std::cos(x * d); },
                           a, b, 1e-8);
    a = b;
  }
  return acc;
}

}  // namespace

L2SpaceIncrement l2_space_increment(const FractionalIndex& beta, double t,
                                    double dx, const EvalPolicy& policy) {
  const double b = beta.beta;
  if (!(b > 0.0 && b < 1.0))
    throw std::domain_error("l2_space_increment: slow regime (0,1) only");
  if (!(t > 0.0)) throw std::domain_error("l2_space_increment: require t > 0");
  if (!(dx >= 0.0))
    throw std::domain_error("l2_space_increment: require dx >= 0");

  const double c_b2 = mittag_leffler_neg_bound_constant({b, 2.0});
  L2SpaceIncrement out{};
  out.bound = (4.0 * c_b2 / kPi) * std::pow(t, 1.0 - b) * dx;
  if (dx == 0.0) {
    out.value = 0.0;
    return out;
  }

  auto time_int = [&](double xi) {
    return squared_ml_time_integral(b, t, xi, policy);
  };

  // (2/pi) int_0^inf (1 - cos(xi dx)) T(xi) dxi.  T decays like
  // xi^{-2/b}, so the truncated tail is estimated from the measured value
  // at the cut and the domain is extended incrementally until it is
  // negligible.
  const double q = 2.0 / b;
  double xi_max = std::max(40.0 / dx, 8.0 / std::pow(t, b / 2.0));
  double plain = quad::integrate(time_int, 0.0, xi_max, 1e-8);
  double oscil = oscillatory_cos_integral(time_int, dx, 0.0, xi_max);
  double value = (2.0 / kPi) * (plain - oscil);
  for (int attempt = 0; attempt < 6; ++attempt) {
    double tail =
        (2.0 / kPi) * 2.0 * time_int(xi_max) * xi_max / (q - 1.0);
    if (tail <= 3e-3 * std::max(std::fabs(value), 1e-300)) break;
    double hi = 2.0 * xi_max;
    plain += quad::integrate(time_int, xi_max, hi, 1e-8);
    oscil += oscillatory_cos_integral(time_int, dx, xi_max, hi);
    value = (2.0 / kPi) * (plain - oscil);
    xi_max = hi;
  }
  out.value = value;
  return out;
}

L2TimeIncrement l2_time_increment(const FractionalIndex& beta, double s,
                                  double t, const EvalPolicy& policy) {
  const double b = beta.beta;
  if (!(b > 0.0 && b < 1.0))
    throw std::domain_error("l2_time_increment: slow regime (0,1) only");
  if (!(s > 0.0) || !(t >= s))
    throw std::domain_error("l2_time_increment: require 0 < s <= t");

  const double c_b2 = mittag_leffler_neg_bound_constant({b, 2.0});
  const double d = t - s;
  L2TimeIncrement out{};
  out.bound_overlap = 2.0 * c_b2 * std::pow(d, 1.0 - b / 2.0);
  out.bound_tail = 0.5 * c_b2 * std::pow(d, 1.0 - b / 2.0);
  if (d == 0.0) {
    out.value_overlap = 0.0;
    out.value_tail = 0.0;
    return out;
  }

  // tail piece: (1/pi) int_0^inf int_0^{t-s} E^2(-r^b xi^2) dr dxi
  auto tail_integrand = [&](double xi) {
    return squared_ml_time_integral(b, d, xi, policy);
  };
  // overlap piece: (1/pi) int_0^inf int_0^s (E(-(u+d)^b xi^2) -
  // E(-u^b xi^2))^2 du dxi
  auto overlap_integrand = [&](double xi) {
    const double xi2 = xi * xi;
    auto g = [&](double u) {
      double e1 =
          mittag_leffler({b, 1.0}, -std::pow(u + d, b) * xi2, policy);
      double e2 = mittag_leffler({b, 1.0}, -std::pow(u, b) * xi2, policy);
      double diff = e1 - e2;
      return diff * diff;
    };
    return quad::integrate(g, 0.0, s, 1e-9);
  };

  const double q = 2.0 / b;
  auto integrate_decaying = [&](const std::function<double(double)>& f,
                                double scale_T) {
    double xi_max = 12.0 / std::pow(scale_T, b / 2.0);
    double acc = quad::integrate(f, 0.0, xi_max, 1e-8);
    for (int attempt = 0; attempt < 8; ++attempt) {
      double tail = f(xi_max) * xi_max / (q - 1.0);
      if (tail <= 2.5e-3 * std::max(acc, 1e-300)) break;
      double hi = 2.0 * xi_max;
      acc += quad::integrate(f, xi_max, hi, 1e-8);
      xi_max = hi;
    }
    return acc / kPi;
  };

  out.value_tail = integrate_decaying(tail_integrand, d);
  out.value_overlap = integrate_decaying(overlap_integrand, d);
  return out;
}

}  // namespace tfsde
