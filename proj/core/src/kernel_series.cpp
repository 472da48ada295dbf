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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tfsde/kernel.hpp"

namespace tfsde {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

// The series is built in frequency space: the spatial convolution of each
// L_n with L_0 diagonalizes, leaving a one-dimensional time convolution per
// frequency.  Time dependence is stored through smooth factors
//   L^_0(r, xi) = r^{-sigma} a0(r, xi),
//   L^_n(s, xi) = s^{(n+1)(1-sigma)-1} b_n(s, xi),
// (a Beta-integral structure) so the endpoint powers are integrated
// analytically by substitution while a0, b_n are interpolated linearly on a
// power-graded time grid.
struct KernelSeriesEvaluator::Impl {
  double t;
  double lambda;
  int n_max;
  KernelSeriesGrid grid;

  int m_nodes;    // time nodes
  int nh;         // frequency nodes (l = 0..nh)
  double sigma;
  double q;       // grading exponent: u = (s/t)^q
  double half_width;
  double dxi;

  std::vector<double> s_nodes;            // size m_nodes + 1
  std::vector<std::vector<double>> a0;    // [m][l], m = 0..m_nodes
  std::vector<std::vector<double>> khat;  // [n][l], spectra at time t

  std::function<double(double, double)> field;

  struct Lerp {
    int idx;
    double frac;
  };

  Lerp locate(double s) const {
    double u = std::pow(std::max(s, 0.0) / t, q);
    double pos = std::min(u, 1.0) * m_nodes;
    int i = std::min(static_cast<int>(pos), m_nodes - 1);
    return {i, pos - i};
  }

  static double lerp(const std::vector<std::vector<double>>& tab, Lerp p,
                     int l) {
    return tab[p.idx][l] * (1.0 - p.frac) + tab[p.idx + 1][l] * p.frac;
  }

  // trapezoid cosine transform of one sampled row, evaluated on the whole
  // frequency grid with an angle recurrence
  void row_transform(const std::vector<double>& g2, double dx,
                     std::vector<double>& out) const {
    const int n = static_cast<int>(g2.size()) - 1;
    for (int l = 0; l <= nh; ++l) {
      const double phi = l * dxi * dx;
      const double cphi = std::cos(phi), sphi = std::sin(phi);
      double c = 1.0, s = 0.0;  // cos(j phi), sin(j phi)
      double acc = 0.5 * g2[0];
      for (int j = 1; j < n; ++j) {
        double cn = c * cphi - s * sphi;
        s = s * cphi + c * sphi;
        c = cn;
        acc += g2[j] * c;
      }
      double cn = c * cphi - s * sphi;
      acc += 0.5 * g2[n] * cn;
      out[l] = 2.0 * dx * acc;
    }
  }

  double field_extent(double s) const {
    double peak = std::fabs(field(s, 0.0));
    if (peak == 0.0) return half_width;
    double w = 1e-3;
    int consecutive = 0;
    while (w < 1e6) {
      if (std::fabs(field(s, w)) <= 1e-9 * peak) {
        if (++consecutive >= 2) break;
      } else {
        consecutive = 0;
      }
      w *= 1.4;
    }
    return std::min(w, half_width);
  }

  void build() {
    m_nodes = std::max(grid.time_nodes, 8);
    nh = std::max(grid.frequency_nodes, 32);
    sigma = grid.constants.sigma;
    if (!(sigma < 1.0))
      throw std::domain_error("kernel_series: require sigma < 1");
    q = sigma > 0.0 ? 1.0 - sigma : 1.0;

    if (grid.half_width > 0.0) {
      half_width = grid.half_width;
    } else {
      half_width = 1e6;
      double ext = field_extent(t);
      half_width = 1.3 * ext + grid.x_max_hint;
    }
    dxi = kPi / half_width;

    s_nodes.assign(m_nodes + 1, 0.0);
    for (int m = 0; m <= m_nodes; ++m)
      s_nodes[m] = t * std::pow(static_cast<double>(m) / m_nodes, 1.0 / q);

    // a0 rows: each time node gets its own spatial resolution so the
    // near-delta early rows stay resolved
    a0.assign(m_nodes + 1, std::vector<double>(nh + 1, 0.0));
    const int n_row = std::max(grid.row_samples, 2 * nh);
    std::vector<double> g2(n_row + 1);
    std::vector<double> row(nh + 1);
    auto fill_row = [&](double s, std::vector<double>& dest) {
      double ext = std::min(field_extent(s), half_width);
      double dx = ext / n_row;
      for (int j = 0; j <= n_row; ++j) {
        double v = field(s, j * dx);
        g2[j] = lambda * lambda * v * v;
      }
      row_transform(g2, dx, dest);
      double ssig = std::pow(s, sigma);
      for (int l = 0; l <= nh; ++l) dest[l] *= ssig;
    };
    for (int m = 1; m <= m_nodes; ++m) fill_row(s_nodes[m], a0[m]);
    // endpoint limit by short extrapolation from a pilot row
    {
      std::vector<double> pilot(nh + 1);
      double sp = 0.25 * s_nodes[1];
      fill_row(sp, pilot);
      double up = std::pow(sp / t, q) * m_nodes;       // in (0, 1)
      double u1 = 1.0;
      for (int l = 0; l <= nh; ++l) {
        double slope = (a0[1][l] - pilot[l]) / (u1 - up);
        a0[0][l] = pilot[l] - slope * up;
      }
    }

    khat.assign(n_max + 1, std::vector<double>(nh + 1, 0.0));
    for (int l = 0; l <= nh; ++l)
      khat[0][l] = std::pow(t, -sigma) * a0[m_nodes][l];

    // level-by-level time convolutions
    std::vector<std::vector<double>> bn_tab = a0;  // b_0 = a0
    std::vector<std::vector<double>> next(m_nodes + 1,
                                          std::vector<double>(nh + 1, 0.0));
    const int nq = 32;  // Simpson panels per half
    struct Node {
      double w;
      Lerp at_a0;
      Lerp at_bn;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * (2 * nq + 1));

    for (int level = 0; level < n_max; ++level) {
      const double rho = (level + 1) * (1.0 - sigma);
      for (int m = 1; m <= m_nodes; ++m) {
        const double s = s_nodes[m];
        const double sh = 0.5 * s;
        nodes.clear();

        // left half: r in [0, s/2], weight r^{-sigma} (substituted away when
        // singular), smooth partner (s-r)^{rho-1} b_n(s-r)
        {
          auto add_left = [&](double r, double w) {
            double p = std::pow(s - r, rho - 1.0);
            nodes.push_back({w * p, locate(r), locate(s - r)});
          };
          if (sigma > 0.0) {
            double vmax = std::pow(sh, 1.0 - sigma);
            double h = vmax / (2 * nq);
            for (int k = 0; k <= 2 * nq; ++k) {
              double v = k * h;
              double r = std::pow(v, 1.0 / (1.0 - sigma));
              double sw = (k == 0 || k == 2 * nq) ? 1.0 : (k % 2 ? 4.0 : 2.0);
              add_left(r, sw * h / 3.0 / (1.0 - sigma));
            }
          } else {
            double h = sh / (2 * nq);
            for (int k = 0; k <= 2 * nq; ++k) {
              double r = k * h;
              double sw = (k == 0 || k == 2 * nq) ? 1.0 : (k % 2 ? 4.0 : 2.0);
              add_left(r, sw * h / 3.0 * std::pow(r, -sigma));
            }
          }
        }
        const std::size_t n_left = nodes.size();

        // right half: tau = s - r in [0, s/2], weight tau^{rho-1}
        // (substituted away when rho < 1), partner (s-tau)^{-sigma} a0(s-tau)
        {
          auto add_right = [&](double tau, double w) {
            double p = std::pow(s - tau, -sigma);
            nodes.push_back({w * p, locate(s - tau), locate(tau)});
          };
          if (rho < 1.0) {
            double umax = std::pow(sh, rho);
            double h = umax / (2 * nq);
            for (int k = 0; k <= 2 * nq; ++k) {
              double u = k * h;
              double tau = std::pow(u, 1.0 / rho);
              double sw = (k == 0 || k == 2 * nq) ? 1.0 : (k % 2 ? 4.0 : 2.0);
              add_right(tau, sw * h / 3.0 / rho);
            }
          } else {
            double h = sh / (2 * nq);
            for (int k = 0; k <= 2 * nq; ++k) {
              double tau = k * h;
              double sw = (k == 0 || k == 2 * nq) ? 1.0 : (k % 2 ? 4.0 : 2.0);
              add_right(tau, sw * h / 3.0 * std::pow(tau, rho - 1.0));
            }
          }
        }

        const double s_scale = std::pow(s, 1.0 - (level + 2) * (1.0 - sigma));
        for (int l = 0; l <= nh; ++l) {
          double acc = 0.0;
          for (std::size_t k = 0; k < n_left; ++k) {
            const Node& nd = nodes[k];
            acc += nd.w * lerp(a0, nd.at_a0, l) * lerp(bn_tab, nd.at_bn, l);
          }
          for (std::size_t k = n_left; k < nodes.size(); ++k) {
            const Node& nd = nodes[k];
            acc += nd.w * lerp(a0, nd.at_a0, l) * lerp(bn_tab, nd.at_bn, l);
          }
          if (m == m_nodes) khat[level + 1][l] = acc;
          next[m][l] = acc * s_scale;
        }
      }
      for (int l = 0; l <= nh; ++l)
        next[0][l] = 2.0 * next[1][l] - next[2][l];
      std::swap(bn_tab, next);
    }
  }

  KernelSeriesResult evaluate(double x) const {
    KernelSeriesResult out;
    out.ln_values.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      const double phi = dxi * x;
      const double cphi = std::cos(phi), sphi = std::sin(phi);
      double c = 1.0, sn = 0.0;
      double acc = 0.5 * khat[n][0];
      for (int l = 1; l < nh; ++l) {
        double cn = c * cphi - sn * sphi;
        sn = sn * cphi + c * sphi;
        c = cn;
        acc += khat[n][l] * c;
      }
      double cn = c * cphi - sn * sphi;
      acc += 0.5 * khat[n][nh] * cn;
      out.ln_values[n] = acc * dxi / kPi;
    }
    out.partial_sums.resize(n_max + 1);
    double run = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      run += out.ln_values[n];
      out.partial_sums[n] = run;
    }
    out.tail_estimate = bn(n_max + 2, t, grid.constants) *
                        (grid.reference ? grid.reference(t, x) : 1.0);
    return out;
  }
};

KernelSeriesEvaluator::KernelSeriesEvaluator(
    std::function<double(double, double)> green_eval, double lambda, double t,
    int n_max, KernelSeriesGrid grid)
    : impl_(new Impl) {
  if (!(t > 0.0)) throw std::domain_error("kernel_series: require t > 0");
  if (n_max < 1) throw std::domain_error("kernel_series: require n_max >= 1");
  impl_->t = t;
  impl_->lambda = lambda;
  impl_->n_max = n_max;
  impl_->grid = std::move(grid);
  impl_->field = std::move(green_eval);
  impl_->build();
}

KernelSeriesEvaluator::~KernelSeriesEvaluator() { delete impl_; }

KernelSeriesResult KernelSeriesEvaluator::evaluate(double x) const {
  return impl_->evaluate(x);
}

KernelSeriesResult kernel_series_numeric(
    const std::function<double(double, double)>& green_eval, double lambda,
    double t, double x, int n_max, const KernelSeriesGrid& grid) {
  KernelSeriesEvaluator ev(green_eval, lambda, t, n_max, grid);
  return ev.evaluate(x);
}

}  // namespace tfsde
