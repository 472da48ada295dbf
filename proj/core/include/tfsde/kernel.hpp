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

#pragma once

#include <functional>
#include <vector>

#include "tfsde/green.hpp"

namespace tfsde {

enum class ReferenceKernelKind { GaussianG, PoissonP, ExponentialE, LowerGauss };

// One of the nonnegative unit-mass reference kernels:
//   GaussianG     (4 pi t)^{-d/2} exp(-|x|^2 / 4t)
//   PoissonP      c_d t / (t^2 + |x|^2)^{(d+1)/2}
//   ExponentialE  (1/2) t^{-beta/2} exp(-|x| / t^{beta/2})      (d = 1)
//   LowerGauss    (4 pi t^beta)^{-1/2} exp(-x^2 / 4 t^beta)     (d = 1)
struct ReferenceKernel {
  ReferenceKernelKind kind;
  FractionalIndex beta{1.0};  // used by ExponentialE / LowerGauss scales
  int dimension = 1;
};

double reference_kernel(const ReferenceKernel& rk, double t, double x);

// The composite reference kernel: exponential for beta < 1, Gaussian in t^beta
// for 1 <= beta < 2 (the tie at beta = 1 goes to the Gaussian branch).
double reference_kernel_dispatch(const FractionalIndex& beta, double t,
                                 double x);

// Constants of the self-convolution framework for a squared field:
// G(t,x)^2 <= (c0 / t^sigma) Gref(t,x) plus the sub-semigroup constant c1.
struct KernelConstants {
  double c0;
  double c1;
  double sigma;

  double gamma() const;  // c0 * c1 * Gamma(1 - sigma)
};

// 2^{beta/2} / (2^{beta/2} - 1) * exp(-2^{-beta/2}), beta > 0.  Decreasing.
double hat_c(double beta);

// hat_c(beta) for beta < 1; 2^{(beta-1)/2} for 1 <= beta < 2.
double tilde_c(double beta);

// Upper constant sup_x G_beta(1,x)^2 / Gref_beta(1,x) for 0 < beta < 2, or
// the lower constant inf_x G_beta(1,x)^2 / LowerGauss(1,x) for 0 < beta < 1.
// Grid search with golden-section refinement; the tail is certified by the
// stretched-exponential envelope.  Cached per (beta, lower).
double psi(const FractionalIndex& beta, bool lower);

// B_n(t) = c0^n c1^{n-1} Gamma(1-sigma)^n / Gamma(n(1-sigma)) t^{n(1-sigma)-1}
double bn(int n, double t, const KernelConstants& kc);

struct BoundReport {
  enum class Regime { Upper, Lower };
  double value_bound;  // the Mittag-Leffler closed form (the tighter one)
  double mittag_form;
  double exp_form;
  Regime regime;
};

// Closed-form upper bound on the moment kernel K(t,x;lambda) built on
// G_beta, with sigma = beta/2 + 2(1 - ceil(beta)) and
// gamma = lambda^2 Psi_beta TildeC_beta Gamma(1-sigma).
BoundReport kernel_upper(const FractionalIndex& beta, double lambda, double t,
                         double x, const EvalPolicy& policy = {});

// Closed-form lower bound for the slow regime, sigma = beta/2 - 1 and
// gamma = 2^{-1/2} lambda^2 LowerPsi_beta Gamma(1-sigma).  The exponential
// form C * LowerGauss * exp(Upsilon t) uses the grid infimum over
// t in [1e-6, 1e3] (plus the t -> infinity limit); see NOTES in the
// implementation for the small-t behaviour.
BoundReport kernel_lower(const FractionalIndex& beta, double lambda, double t,
                         double x, const EvalPolicy& policy = {});

// Exact kernel of the heat case with diffusion parameter nu and affine
// coupling scale lambda:
//   K(t,x) = p_{nu/2}(t,x) (gamma/sqrt(t)) E_{1/2,1/2}(gamma sqrt(t)),
//   gamma = lambda^2 (4 nu)^{-1/2}.
double kernel_heat_exact(double nu, double lambda, double t, double x);

// Time integral int_0^t dy-mass of kernel_heat_exact:
//   (1 * K)(t) = E_{1/2,1}(gamma sqrt(t)) - 1.
double kernel_heat_exact_time_mass(double nu, double lambda, double t);

// Exact kernel of the squared-heat-operator example:
//   (3 sqrt2/16) t^{3/2} (2 pi t)^{-1/2} e^{-x^2/2t}
//       * E_{5/2,5/2}((3 sqrt2/16) t^{5/2}).
double kernel_biharmonic_exact(double t, double x);

// Quadrature specification for the L_n series.  `constants` describe the
// scaled field lambda*G (c0 absorbs lambda^2) and drive the B_n tail
// estimate together with `reference`.
struct KernelSeriesGrid {
  int time_nodes = 96;
  int frequency_nodes = 512;
  int row_samples = 2048;
  double half_width = 0.0;  // 0 = automatic from the field's tails
  double x_max_hint = 2.0;
  KernelConstants constants{1.0, 1.0, 0.5};
  std::function<double(double, double)> reference;
};

struct KernelSeriesResult {
  std::vector<double> ln_values;     // L_0..L_nmax at (t, x)
  std::vector<double> partial_sums;  // cumulative sums of the above
  double tail_estimate;              // B_{nmax+2}(t) * reference(t, x)
};

// Discrete space-time self-convolution of L_0 = lambda^2 G^2 on a
// frequency-space grid with power-graded time nodes.  `green_eval` is any
// even-in-x field (t, x) -> G(t, x).
KernelSeriesResult kernel_series_numeric(
    const std::function<double(double, double)>& green_eval, double lambda,
    double t, double x, int n_max, const KernelSeriesGrid& grid);

// Evaluator form for repeated x queries at fixed t.
class KernelSeriesEvaluator {
 public:
  KernelSeriesEvaluator(std::function<double(double, double)> green_eval,
                        double lambda, double t, int n_max,
                        KernelSeriesGrid grid);
  ~KernelSeriesEvaluator();
  KernelSeriesEvaluator(const KernelSeriesEvaluator&) = delete;
  KernelSeriesEvaluator& operator=(const KernelSeriesEvaluator&) = delete;

  KernelSeriesResult evaluate(double x) const;

 private:
  struct Impl;
  Impl* impl_;
};

// Quadrature of the sub-semigroup inequality: returns
//   lhs = int Gref(t, x-y) Gref(s, y) dy  and  rhs = C1 Gref(t+s, x),
// with C1 = 1 (Gaussian, Poisson), hat_c(beta) (ExponentialE) or
// 2^{(beta-2)/4} (LowerGauss; there the inequality direction is lhs >= rhs).
std::pair<double, double> subsemigroup_check(const ReferenceKernel& rk,
                                             double t, double s, double x);

}  // namespace tfsde
