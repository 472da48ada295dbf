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

#include <utility>

#include "tfsde/errors.hpp"
#include "tfsde/policy.hpp"

namespace tfsde {

// Parameters of the two-parameter Mittag-Leffler function
//   E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta),  alpha > 0.
struct MLParams {
  double alpha;
  double beta;

  void validate() const;
};

// Parameters of the two-parameter Mainardi function of order lambda in [0,1):
//   M_{lambda,mu}(z) = sum_n (-z)^n / (n! Gamma(mu - (n+1) lambda)),
// the Wright function W_{-lambda,mu-lambda}(-z).
struct MainardiParams {
  double lambda;
  double mu;

  void validate() const;
};

// 1/Gamma(x), returning exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

// E_{alpha,beta}(z) for real z.  Power series below the switch scale,
// large-argument expansion (algebraic terms plus the exponential/oscillatory
// leading terms where they exist) above it.  Throws accuracy_error when the
// series does not settle within policy.series_max_terms, and for alpha > 2
// with z far below the series range, where no expansion is implemented.
double mittag_leffler(const MLParams& params, double z,
                      const EvalPolicy& policy = {});

// Bracket for E_{alpha,beta}(-x^alpha) when 0 < alpha < 1 and beta >= alpha:
// returns (0, C/(1+x^alpha)) where C = sup_{x>=0} (1+x^alpha) E(-x^alpha) is
// located once per (alpha,beta) by a grid search and cached.
std::pair<double, double> mittag_leffler_neg_bound(const MLParams& params,
                                                   double x);

// The constant C_{alpha,beta} behind mittag_leffler_neg_bound.
double mittag_leffler_neg_bound_constant(const MLParams& params);

// M_{lambda,mu}(z) for z >= 0.  The alternating series is used while its
// largest term stays within a factor 1e8 of the result; past that point the
// value is recovered from a Hankel-contour quadrature of the Wright integral
// representation, which is accurate for every (lambda, mu) and z.
double mainardi(const MainardiParams& params, double z,
                const EvalPolicy& policy = {});

// n-th derivative via d^n/dz^n M_{lambda,mu} = (-1)^n M_{lambda,mu-n lambda}.
double mainardi_derivative(const MainardiParams& params, double z, int n,
                           const EvalPolicy& policy = {});

// Exact moment integral_0^inf x^a M_{lambda,mu}(x) dx
//   = Gamma(a+1)/Gamma(lambda a + mu),  a > -1.
double mainardi_moment(const MainardiParams& params, double a);

// Cosine/Fourier pairing: integral_R e^{-i x xi} M_{lambda,mu}(|x|) dx
//   = 2 E_{2 lambda, mu}(-xi^2); this returns E_{2 lambda,mu}(-xi^2).
double mainardi_cosine_transform(const MainardiParams& params, double xi,
                                 const EvalPolicy& policy = {});

// Leading-order large-z envelope A0 * Y^{1/2-mu'} * exp(-Y) of M_{lambda,mu}
// with mu' = mu - lambda and Y = (1-lambda) lambda^{lambda/(1-lambda)}
// z^{1/(1-lambda)}.  Used for tail truncation, not for evaluation.
double mainardi_tail_estimate(const MainardiParams& params, double z);

namespace detail {

// log E_{alpha,beta}(z) for z >= 0, stable when E overflows.
double log_mittag_leffler_pos(double alpha, double beta, double z);

// E_{alpha,alpha}(z) * exp(-z^{1/alpha}) for z >= 0; stays bounded for
// large z, where E itself overflows.
double ml_scaled_same_param(double alpha, double z);

}  // namespace detail

}  // namespace tfsde
