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

#include "tfsde/policy.hpp"
#include "tfsde/special_functions.hpp"

namespace tfsde {

// Validated fractional index beta in (0, 2].  slow <=> beta <= 1, which is
// also when ceil(beta) = 1.
struct FractionalIndex {
  double beta;
  int ceil_beta;
  bool slow;

  explicit FractionalIndex(double b);
};

// Primary selects G_beta (fundamental solution with the Dirac assigned to
// u(0,.) for beta <= 1 and to du/dt(0,.) for beta > 1); Star selects
// G_beta^*, which replaces ceil(beta) by 1 throughout.
enum class GreenKind { Primary, Star };

// ceil(beta) as used by the requested kind.
int effective_ceil(const FractionalIndex& beta, GreenKind kind);

// Parameters of the tail envelope G(1,x) ~ A |x|^a exp(-b |x|^c).
struct AsymptoticParams {
  double A;
  double a;
  double b;
  double c;
};

// Pointwise Green function value
//   G(t,x) = (t^{ceil-1-beta/2} / 2) M_{beta/2,ceil}(|x| / t^{beta/2}),
// with the beta = 2 limits: the half indicator (Primary) and a rejection for
// Star, whose beta = 2 limit is a pair of Dirac masses.
double green(const FractionalIndex& beta, GreenKind kind, double t, double x,
             const EvalPolicy& policy = {});

// integral_R G(t,x) dx, exactly t^{ceil-1} (Primary) or 1 (Star).
double green_total_mass(const FractionalIndex& beta, GreenKind kind, double t);

// integral_R |x|^a G(t,x) dx
//   = Gamma(a+1)/Gamma(a beta/2 + ceil) * t^{a beta/2 + ceil - 1},  a > -1.
double green_moment(const FractionalIndex& beta, GreenKind kind, double a,
                    double t);

// Fourier transform: t^{ceil-1} E_{beta,ceil}(-t^beta xi^2).
double green_fourier(const FractionalIndex& beta, GreenKind kind, double t,
                     double xi, const EvalPolicy& policy = {});

// Laplace transform of x -> G(1,x) on the positive axis:
//   (1/2) E_{beta/2,ceil}(-z), entire in z.
double green_laplace(const FractionalIndex& beta, GreenKind kind, double z,
                     const EvalPolicy& policy = {});

// n-th spatial derivative away from x = 0.  Signed zeros select the
// one-sided limit at the origin (+0 from the right, -0 from the left); the
// function is continuous but in general not differentiable across 0.
double green_derivative(const FractionalIndex& beta, GreenKind kind, double t,
                        double x, int n, const EvalPolicy& policy = {});

// Closed-form (A, a, b, c) of the tail envelope for beta in (0, 2).
AsymptoticParams asymptotic_params(const FractionalIndex& beta,
                                   GreenKind kind);

// Smallest X such that the certified envelope of x -> G(t,x), inflated by a
// safety factor of 10, stays below abs_tol for |x| >= X.
double green_tail_cut(const FractionalIndex& beta, GreenKind kind, double t,
                      double abs_tol);

struct L2SpaceIncrement {
  double value;
  double bound;
};

struct L2TimeIncrement {
  double value_overlap;
  double value_tail;
  double bound_overlap;
  double bound_tail;
};

// Squared L^2(dr dz) norm of G(t-r, x-z) - G(t-r, y-z) with |x-y| = dx,
// computed through the Fourier transform (Plancherel), together with the
// certified upper bound (4 C_{beta,2} / pi) t^{1-beta} dx.  Slow regime only.
L2SpaceIncrement l2_space_increment(const FractionalIndex& beta, double t,
                                    double dx, const EvalPolicy& policy = {});

// Squared L^2 norms of the two time-increment pieces over [0,s] and [s,t],
// with bounds 2 C_{beta,2} (t-s)^{1-beta/2} and (C_{beta,2}/2)
// (t-s)^{1-beta/2}.  Slow regime only.
L2TimeIncrement l2_time_increment(const FractionalIndex& beta, double s,
                                  double t, const EvalPolicy& policy = {});

}  // namespace tfsde
