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

#include <optional>
#include <vector>

#include "tfsde/green.hpp"

namespace tfsde {

// Signed measure as atoms + piecewise-constant density + a multiple of
// Lebesgue measure.  Every such measure is admissible initial data: its
// convolution with the stretched-exponential weight is finite everywhere.
struct InitialMeasure {
  struct Atom {
    double location;
    double mass;
  };
  std::vector<Atom> atoms;
  std::vector<double> density_breakpoints;  // strictly increasing
  std::vector<double> density_values;       // one per interval
  double lebesgue_scale = 0.0;

  void validate() const;
  bool is_pure_lebesgue() const;
  double density_at(double y) const;  // piecewise part only
  static InitialMeasure lebesgue(double c);
  static InitialMeasure dirac(double location, double mass = 1.0);
};

// Growth envelopes of the coupling coefficient rho:
//   |rho(u)|^2 <= lip_upper^2 (vip_upper^2 + u^2)    always assumed,
//   |rho(u)|^2 >= lip_lower^2 (vip_lower^2 + u^2)    when lip_lower > 0.
struct RhoSpec {
  double lip_upper;
  double vip_upper = 0.0;
  double lip_lower = 0.0;
  double vip_lower = 0.0;

  void validate() const;
};

struct HolderExponents {
  enum class Regime { Interior, GlobalWithHolderData };
  double time_exp;
  double space_exp;
  Regime regime;
};

struct LyapunovBounds {
  double upper;
  std::optional<double> lower;
};

// exp(-(eta/2) |x|^{2/(2-beta)}), the admissibility weight.
double f_eta(const FractionalIndex& beta, double eta, double x);

// Homogeneous solution J_0(t,x): (mu * G)(x) for the slow regime,
// (nu * G)(x) + (mu * G^*)(x) for the fast regime (nu required there).
// beta = 2 is supported for measures without atoms in the G^* slot.
double j0(const FractionalIndex& beta, const InitialMeasure& mu,
          const InitialMeasure* nu, double t, double x,
          const EvalPolicy& policy = {});

// Certified upper bound on ||u(t,x)||_p^2 for even p >= 2: the homogeneous
// square plus the space-time convolution of [vip^2 + (1 or 2) J_0^2] with
// the closed-form kernel bound at coupling lambda = lip (p = 2) or
// 4 sqrt(p) lip (p > 2).
double moment_upper(const FractionalIndex& beta, int p, const RhoSpec& rho,
                    const InitialMeasure& mu, const InitialMeasure* nu,
                    double t, double x, const EvalPolicy& policy = {});

// Certified lower bound on the second moment (slow regime, lip_lower > 0).
double second_moment_lower(const FractionalIndex& beta, const RhoSpec& rho,
                           const InitialMeasure& mu, double t, double x,
                           const EvalPolicy& policy = {});

// Moment Lyapunov exponent bounds for spatially homogeneous data:
//   slow:  upper = (1/2)[2^4 L^2 HatC Psi Gamma(1-b/2)]^{2/(2-b)}
//                  p^{(4-b)/(2-b)},
//          lower = (p/2)(2^{-1/2} l^2 LowerPsi Gamma(1-b/2))^{2/(2-b)},
//   fast:  upper = (1/2)[2^{9/2} L^2 Psi Gamma(3-b/2)]^{2/(6-b)}
//                  p^{(8-b)/(6-b)},  no lower bound.
// The endpoints b = 1, 2 are rejected; there the p-exponents reduce to the
// classical heat (p^3) and wave (p^{3/2}) rates.
LyapunovBounds lyapunov_bounds(const FractionalIndex& beta, int p,
                               const RhoSpec& rho);

// Sample-path Holder exponents for the slow regime: ((2-beta)/4, 1/2) for
// bounded density data; the alpha-Holder variant additionally caps them at
// (alpha beta/2, alpha beta) and extends the range down to t = 0.
HolderExponents holder_exponents(const FractionalIndex& beta,
                                 std::optional<double> data_alpha = {});

}  // namespace tfsde
