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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tfsde/moments.hpp"

namespace tfsde {

// Coupling coefficient.  Affine rho(u) = lambda u + shift natively; a
// general Lipschitz rho can be supplied as a piecewise-linear table, which
// extrapolates with the end slopes.
struct RhoFunction {
  double lambda = 1.0;
  double shift = 0.0;
  std::vector<double> table_u;
  std::vector<double> table_value;

  void validate() const;
  double operator()(double u) const;
};

// Monte Carlo discretization of the mild equation
//   u(t,x) = J_0(t,x) + iint G(t-s, x-y) rho(u(s,y)) W(ds, dy)
// on a uniform grid, with left-point (Ito) coupling.  The Green factor of
// the newest time slice is evaluated at lag dt/2 so its squared mass stays
// integrable for beta < 1.
struct SimConfig {
  FractionalIndex beta{1.0};
  double t_max = 0.5;
  int n_time = 256;
  double x_half_width = 5.0;
  int n_space = 512;
  RhoFunction rho;
  InitialMeasure mu = InitialMeasure::lebesgue(1.0);
  std::optional<InitialMeasure> nu;
  int replicates = 100;
  std::uint64_t seed = 0;
  enum class Scheme { LeftPoint };
  Scheme scheme = Scheme::LeftPoint;

  std::vector<double> t_probes{0.1, 0.25, 0.5};
  std::vector<double> x_probes{0.0};
  bool record_increments = false;
  std::vector<int> increment_lags{2, 4, 8, 16};
  int n_threads = 0;  // 0: hardware concurrency

  void validate() const;
};

struct MomentEstimate {
  std::vector<double> t_grid;
  std::vector<double> x_probe;
  int p = 2;
  std::vector<std::vector<double>> mean_power;  // [t][x]
  std::vector<std::vector<double>> std_err;     // jackknife
  int replicates = 0;
};

struct SimResult {
  std::vector<double> t_probes;  // snapped to step times
  std::vector<double> x_probes;  // snapped to grid points
  // probe_values[replicate][time][space]
  std::vector<std::vector<std::vector<double>>> probe_values;
  // per-replicate mean squared increments, [replicate][lag]
  std::vector<std::vector<double>> time_increments;
  std::vector<std::vector<double>> space_increments;
  std::vector<int> increment_lags;
  double dt = 0.0;
  double dx = 0.0;
};

enum class IncrementDirection { Time, Space };

struct SlopeEstimate {
  double slope;
  double ci;  // 1.96 * standard error
};

SimResult simulate(const SimConfig& config);

MomentEstimate estimate_moments(const SimResult& result, int p);

// Least-squares slope of log(mean_power) against t over the window,
// weighted by the propagated standard errors.
SlopeEstimate estimate_lyapunov(const MomentEstimate& estimate,
                                std::pair<double, double> window,
                                int x_index = 0);

// Regression of log E[(u(.+lag) - u(.))^2] against log(lag); the targets for
// slow diffusions with bounded density data are 2*(2-beta)/4 in time and
// 2*(1/2) in space.
SlopeEstimate empirical_increment_scaling(const SimResult& result,
                                          IncrementDirection direction);

}  // namespace tfsde
