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

#include <doctest.h>

#include <cmath>
#include <set>

#include "tfsde/kernel.hpp"
#include "tfsde/philox.hpp"
#include "tfsde/simulator.hpp"

using namespace tfsde;

TEST_SUITE_BEGIN("simulator");

TEST_CASE("philox determinism and keying") {
  auto a = Philox4x32::block({1, 2, 3, 4}, {5, 6});
  auto b = Philox4x32::block({1, 2, 3, 4}, {5, 6});
  CHECK(a == b);
  auto c = Philox4x32::block({1, 2, 3, 5}, {5, 6});
  CHECK(a != c);
  auto d = Philox4x32::block({1, 2, 3, 4}, {5, 7});
  CHECK(a != d);

  CHECK(keyed_normal(9, 1, 2, 3) == keyed_normal(9, 1, 2, 3));
  CHECK(keyed_normal(9, 1, 2, 3) != keyed_normal(10, 1, 2, 3));
}

TEST_CASE("philox normals look standard normal") {
  const int n = 200000;
  double s = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    double v = keyed_normal(2024, 0, i / 64, i % 64);
    s += v;
    s2 += v * v;
    s3 += v * v * v;
    s4 += v * v * v * v;
  }
  double mean = s / n, var = s2 / n - mean * mean;
  CHECK(std::fabs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::fabs(s3 / n) < 0.03);
  CHECK(s4 / n == doctest::Approx(3.0).epsilon(0.06));
}

TEST_CASE("rho function") {
  RhoFunction affine{2.0, 1.0};
  CHECK(affine(3.0) == doctest::Approx(7.0));
  RhoFunction table;
  table.table_u = {-1.0, 0.0, 1.0};
  table.table_value = {1.0, 0.0, 2.0};
  CHECK(table(0.5) == doctest::Approx(1.0));
  CHECK(table(2.0) == doctest::Approx(4.0));   // end-slope extrapolation
  CHECK(table(-2.0) == doctest::Approx(2.0));
  RhoFunction bad;
  bad.table_u = {0.0, 1.0};
  bad.table_value = {0.0};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("config validation") {
  SimConfig c;
  c.beta = FractionalIndex(0.5);
  c.x_half_width = 3.0;  // far too narrow for the slow heavy tails
  CHECK_THROWS_AS(c.validate(), std::domain_error);
  c.x_half_width = 10.0;
  CHECK_NOTHROW(c.validate());
  c.n_space = 511;
  CHECK_THROWS_AS(c.validate(), std::domain_error);
}

TEST_CASE("zero coupling reproduces the homogeneous solution exactly") {
  SimConfig c;
  c.beta = FractionalIndex(0.5);
  c.mu = InitialMeasure::dirac(0.0);
  c.rho.lambda = 0.0;
  c.replicates = 2;
  c.n_time = 16;
  c.n_space = 64;
  c.x_half_width = 30.0;
  c.t_probes = {0.25, 0.5};
  c.x_probes = {0.0, 1.0};
  auto r = simulate(c);
  for (std::size_t ti = 0; ti < r.t_probes.size(); ++ti)
    for (std::size_t xi = 0; xi < r.x_probes.size(); ++xi) {
      double g = green(c.beta, GreenKind::Primary, r.t_probes[ti],
                       r.x_probes[xi]);
      CHECK(r.probe_values[0][ti][xi] == doctest::Approx(g).epsilon(1e-14));
      CHECK(r.probe_values[1][ti][xi] == r.probe_values[0][ti][xi]);
    }
}

TEST_CASE("determinism across runs and thread counts") {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.replicates = 6;
  c.n_time = 24;
  c.n_space = 64;
  c.x_half_width = 8.0;
  c.seed = 99;
  auto r1 = simulate(c);
  c.n_threads = 3;
  auto r2 = simulate(c);
  for (std::size_t a = 0; a < r1.probe_values.size(); ++a)
    for (std::size_t b = 0; b < r1.probe_values[a].size(); ++b)
      for (std::size_t d = 0; d < r1.probe_values[a][b].size(); ++d)
        CHECK(r1.probe_values[a][b][d] == r2.probe_values[a][b][d]);
}

TEST_CASE("martingale property of the noise term") {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.mu = InitialMeasure::lebesgue(1.0);
  c.rho.lambda = 1.0;
  c.replicates = 300;
  c.n_time = 64;
  c.n_space = 128;
  c.x_half_width = 6.0;
  c.seed = 5;
  c.t_probes = {0.1, 0.25, 0.5};
  c.x_probes = {0.0};
  auto r = simulate(c);
  auto m1 = estimate_moments(r, 1);
  for (std::size_t ti = 0; ti < r.t_probes.size(); ++ti)
    CHECK(std::fabs(m1.mean_power[ti][0] - 1.0) <= 3.0 * m1.std_err[ti][0]);
}

TEST_CASE("second moment tracks the exact heat kernel") {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.mu = InitialMeasure::lebesgue(1.0);
  c.rho.lambda = 1.0;
  c.t_max = 0.5;
  c.n_time = 128;
  c.n_space = 256;
  c.x_half_width = 5.0;
  c.replicates = 400;
  c.seed = 7;
  c.t_probes = {0.25, 0.5};
  c.x_probes = {0.0};
  auto r = simulate(c);
  auto m2 = estimate_moments(r, 2);
  for (std::size_t ti = 0; ti < r.t_probes.size(); ++ti) {
    double target = 1.0 + kernel_heat_exact_time_mass(2.0, 1.0, r.t_probes[ti]);
    double allow = 3.0 * m2.std_err[ti][0] + 0.05 * target;
    CHECK(std::fabs(m2.mean_power[ti][0] - target) <= allow);
  }
}

TEST_CASE("power-mean monotonicity of the estimates") {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.replicates = 50;
  c.n_time = 32;
  c.n_space = 64;
  c.x_half_width = 8.0;
  c.seed = 3;
  auto r = simulate(c);
  auto m1 = estimate_moments(r, 1);
  auto m2 = estimate_moments(r, 2);
  auto m4 = estimate_moments(r, 4);
  for (std::size_t ti = 0; ti < r.t_probes.size(); ++ti) {
    double a = m1.mean_power[ti][0];
    double b = std::sqrt(m2.mean_power[ti][0]);
    double d = std::pow(m4.mean_power[ti][0], 0.25);
    CHECK(a <= b * (1 + 1e-12));
    CHECK(b <= d * (1 + 1e-12));
  }
}

TEST_CASE("moment estimation guards") {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.replicates = 1;
  c.n_time = 8;
  c.n_space = 32;
  c.x_half_width = 8.0;
  auto r = simulate(c);
  CHECK_THROWS_AS(estimate_moments(r, 2), std::domain_error);
}

TEST_CASE("lyapunov slope on a synthetic exponential") {
  MomentEstimate est;
  est.t_grid = {1.0, 2.0, 3.0, 4.0};
  est.x_probe = {0.0};
  est.p = 2;
  est.replicates = 100;
  for (double t : est.t_grid) {
    est.mean_power.push_back({std::exp(3.0 * t)});
    est.std_err.push_back({0.01 * std::exp(3.0 * t)});
  }
  auto s = estimate_lyapunov(est, {1.0, 4.0});
  CHECK(s.slope == doctest::Approx(3.0).epsilon(1e-10));
  CHECK_THROWS_AS(estimate_lyapunov(est, {5.0, 6.0}), std::domain_error);
}

TEST_CASE("flat data with zero coupling has zero increments") {
  SimConfig c;
  c.beta = FractionalIndex(0.5);
  c.mu = InitialMeasure::lebesgue(1.0);
  c.rho.lambda = 0.0;
  c.replicates = 3;
  c.n_time = 32;
  c.n_space = 128;
  c.x_half_width = 10.0;
  c.record_increments = true;
  auto r = simulate(c);
  for (const auto& rep : r.space_increments)
    for (double v : rep) CHECK(v == 0.0);
  for (const auto& rep : r.time_increments)
    for (double v : rep) CHECK(v == 0.0);
  CHECK_THROWS_AS(empirical_increment_scaling(SimResult{}, IncrementDirection::Time),
                  std::domain_error);
}

TEST_CASE("divergence detection") {
  SimConfig c;
  c.beta = FractionalIndex(1.0);
  c.mu = InitialMeasure::lebesgue(1e11);
  c.rho.lambda = 40.0;
  c.replicates = 1;
  c.n_time = 16;
  c.n_space = 64;
  c.x_half_width = 8.0;
  CHECK_THROWS_AS(simulate(c), divergence_error);
}

TEST_SUITE_END();
