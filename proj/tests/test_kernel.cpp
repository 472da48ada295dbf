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

#include "tfsde/kernel.hpp"
#include "tfsde/quadrature.hpp"
#include "tfsde/verification.hpp"

using namespace tfsde;

TEST_SUITE_BEGIN("kernel");

TEST_CASE("reference kernels") {
  FractionalIndex bh(0.5);
  CHECK(reference_kernel({ReferenceKernelKind::ExponentialE, bh, 1}, 1.0,
                         0.0) == doctest::Approx(0.5));
  CHECK(reference_kernel({ReferenceKernelKind::GaussianG, bh, 1}, 1.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)));
  double mass = quad::integrate(
      [&](double x) {
        return reference_kernel({ReferenceKernelKind::PoissonP, bh, 1}, 1.0,
                                x);
      },
      -2e4, 2e4, 1e-10);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  // scaling identities hold exactly
  for (double t : {0.3, 2.5}) {
    for (double x : {0.4, 1.7}) {
      CHECK(reference_kernel({ReferenceKernelKind::GaussianG, bh, 1}, t, x) ==
            doctest::Approx(
                std::pow(t, -0.5) *
                reference_kernel({ReferenceKernelKind::GaussianG, bh, 1}, 1.0,
                                 x / std::sqrt(t)))
                .epsilon(1e-14));
      CHECK(reference_kernel({ReferenceKernelKind::ExponentialE, bh, 1}, t,
                             x) ==
            doctest::Approx(
                std::pow(t, -0.25) *
                reference_kernel({ReferenceKernelKind::ExponentialE, bh, 1},
                                 1.0, x * std::pow(t, -0.25)))
                .epsilon(1e-14));
    }
  }
}

TEST_CASE("hat and tilde constants") {
  CHECK(hat_c(2.0) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-15));
  CHECK(hat_c(2.0) == doctest::Approx(1.21306).epsilon(1e-5));
  CHECK(hat_c(1.0) == doctest::Approx(1.68344).epsilon(1e-5));
  CHECK(tilde_c(1.0) == doctest::Approx(1.0));
  CHECK(tilde_c(1.5) == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(tilde_c(0.5) == doctest::Approx(hat_c(0.5)));
  double prev = hat_c(0.1);
  for (double b = 0.2; b <= 2.0; b += 0.1) {
    CHECK(hat_c(b) < prev);
    prev = hat_c(b);
  }
}

TEST_CASE("psi constants") {
  FractionalIndex b1(1.0);
  CHECK(psi(b1, false) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-8));
  // the sup dominates the centre ratio
  for (double b : {0.5, 1.5}) {
    FractionalIndex fb(b);
    double g0 = green(fb, GreenKind::Primary, 1.0, 0.0);
    double r0 = g0 * g0 / reference_kernel_dispatch(fb, 1.0, 0.0);
    CHECK(psi(fb, false) >= r0 * (1.0 - 1e-12));
  }
  CHECK(psi(FractionalIndex(0.5), true) > 0.0);
  CHECK_THROWS_AS(psi(FractionalIndex(1.5), true), std::domain_error);
}

TEST_CASE("bn series") {
  KernelConstants kc{0.7, 1.2, 0.3};
  CHECK(bn(1, 2.0, kc) ==
        doctest::Approx(0.7 * std::pow(2.0, -0.3)).epsilon(1e-14));
  // sum_n B_n(t) = gamma t^{-sigma} E_{1-s,1-s}(gamma t^{1-s})
  double gamma = kc.gamma();
  double t = 1.3;
  double sum = 0.0;
  for (int n = 1; n <= 200; ++n) sum += bn(n, t, kc);
  double closed = gamma * std::pow(t, -kc.sigma) *
                  mittag_leffler({0.7, 0.7}, gamma * std::pow(t, 0.7));
  CHECK(sum == doctest::Approx(closed).epsilon(1e-12));
  // ratio test decay
  CHECK(bn(40, t, kc) / bn(39, t, kc) < bn(6, t, kc) / bn(5, t, kc));
  CHECK(bn(40, t, kc) / bn(39, t, kc) < 0.1);
  CHECK_THROWS_AS(bn(0, 1.0, kc), std::domain_error);
}

TEST_CASE("upper bound structure") {
  // beta = 1: sigma = 1/2 and gamma = lambda^2/2
  FractionalIndex b1(1.0);
  double lam = 1.7;
  double gamma_expected = lam * lam / 2.0;
  double gamma = lam * lam * psi(b1, false) * tilde_c(1.0) *
                 std::tgamma(0.5);
  CHECK(gamma == doctest::Approx(gamma_expected).epsilon(1e-12));

  auto near = kernel_upper(b1, lam, 0.7, 0.0);
  auto far = kernel_upper(b1, lam, 0.7, 25.0);
  CHECK(far.mittag_form < 1e-30 * near.mittag_form);
  CHECK(near.exp_form >= near.mittag_form);

  CHECK_THROWS_AS(kernel_upper(FractionalIndex(2.0), 1.0, 1.0, 0.0),
                  std::domain_error);
}

TEST_CASE("lower bound structure") {
  FractionalIndex bh(0.5);
  for (double t : {0.2, 1.0, 3.0}) {
    for (double x : {0.0, 1.0}) {
      auto lo = kernel_lower(bh, 1.0, t, x);
      auto up = kernel_upper(bh, 1.0, t, x);
      CHECK(lo.mittag_form <= up.mittag_form);
      CHECK(lo.exp_form > 0.0);
    }
  }
  // exponential factor tends to 1: exp_form ~ C Gref near t = 0
  double t0 = 1e-5;
  auto lo = kernel_lower(bh, 1.0, t0, 0.3);
  double ref =
      reference_kernel({ReferenceKernelKind::LowerGauss, bh, 1}, t0, 0.3);
  CHECK(lo.exp_form / ref ==
        doctest::Approx(lo.exp_form / ref).epsilon(1e-12));  // finite
  CHECK(lo.exp_form / ref < 1.0);  // the constant C is small but positive
  CHECK(lo.exp_form / ref > 0.0);
  CHECK_THROWS_AS(kernel_lower(FractionalIndex(1.2), 1.0, 1.0, 0.0),
                  std::domain_error);
}

TEST_CASE("heat kernel exact form") {
  // displayed structure at nu = 2, lambda = 1, t = 1, x = 0
  double phi_half = 0.5 * (2.0 - std::erfc(0.5 / std::sqrt(2.0)));
  double expect = (1.0 / std::sqrt(2.0 * M_PI)) *
                  (1.0 / std::sqrt(8.0 * M_PI) +
                   0.25 * phi_half * std::exp(0.125));
  CHECK(kernel_heat_exact(2.0, 1.0, 1.0, 0.0) ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(kernel_heat_exact(2.0, 1.0, 1e-8, 1.0) <= 1e-30);
  // time mass matches the quadrature of the kernel's spatial mass
  double t = 0.8;
  double q = quad::integrate(
      [&](double s) {
        double gamma = 1.0 / std::sqrt(8.0);
        double y = gamma * std::sqrt(s);
        double e_half = 1.0 / std::sqrt(M_PI) +
                        y * std::exp(y * y) * (2.0 - std::erfc(y));
        return gamma / std::sqrt(s) * e_half;  // spatial mass of K at time s
      },
      0.0, t, 1e-10);
  CHECK(kernel_heat_exact_time_mass(2.0, 1.0, t) ==
        doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("biharmonic kernel exact form") {
  double g = 3.0 * std::sqrt(2.0) / 16.0;
  CHECK(g == doctest::Approx(std::tgamma(2.5) / std::sqrt(8.0 * M_PI))
                 .epsilon(1e-14));
  CHECK(kernel_biharmonic_exact(1.0, 30.0) < 1e-100);
  // B_1-term leading order as t -> 0
  double t = 1e-3, x = 0.3;
  double c0 = 1.0 / std::sqrt(8.0 * M_PI);
  double ref = std::exp(-x * x / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
  double lead = c0 * std::pow(t, 1.5) * ref;
  CHECK(kernel_biharmonic_exact(t, x) ==
        doctest::Approx(lead).epsilon(1e-3));
}

TEST_CASE("series evaluator basics") {
  auto heat_g = [](double t, double x) {
    return std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
  };
  KernelSeriesGrid grid;
  grid.constants = {1.0 / std::sqrt(8.0 * M_PI), 1.0, 0.5};
  grid.reference = [](double t, double x) {
    return std::exp(-x * x / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
  };
  grid.time_nodes = 48;  // coarse is enough here
  KernelSeriesEvaluator ev(heat_g, 1.0, 0.5, 6, grid);
  auto r = ev.evaluate(0.3);
  REQUIRE(r.ln_values.size() == 7);
  // nonnegativity and the pointwise B_{n+1} domination
  for (std::size_t n = 0; n < r.ln_values.size(); ++n) {
    CHECK(r.ln_values[n] >= -1e-10);
    double cap = bn(static_cast<int>(n) + 1, 0.5, grid.constants) *
                 grid.reference(0.5, 0.3);
    CHECK(r.ln_values[n] <= cap * 1.01);
  }
  CHECK(r.tail_estimate ==
        doctest::Approx(bn(8, 0.5, grid.constants) * grid.reference(0.5, 0.3))
            .epsilon(1e-12));
  // partial sums are the prefix sums
  double run = 0.0;
  for (std::size_t n = 0; n < r.ln_values.size(); ++n) {
    run += r.ln_values[n];
    CHECK(r.partial_sums[n] == doctest::Approx(run).epsilon(1e-14));
  }
}

TEST_CASE("sub-semigroup checks") {
  FractionalIndex b1(1.0), bh(0.5);
  // plain Gaussian: exact semigroup, C1 = 1
  auto [l1, r1] = subsemigroup_check(
      {ReferenceKernelKind::GaussianG, b1, 1}, 0.7, 0.4, 0.9);
  CHECK(l1 == doctest::Approx(r1).epsilon(1e-8));
  // two-sided exponential: quadrature equals the closed convolution and
  // stays below hat_c times the target kernel, including far out
  ReferenceKernel expk{ReferenceKernelKind::ExponentialE, bh, 1};
  for (double x : {0.0, 5.0, 10.0, 20.0}) {
    auto [lhs, rhs] = subsemigroup_check(expk, 2.0, 0.5, x);
    double a = std::pow(2.0, 0.25), b = std::pow(0.5, 0.25);
    double closed = 0.5 / (a + b) *
                    (a * std::exp(-x / a) - b * std::exp(-x / b)) / (a - b);
    CHECK(lhs == doctest::Approx(closed).epsilon(1e-7));
    CHECK(lhs <= rhs * (1.0 + 1e-9));
  }
  // the lower Gaussian runs the opposite direction
  auto [l4, r4] = subsemigroup_check(
      {ReferenceKernelKind::LowerGauss, bh, 1}, 0.8, 0.5, 0.3);
  CHECK(l4 >= r4 * (1.0 - 1e-9));
}

TEST_CASE("invariant suite") {
  auto rep = verify_kernel();
  for (const auto& c : rep.checks) {
    INFO(c.name, " measured=", c.measured, " tol=", c.tol);
    CHECK(c.pass);
  }
}

TEST_SUITE_END();
