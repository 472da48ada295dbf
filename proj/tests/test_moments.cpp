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
#include "tfsde/moments.hpp"
#include "tfsde/verification.hpp"

using namespace tfsde;

TEST_SUITE_BEGIN("moments");

TEST_CASE("admissibility weight") {
  FractionalIndex b1(1.0);
  CHECK(f_eta(b1, 2.0, 0.0) == 1.0);
  CHECK(f_eta(b1, 2.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  double prev = 1.0;
  for (double x : {0.2, 0.9, 2.5, 7.0}) {
    double v = f_eta(FractionalIndex(0.5), 1.0, x);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(f_eta(FractionalIndex(2.0), 1.0, 0.0), std::domain_error);
}

TEST_CASE("homogeneous solution") {
  FractionalIndex bh(0.5);
  auto dirac = InitialMeasure::dirac(0.0);
  CHECK(j0(bh, dirac, nullptr, 0.7, 0.4) ==
        doctest::Approx(green(bh, GreenKind::Primary, 0.7, 0.4))
            .epsilon(1e-14));
  auto flat = InitialMeasure::lebesgue(1.0);
  CHECK(j0(bh, flat, nullptr, 2.0, -3.0) == doctest::Approx(1.0));

  FractionalIndex bf(1.5);
  auto mu = InitialMeasure::lebesgue(2.0);
  auto nu = InitialMeasure::lebesgue(3.0);
  CHECK(j0(bf, mu, &nu, 2.0, 1.0) == doctest::Approx(8.0).epsilon(1e-13));
  CHECK_THROWS_AS(j0(bf, mu, nullptr, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(j0(bh, mu, &nu, 1.0, 0.0), std::domain_error);

  // density data: convolution against a box equals the integrated kernel
  InitialMeasure box;
  box.density_breakpoints = {-1.0, 1.0};
  box.density_values = {1.0};
  double j = j0(bh, box, nullptr, 0.5, 0.2);
  CHECK(j > 0.0);
  CHECK(j < 1.0);  // partial mass of a probability kernel
}

TEST_CASE("wave-endpoint homogeneous solution") {
  FractionalIndex b2(2.0);
  auto mu = InitialMeasure::lebesgue(2.0);
  auto nu = InitialMeasure::lebesgue(3.0);
  CHECK(j0(b2, mu, &nu, 2.0, 0.0) == doctest::Approx(3.0 * 2.0 + 2.0));
  auto atom_mu = InitialMeasure::dirac(0.0);
  CHECK_THROWS_AS(j0(b2, atom_mu, &nu, 1.0, 0.0), std::domain_error);
}

TEST_CASE("moment upper bound, flat data closed form") {
  FractionalIndex bh(0.5);
  RhoSpec rho{1.3, 0.7};
  auto mu = InitialMeasure::lebesgue(0.9);
  double t = 0.8;

  // p = 2: c^2 + (vip^2 + c^2)(E_{1-s,1}(gamma t^{1-s}) - 1)
  double gamma = rho.lip_upper * rho.lip_upper * psi(bh, false) *
                 tilde_c(0.5) * std::tgamma(0.75);
  double mass =
      mittag_leffler({0.75, 1.0}, gamma * std::pow(t, 0.75)) - 1.0;
  double expect = 0.81 + (0.49 + 0.81) * mass;
  CHECK(moment_upper(bh, 2, rho, mu, nullptr, t, 0.3) ==
        doctest::Approx(expect).epsilon(1e-10));

  // p = 4 carries lambda = 4 sqrt(p) lip and the doubled J0^2
  double lam4 = 4.0 * 2.0 * rho.lip_upper;
  double gamma4 = lam4 * lam4 * psi(bh, false) * tilde_c(0.5) *
                  std::tgamma(0.75);
  double mass4 =
      mittag_leffler({0.75, 1.0}, gamma4 * std::pow(t, 0.75)) - 1.0;
  double expect4 = 2 * 0.81 + (0.49 + 2 * 0.81) * mass4;
  CHECK(moment_upper(bh, 4, rho, mu, nullptr, t, 0.3) ==
        doctest::Approx(expect4).epsilon(1e-10));

  CHECK_THROWS_AS(moment_upper(bh, 3, rho, mu, nullptr, t, 0.0),
                  std::domain_error);
  // zero data, zero affine part: the bound vanishes
  RhoSpec pure{1.0, 0.0};
  auto zero = InitialMeasure::lebesgue(0.0);
  CHECK(moment_upper(bh, 2, pure, zero, nullptr, t, 0.0) ==
        doctest::Approx(0.0));
}

TEST_CASE("moment upper bound, fast flat data") {
  FractionalIndex bf(1.5);
  RhoSpec rho{1.0, 0.5};
  auto mu = InitialMeasure::lebesgue(1.0);
  auto nu = InitialMeasure::lebesgue(2.0);
  double v = moment_upper(bf, 2, rho, mu, &nu, 0.6, 0.0);
  double j = j0(bf, mu, &nu, 0.6, 0.0);
  CHECK(v >= j * j);  // the convolution part is nonnegative
}

TEST_CASE("second moment lower bound") {
  FractionalIndex bh(0.5);
  RhoSpec rho{1.0, 0.5, 0.8, 0.3};
  auto mu = InitialMeasure::lebesgue(1.2);
  double t = 0.7;
  double sigma = -0.75;
  double gamma = 0.64 * psi(bh, true) * std::tgamma(1.75) / std::sqrt(2.0);
  double mass =
      mittag_leffler({1.75, 1.0}, gamma * std::pow(t, 1.75)) - 1.0;
  double expect = 1.44 + (0.09 + 1.44) * mass;
  CHECK(second_moment_lower(bh, rho, mu, t, 0.0) ==
        doctest::Approx(expect).epsilon(1e-10));
  CHECK(second_moment_lower(bh, rho, mu, t, 0.0) <=
        moment_upper(bh, 2, rho, mu, nullptr, t, 0.0));

  // vanishing lower coupling collapses to J0^2
  RhoSpec weak{1.0, 0.0, 1e-8, 0.0};
  CHECK(second_moment_lower(bh, weak, mu, t, 0.0) ==
        doctest::Approx(1.44).epsilon(1e-6));

  CHECK_THROWS_AS(second_moment_lower(FractionalIndex(1.5), rho, mu, t, 0.0),
                  std::domain_error);
  RhoSpec nolower{1.0, 0.0};
  CHECK_THROWS_AS(second_moment_lower(bh, nolower, mu, t, 0.0),
                  std::domain_error);
}

TEST_CASE("lyapunov bounds") {
  RhoSpec rho{1.0, 0.0, 0.5, 0.0};
  // p exponents approach the heat and wave rates at the endpoints
  auto near1 = lyapunov_bounds(FractionalIndex(1.0 - 1e-9), 2, rho);
  (void)near1;
  double e_slow = (4.0 - (1.0 - 1e-9)) / (2.0 - (1.0 - 1e-9));
  CHECK(e_slow == doctest::Approx(3.0).epsilon(1e-8));
  double e_fast = (8.0 - (2.0 - 1e-9)) / (6.0 - (2.0 - 1e-9));
  CHECK(e_fast == doctest::Approx(1.5).epsilon(1e-8));

  // slow lower bound is linear in p
  auto b2 = lyapunov_bounds(FractionalIndex(0.5), 2, rho);
  auto b4 = lyapunov_bounds(FractionalIndex(0.5), 4, rho);
  REQUIRE(b2.lower.has_value());
  CHECK(*b4.lower == doctest::Approx(2.0 * *b2.lower).epsilon(1e-12));
  // upper grows at the stated power of p
  auto u2 = lyapunov_bounds(FractionalIndex(0.5), 2, rho).upper;
  auto u4 = lyapunov_bounds(FractionalIndex(0.5), 4, rho).upper;
  CHECK(u4 / u2 ==
        doctest::Approx(std::pow(2.0, (4.0 - 0.5) / (2.0 - 0.5)))
            .epsilon(1e-12));
  // fast regime has no lower bound
  CHECK_FALSE(lyapunov_bounds(FractionalIndex(1.5), 2, rho).lower.has_value());

  CHECK_THROWS_AS(lyapunov_bounds(FractionalIndex(1.0), 2, rho),
                  std::domain_error);
  CHECK_THROWS_AS(lyapunov_bounds(FractionalIndex(2.0), 2, rho),
                  std::domain_error);
}

TEST_CASE("holder exponents") {
  auto h1 = holder_exponents(FractionalIndex(1.0));
  CHECK(h1.time_exp == doctest::Approx(0.25));
  CHECK(h1.space_exp == doctest::Approx(0.5));
  CHECK(h1.regime == HolderExponents::Regime::Interior);

  auto h2 = holder_exponents(FractionalIndex(0.5));
  CHECK(h2.time_exp == doctest::Approx(0.375));
  CHECK(h2.space_exp == doctest::Approx(0.5));

  auto h3 = holder_exponents(FractionalIndex(0.5), 1.0);
  CHECK(h3.time_exp == doctest::Approx(0.25));
  CHECK(h3.space_exp == doctest::Approx(0.5));
  CHECK(h3.regime == HolderExponents::Regime::GlobalWithHolderData);

  CHECK_THROWS_AS(holder_exponents(FractionalIndex(1.5)), std::domain_error);
}

TEST_CASE("invariant suite") {
  auto rep = verify_moments();
  for (const auto& c : rep.checks) {
    INFO(c.name, " measured=", c.measured, " tol=", c.tol);
    CHECK(c.pass);
  }
}

TEST_SUITE_END();
