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

#include "tfsde/quadrature.hpp"
#include "tfsde/special_functions.hpp"
#include "tfsde/verification.hpp"

using namespace tfsde;

namespace {
// scaled complementary error function e^{x^2} erfc(x) through the oracle
// continued fraction, stable for large x
double erfcx_oracle(double x) {
  if (x <= 2.0) return std::exp(x * x) * erfc_oracle(x);
  double b = x, c = 1e300, d = 1.0 / b, f = d;
  for (int n = 1; n < 300; ++n) {
    double a = n * 0.5;
    d = 1.0 / (b + a * d);
    c = b + a / c;
    double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return f / std::sqrt(M_PI);
}
}  // namespace

TEST_SUITE_BEGIN("specfun");

TEST_CASE("mittag-leffler special values") {
  CHECK(mittag_leffler({1, 1}, 1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(mittag_leffler({2, 1}, -M_PI * M_PI) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(mittag_leffler({0.5, 0.5}, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-15));
}

TEST_CASE("mittag-leffler parameter validation") {
  CHECK_THROWS_AS(mittag_leffler({-1.0, 1.0}, 0.5), std::domain_error);
  CHECK_THROWS_AS(mittag_leffler({0.0, 1.0}, 0.5), std::domain_error);
  EvalPolicy tiny;
  tiny.series_max_terms = 3;
  CHECK_THROWS_AS(mittag_leffler({0.5, 1.0}, 3.0, tiny), accuracy_error);
}

TEST_CASE("negative-axis bound constant") {
  MLParams p{0.5, 2.0};
  auto [lo0, up0] = mittag_leffler_neg_bound(p, 0.0);
  CHECK(lo0 == 0.0);
  CHECK(up0 >= 1.0);  // C >= E(0) = 1/Gamma(2) = 1

  // x = 100: upper = C / 11 and it must dominate E_{1/2,2}(-10), for which
  // an independent value comes from 0.02 int_0^10 v erfcx(v) dv
  auto [lo, up] = mittag_leffler_neg_bound(p, 100.0);
  (void)lo;
  double c = mittag_leffler_neg_bound_constant(p);
  CHECK(up == doctest::Approx(c / 11.0).epsilon(1e-14));
  double oracle =
      0.02 * quad::integrate([](double v) { return v * erfcx_oracle(v); },
                             0.0, 10.0, 1e-11);
  CHECK(mittag_leffler({0.5, 2.0}, -10.0) ==
        doctest::Approx(oracle).epsilon(1e-8));
  CHECK(oracle <= up);

  CHECK_THROWS_AS(mittag_leffler_neg_bound({1.5, 2.0}, 1.0),
                  std::domain_error);
}

TEST_CASE("the negative-axis bound brackets the function") {
  MLParams p{0.5, 2.0};
  for (double x : {0.0, 0.3, 1.0, 4.0, 20.0, 300.0}) {
    double v = mittag_leffler(p, -std::pow(x, 0.5));
    auto [lo, up] = mittag_leffler_neg_bound(p, x);
    CHECK(v > lo);
    CHECK(v <= up * (1.0 + 1e-9));
  }
}

TEST_CASE("mainardi closed forms") {
  // M_{1/2}(z) = exp(-z^2/4)/sqrt(pi)
  CHECK(mainardi({0.5, 1.0}, 2.0) ==
        doctest::Approx(std::exp(-1.0) / std::sqrt(M_PI)).epsilon(1e-13));
  // reciprocal Gamma at the pole: M_{1/2,1-n/2}(0) = 0 for odd n
  for (int n : {1, 3, 5})
    CHECK(mainardi({0.5, 1.0 - n / 2.0}, 0.0) == 0.0);
  // generic z = 0 value
  CHECK(mainardi({0.3, 1.7}, 0.0) ==
        doctest::Approx(rgamma(1.4)).epsilon(1e-15));
  CHECK_THROWS_AS(mainardi({1.0, 1.0}, 0.5), std::domain_error);
  CHECK_THROWS_AS(mainardi({0.5, 1.0}, -0.5), std::domain_error);
}

TEST_CASE("mainardi derivative") {
  CHECK(mainardi_derivative({0.5, 1.0}, 0.0, 1) == 0.0);
  CHECK(mainardi_derivative({0.5, 1.0}, 1.0, 0) ==
        doctest::Approx(std::exp(-0.25) / std::sqrt(M_PI)).epsilon(1e-13));
  // d/dz M_{1/4,1}(z) = -M_{1/4,3/4}(z), cross-checked by differences
  double z = 0.5, h = 1e-5;
  double fd =
      (mainardi({0.25, 1.0}, z + h) - mainardi({0.25, 1.0}, z - h)) / (2 * h);
  double an = mainardi_derivative({0.25, 1.0}, z, 1);
  CHECK(an == doctest::Approx(-mainardi({0.25, 0.75}, z)).epsilon(1e-14));
  CHECK(fd == doctest::Approx(an).epsilon(1e-6));
}

TEST_CASE("mainardi moment") {
  CHECK(mainardi_moment({0.5, 1.0}, 0.0) == doctest::Approx(1.0));
  CHECK(mainardi_moment({0.5, 2.0}, 0.0) == doctest::Approx(1.0));
  double q = quad::integrate(
      [](double x) {
        return x * x * std::exp(-x * x / 4.0) / std::sqrt(M_PI);
      },
      0.0, 40.0, 1e-11);
  CHECK(mainardi_moment({0.5, 1.0}, 2.0) == doctest::Approx(q).epsilon(1e-8));
  CHECK(mainardi_moment({0.5, 1.0}, 2.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(mainardi_moment({0.5, 1.0}, -1.0), std::domain_error);
}

TEST_CASE("mainardi cosine transform") {
  CHECK(mainardi_cosine_transform({0.5, 1.0}, 0.0) == doctest::Approx(1.0));
  CHECK(mainardi_cosine_transform({0.5, 1.0}, 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  // lambda = beta/2 with beta = 0.5 against a cosine quadrature
  for (double xi : {0.7, 2.0}) {
    double q = quad::integrate(
        [&](double x) { return std::cos(xi * x) * mainardi({0.25, 1.0}, x); },
        0.0, 60.0, 1e-10);
    CHECK(mainardi_cosine_transform({0.25, 1.0}, xi) ==
          doctest::Approx(q).epsilon(1e-6));
  }
}

TEST_CASE("series and contour branches agree in the overlap band") {
  // z* is the direct-to-contour switch; probing just below and above it on
  // a fine ladder would show a jump if one branch were off
  for (double lam : {0.25, 0.5, 0.75, 0.9}) {
    for (double mu : {1.0, 2.0}) {
      double zs = std::pow(30.0 * (1.0 - lam), 1.0 - lam);
      double below = mainardi({lam, mu}, zs * 0.999);
      double above = mainardi({lam, mu}, zs * 1.001);
      // the function is smooth; a relative step of 0.2% in z moves the
      // value by O(Y'(z) dz), bounded here by a few percent
      CHECK(std::fabs(above - below) <=
            0.05 * std::max(std::fabs(below), 1e-280));
    }
  }
}

TEST_CASE("identity suite residuals") {
  auto rep = verify_specfun();
  for (const auto& c : rep.checks) {
    INFO(c.name, " measured=", c.measured, " tol=", c.tol);
    CHECK(c.pass);
  }
}

TEST_SUITE_END();
