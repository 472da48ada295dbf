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

#include "tfsde/green.hpp"
#include "tfsde/quadrature.hpp"
#include "tfsde/verification.hpp"

using namespace tfsde;

TEST_SUITE_BEGIN("green");

TEST_CASE("fractional index validation") {
  CHECK_THROWS_AS(FractionalIndex(0.0), std::domain_error);
  CHECK_THROWS_AS(FractionalIndex(2.5), std::domain_error);
  FractionalIndex b(1.0);
  CHECK(b.ceil_beta == 1);
  CHECK(b.slow);
  CHECK(FractionalIndex(1.25).ceil_beta == 2);
  CHECK_FALSE(FractionalIndex(1.25).slow);
}

TEST_CASE("pointwise values") {
  FractionalIndex b1(1.0);
  CHECK(green(b1, GreenKind::Primary, 1.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-13));
  // peak formula across the index range
  for (double b : {0.25, 0.75, 1.3, 1.9}) {
    FractionalIndex fb(b);
    for (double t : {0.4, 1.7}) {
      double expect = 0.5 * std::pow(t, fb.ceil_beta - 1.0 - b / 2.0) *
                      rgamma(fb.ceil_beta - b / 2.0);
      CHECK(green(fb, GreenKind::Primary, t, 0.0) ==
            doctest::Approx(expect).epsilon(1e-13));
    }
  }
  // wave endpoint: half indicator
  FractionalIndex b2(2.0);
  CHECK(green(b2, GreenKind::Primary, 1.0, 0.5) == 0.5);
  CHECK(green(b2, GreenKind::Primary, 1.0, 1.5) == 0.0);
  CHECK_THROWS_AS(green(b2, GreenKind::Star, 1.0, 0.0),
                  unsupported_distribution_error);
  CHECK_THROWS_AS(green(b1, GreenKind::Primary, 0.0, 0.0), std::domain_error);
}

TEST_CASE("total mass") {
  CHECK(green_total_mass(FractionalIndex(0.5), GreenKind::Primary, 7.0) == 1.0);
  CHECK(green_total_mass(FractionalIndex(1.5), GreenKind::Primary, 3.0) == 3.0);
  CHECK(green_total_mass(FractionalIndex(1.5), GreenKind::Star, 3.0) == 1.0);
}

TEST_CASE("moment formula") {
  FractionalIndex b1(1.0);
  CHECK(green_moment(b1, GreenKind::Primary, 2.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(green_moment(FractionalIndex(0.7), GreenKind::Star, 0.0, 5.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // beta = 0.5, a = 1, t = 2: Gamma(2)/Gamma(5/4) 2^{1/4}, and the same by
  // quadrature of |x| G over the truncated domain
  FractionalIndex bh(0.5);
  double expect = std::tgamma(2.0) * rgamma(1.25) * std::pow(2.0, 0.25);
  CHECK(green_moment(bh, GreenKind::Primary, 1.0, 2.0) ==
        doctest::Approx(expect).epsilon(1e-14));
  double cut = green_tail_cut(bh, GreenKind::Primary, 2.0, 1e-15);
  double q = 2.0 * quad::integrate(
                       [&](double x) {
                         return x * green(bh, GreenKind::Primary, 2.0, x);
                       },
                       0.0, cut, 1e-9);
  CHECK(q == doctest::Approx(expect).epsilon(1e-6));
  CHECK_THROWS_AS(green_moment(b1, GreenKind::Primary, -1.0, 1.0),
                  std::domain_error);
}

TEST_CASE("fourier transform") {
  // wave case: t E_{2,2}(-t^2 xi^2) = sin(t xi)/xi
  FractionalIndex b2(2.0);
  for (double xi : {0.3, 1.0, 4.0})
    CHECK(green_fourier(b2, GreenKind::Primary, 1.7, xi) ==
          doctest::Approx(std::sin(1.7 * xi) / xi).epsilon(1e-11));
  CHECK(green_fourier(FractionalIndex(1.3), GreenKind::Primary, 2.0, 0.0) ==
        doctest::Approx(2.0));
  // beta = 0.5 against the one-sided cosine quadrature
  FractionalIndex bh(0.5);
  double cut = green_tail_cut(bh, GreenKind::Primary, 1.0, 1e-15);
  double q = 2.0 * quad::integrate(
                       [&](double x) {
                         return green(bh, GreenKind::Primary, 1.0, x) *
                                std::cos(2.0 * x);
                       },
                       0.0, cut, 1e-10);
  CHECK(green_fourier(bh, GreenKind::Primary, 1.0, 2.0) ==
        doctest::Approx(q).epsilon(1e-6));
}

TEST_CASE("laplace transform") {
  for (double b : {0.5, 1.0, 1.5}) {
    FractionalIndex fb(b);
    CHECK(green_laplace(fb, GreenKind::Primary, 0.0) ==
          doctest::Approx(0.5 * rgamma(double(fb.ceil_beta))).epsilon(1e-14));
  }
  CHECK(green_laplace(FractionalIndex(1.5), GreenKind::Primary, 0.0) ==
        doctest::Approx(0.5));
  // heat case at z = 1: (1/2) e erfc(1), with a quadrature oracle
  FractionalIndex b1(1.0);
  double expect = 0.5 * std::exp(1.0) * erfc_oracle(1.0);
  CHECK(green_laplace(b1, GreenKind::Primary, 1.0) ==
        doctest::Approx(expect).epsilon(1e-11));
  double q = quad::integrate(
      [&](double x) {
        return std::exp(-x) * green(b1, GreenKind::Primary, 1.0, x);
      },
      0.0, 40.0, 1e-11);
  CHECK(green_laplace(b1, GreenKind::Primary, 1.0) ==
        doctest::Approx(q).epsilon(1e-8));
}

TEST_CASE("spatial derivatives") {
  FractionalIndex b1(1.0);
  // d/dx G_1(1,x) = -(x/2) G_1(1,x)
  double an = green_derivative(b1, GreenKind::Primary, 1.0, 1.0, 1);
  CHECK(an == doctest::Approx(-0.5 * green(b1, GreenKind::Primary, 1.0, 1.0))
                  .epsilon(1e-12));
  double h = 1e-6;
  double fd = (green(b1, GreenKind::Primary, 1.0, 1.0 + h) -
               green(b1, GreenKind::Primary, 1.0, 1.0 - h)) /
              (2.0 * h);
  CHECK(an == doctest::Approx(fd).epsilon(1e-6));

  // one-sided value at the origin for the slow case, n = 0
  FractionalIndex bh(0.5);
  CHECK(green_derivative(bh, GreenKind::Primary, 1.0, +0.0, 0) ==
        doctest::Approx(0.5 / std::tgamma(0.75)).epsilon(1e-13));
  // antisymmetry of the first derivative
  double dp = green_derivative(bh, GreenKind::Primary, 1.0, 0.8, 1);
  double dm = green_derivative(bh, GreenKind::Primary, 1.0, -0.8, 1);
  CHECK(dp == doctest::Approx(-dm).epsilon(1e-13));
  // signed zeros select the two one-sided limits
  CHECK(green_derivative(bh, GreenKind::Primary, 1.0, +0.0, 1) ==
        doctest::Approx(-green_derivative(bh, GreenKind::Primary, 1.0, -0.0, 1))
            .epsilon(1e-13));
}

TEST_CASE("asymptotic parameters") {
  FractionalIndex b1(1.0);
  auto p = asymptotic_params(b1, GreenKind::Primary);
  CHECK(p.c == doctest::Approx(2.0));
  CHECK(p.b == doctest::Approx(0.25));
  CHECK(p.a == doctest::Approx(0.0));
  CHECK(p.A == doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-14));

  CHECK(asymptotic_params(FractionalIndex(1.5), GreenKind::Primary).a ==
        doctest::Approx(-3.0));
  CHECK(asymptotic_params(FractionalIndex(0.01), GreenKind::Primary).c ==
        doctest::Approx(2.0 / 1.99));
  CHECK_THROWS_AS(asymptotic_params(FractionalIndex(2.0), GreenKind::Primary),
                  std::domain_error);

  // recover (b, c) for beta = 1 by fitting log G on x in [5, 10]
  double best_c = 0, best_b = 0, best_res = 1e300;
  for (double c = 1.8; c <= 2.2; c += 0.004) {
    // linear LS in (log A, a, b) given c
    double s[3][4] = {};
    for (int i = 0; i <= 40; ++i) {
      double x = 5.0 + 5.0 * i / 40.0;
      double y = std::log(green(b1, GreenKind::Primary, 1.0, x));
      double v[3] = {1.0, std::log(x), -std::pow(x, c)};
      for (int r = 0; r < 3; ++r) {
        for (int q2 = 0; q2 < 3; ++q2) s[r][q2] += v[r] * v[q2];
        s[r][3] += v[r] * y;
      }
    }
    // 3x3 solve by elimination
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int r = col + 1; r < 3; ++r)
        if (std::fabs(s[r][col]) > std::fabs(s[piv][col])) piv = r;
      for (int q2 = 0; q2 < 4; ++q2) std::swap(s[piv][q2], s[col][q2]);
      for (int r = 0; r < 3; ++r) {
        if (r == col) continue;
        double f = s[r][col] / s[col][col];
        for (int q2 = col; q2 < 4; ++q2) s[r][q2] -= f * s[col][q2];
      }
    }
    double coef[3];
    for (int r = 0; r < 3; ++r) coef[r] = s[r][3] / s[r][r];
    double res = 0.0;
    for (int i = 0; i <= 40; ++i) {
      double x = 5.0 + 5.0 * i / 40.0;
      double y = std::log(green(b1, GreenKind::Primary, 1.0, x));
      double fit = coef[0] + coef[1] * std::log(x) - coef[2] * std::pow(x, c);
      res += (y - fit) * (y - fit);
    }
    if (res < best_res) {
      best_res = res;
      best_c = c;
      best_b = coef[2];
    }
  }
  CHECK(best_c == doctest::Approx(2.0).epsilon(0.01));
  CHECK(best_b == doctest::Approx(0.25).epsilon(0.01));
}

TEST_CASE("l2 space increments") {
  FractionalIndex bh(0.5);
  auto z = l2_space_increment(bh, 1.0, 0.0);
  CHECK(z.value == 0.0);

  auto r = l2_space_increment(bh, 1.0, 0.1);
  CHECK(r.value <= r.bound * 1.02);
  double direct = l2_space_increment_direct(0.5, 1.0, 0.1);
  CHECK(r.value == doctest::Approx(direct).epsilon(0.02));

  double prev = 0.0;
  for (double dx : {0.05, 0.1, 0.2, 0.4}) {
    double v = l2_space_increment(bh, 1.0, dx).value;
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(l2_space_increment(FractionalIndex(1.5), 1.0, 0.1),
                  std::domain_error);
}

TEST_CASE("l2 time increments") {
  FractionalIndex bh(0.5);
  auto z = l2_time_increment(bh, 1.0, 1.0);
  CHECK(z.value_overlap == 0.0);
  CHECK(z.value_tail == 0.0);

  auto r = l2_time_increment(bh, 0.5, 1.0);
  CHECK(r.value_overlap <= r.bound_overlap * 1.02);
  CHECK(r.value_tail <= r.bound_tail * 1.02);
  CHECK(r.value_tail ==
        doctest::Approx(l2_time_tail_direct(0.5, 0.5, 1.0)).epsilon(0.02));

  // the (t-s)^{1-beta/2} envelope doubles by 2^{1-beta/2}
  auto r2 = l2_time_increment(bh, 0.5, 1.5);
  CHECK(r2.bound_tail / r.bound_tail ==
        doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-12));
}

TEST_CASE("invariant suite") {
  auto rep = verify_green();
  for (const auto& c : rep.checks) {
    INFO(c.name, " measured=", c.measured, " tol=", c.tol);
    CHECK(c.pass);
  }
}

TEST_SUITE_END();
