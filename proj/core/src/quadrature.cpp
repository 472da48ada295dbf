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

#include "tfsde/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tfsde::quad {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double rel_tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, rel_tol);
}

double integrate_left_singular(const std::function<double(double)>& f,
                               double a, double b, double p, double rel_tol) {
  if (!(p >= 0.0 && p < 1.0))
    throw std::domain_error("integrate_left_singular: require 0 <= p < 1");
  if (p == 0.0) return integrate(f, a, b, rel_tol);
  const double q = 1.0 - p;
  auto g = [&](double u) {
    double x = a + std::pow(u, 1.0 / q);
    return f(x) * std::pow(u, 1.0 / q - 1.0) / q;
  };
  return integrate(g, 0.0, std::pow(b - a, q), rel_tol);
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace tfsde::quad
