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

#include <cmath>
#include <functional>

namespace tfsde::quad {

// Adaptive Gauss-Kronrod integral of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, int max_depth = 14);

// Integral of f over [0, inf) for integrands with at least algebraic decay.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double rel_tol = 1e-9);

// Integral over [a, b] with an integrable power singularity f ~ (x-a)^{-p},
// 0 <= p < 1, absorbed by the substitution x = a + u^{1/(1-p)}.
double integrate_left_singular(const std::function<double(double)>& f,
                               double a, double b, double p,
                               double rel_tol = 1e-10);

// Fixed composite Simpson rule with n panels (n even).
double simpson(const std::function<double(double)>& f, double a, double b,
               int n);

}  // namespace tfsde::quad
