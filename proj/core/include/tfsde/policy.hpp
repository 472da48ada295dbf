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

#include <stdexcept>

namespace tfsde {

// Accuracy knobs shared by the special-function and quadrature routines.
//
// `asymptotic_switch` is a threshold on the natural scale |z|^(1/alpha) of
// the Mittag-Leffler argument: below it the power series is summed, above it
// the large-argument expansion takes over.  The default keeps the worst-case
// cancellation of the alternating series near 1e-8 while the expansion is
// already past its optimal truncation point, so the two branches overlap.
struct EvalPolicy {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int series_max_terms = 10000;
  double asymptotic_switch = 18.0;
  int asymptotic_order_p = 3;  // minimum order of the algebraic expansion

  void validate() const {
    if (!(rel_tol > 0) || !(abs_tol > 0))
      throw std::domain_error("EvalPolicy: tolerances must be positive");
    if (series_max_terms < 1)
      throw std::domain_error("EvalPolicy: series_max_terms must be >= 1");
    if (!(asymptotic_switch > 0))
      throw std::domain_error("EvalPolicy: asymptotic_switch must be positive");
    if (asymptotic_order_p < 1)
      throw std::domain_error("EvalPolicy: asymptotic_order_p must be >= 1");
  }
};

}  // namespace tfsde
