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
#include <string>
#include <vector>

namespace tfsde {

// One named inequality |measured| <= tol (or measured <= expected + tol,
// depending on the check); `measured` is always the residual or the value
// the threshold applies to, so pass == (measured <= tol) unless noted.
struct CheckResult {
  std::string name;
  double measured;
  double expected;
  double tol;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

struct SimVerifyOptions {
  int replicates = 2000;
  std::uint64_t seed = 42;
  int n_time = 256;
  int n_space = 512;
};

SuiteReport verify_specfun();
SuiteReport verify_green();
SuiteReport verify_kernel();
SuiteReport verify_moments();
SuiteReport verify_simulator(const SimVerifyOptions& opts = {});

std::string report_json(const std::vector<SuiteReport>& reports);

// Complementary error function by an implementation-independent route:
// Maclaurin series of erf for |x| <= 2, Lentz continued fraction beyond.
double erfc_oracle(double x);

// Direct two-dimensional space-time quadrature of the squared Green
// increments (the x-space route; the library computes them in frequency).
double l2_space_increment_direct(double beta, double t, double dx);
double l2_time_tail_direct(double beta, double s, double t);
double l2_time_overlap_direct(double beta, double s, double t);

}  // namespace tfsde
