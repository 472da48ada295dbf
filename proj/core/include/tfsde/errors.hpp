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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfsde {

// A numerical routine could not reach the requested accuracy. Carries the
// magnitude of the last increment (or error estimate) that was observed.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double last_increment)
      : std::runtime_error(what), last_increment_(last_increment) {}
  double last_increment() const { return last_increment_; }

 private:
  double last_increment_;
};

// A simulated field exceeded the blow-up threshold.
class divergence_error : public std::runtime_error {
 public:
  divergence_error(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Requested a pointwise value of an object that is only a distribution.
class unsupported_distribution_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tfsde
