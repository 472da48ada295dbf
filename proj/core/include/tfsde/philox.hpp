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

#include <array>
#include <cmath>
#include <cstdint>

namespace tfsde {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).  A block
// is a pure function of (counter, key), so noise fields keyed by
// (seed, replicate, step, cell) are reproducible under any scheduling.
struct Philox4x32 {
  static constexpr std::uint32_t kMultA = 0xD2511F53u;
  static constexpr std::uint32_t kMultB = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeylA = 0x9E3779B9u;
  static constexpr std::uint32_t kWeylB = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      std::uint64_t p0 = static_cast<std::uint64_t>(kMultA) * ctr[0];
      std::uint64_t p1 = static_cast<std::uint64_t>(kMultB) * ctr[2];
      std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    return ctr;
  }
};

// One standard normal per (seed, replicate, step, cell) via Box-Muller on
// the first two words of a Philox block.
inline double keyed_normal(std::uint64_t seed, std::uint32_t replicate,
                           std::uint32_t step, std::uint32_t cell) {
  auto out = Philox4x32::block(
      {cell, step, replicate, 0x74667364u},
      {static_cast<std::uint32_t>(seed),
       static_cast<std::uint32_t>(seed >> 32)});
  double u1 = (out[0] + 0.5) * 0x1p-32;
  double u2 = (out[1] + 0.5) * 0x1p-32;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925 * u2);
}

}  // namespace tfsde
