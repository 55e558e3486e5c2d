// Copyright 2026 The Netstate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef NETSTATE_RANDOM_H_
#define NETSTATE_RANDOM_H_

#include <cstdint>
#include <random>

namespace netstate {

// mt19937_64's output sequence is fixed by the standard; the standard
// distributions are not. Bounded draws go through this helper so seeded
// runs produce identical artifacts on every toolchain.
using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. Precondition: lo <= hi.
inline int64_t UniformInt(Rng& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<int64_t>(rng());
  const uint64_t n = span + 1;
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
  uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return lo + static_cast<int64_t>(x % n);
}

}  // namespace netstate

#endif  // NETSTATE_RANDOM_H_
