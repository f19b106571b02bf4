// Copyright 2026 The Squeezelab Authors
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

#ifndef SQUEEZELAB_PRNG_HPP_
#define SQUEEZELAB_PRNG_HPP_

#include <cstdint>

namespace squeezelab {

// SplitMix64. Chosen over std::mt19937_64 because the algorithm is five
// lines we fully pin down: the same seed yields the same stream on every
// platform and toolchain, which the reproducibility contract depends on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) via masked rejection: draw next() masked to
  // the smallest covering power of two, retry until it lands under bound.
  // Unbiased, and uses a deterministic number of stream values per accept.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform value in [lo, hi] inclusive; lo <= hi required.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
  }

 private:
  std::uint64_t state_;
};

}  // namespace squeezelab

#endif  // SQUEEZELAB_PRNG_HPP_
