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

// NEON kernel variants for aarch64. NEON has no 64-bit vector multiply, so
// the mul/sqdiff kernels stay scalar here; add/rsub use vector lanes.

#include <arm_neon.h>

#include <cstdint>

#include "squeezelab/kernels.hpp"

namespace squeezelab {
namespace kern {
namespace {

using u64 = std::uint64_t;

void add_neon(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  const int64x2_t vc = vdupq_n_s64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_s64(out + i, vaddq_s64(vc, vld1q_s64(in + i)));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) + static_cast<u64>(in[i]));
  }
}

void rsub_neon(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  const int64x2_t vc = vdupq_n_s64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_s64(out + i, vsubq_s64(vc, vld1q_s64(in + i)));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) - static_cast<u64>(in[i]));
  }
}

void mul_neon(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) * static_cast<u64>(in[i]));
  }
}

void sqdiff_neon(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const u64 d = static_cast<u64>(c) - static_cast<u64>(in[i]);
    out[i] = static_cast<std::int64_t>(d * d);
  }
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops = {"neon", add_neon, rsub_neon, mul_neon, sqdiff_neon};
  return ops;
}

}  // namespace kern
}  // namespace squeezelab
