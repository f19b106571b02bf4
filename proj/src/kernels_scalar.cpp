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

#include <cstdint>

#include "squeezelab/kernels.hpp"

namespace squeezelab {
namespace kern {
namespace {

// Wraparound on purpose: callers have already proven the results fit.
using u64 = std::uint64_t;

void add_scalar(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) + static_cast<u64>(in[i]));
  }
}

void rsub_scalar(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) - static_cast<u64>(in[i]));
  }
}

void mul_scalar(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) * static_cast<u64>(in[i]));
  }
}

void sqdiff_scalar(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const u64 d = static_cast<u64>(c) - static_cast<u64>(in[i]);
    out[i] = static_cast<std::int64_t>(d * d);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {"scalar", add_scalar, rsub_scalar, mul_scalar, sqdiff_scalar};
  return ops;
}

}  // namespace kern
}  // namespace squeezelab
