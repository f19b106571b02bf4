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

#ifndef SQUEEZELAB_KERNELS_HPP_
#define SQUEEZELAB_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace squeezelab {
namespace kern {

// Broadcast kernels for the int64 fast path of the set engine. Every kernel
// writes out[i] = <op>(c, in[i]) for i < n. Callers guarantee the results fit
// in int64 (the set engine proves bounds before choosing this path), so the
// kernels are plain wraparound arithmetic with no overflow checks.
//
// kernels_scalar.cpp holds the reference implementations; SIMD variants are
// compiled per-architecture and selected at runtime. All variants are
// bit-for-bit equivalent and the unit tests enforce that on every variant
// the running machine can execute.
struct Ops {
  const char* name;
  void (*broadcast_add)(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n);
  // out[i] = c - in[i]
  void (*broadcast_rsub)(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n);
  void (*broadcast_mul)(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n);
  // out[i] = (c - in[i])^2
  void (*broadcast_sqdiff)(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n);
};

// Reference implementation; always available.
const Ops& scalar_ops();

// Every implementation the current process can run, reference first.
const std::vector<const Ops*>& available_ops();

// The implementation the set engine uses. Defaults to the widest variant the
// CPU supports; SQUEEZELAB_KERNEL=<name> in the environment or force_ops()
// pins a specific one (e.g. "scalar" to rule SIMD out when bisecting).
const Ops& active_ops();

// Selects a variant by name. Returns false if no such variant is runnable.
bool force_ops(const char* name);

}  // namespace kern
}  // namespace squeezelab

#endif  // SQUEEZELAB_KERNELS_HPP_
