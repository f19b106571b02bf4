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

#include <cstdlib>
#include <cstring>
#include <vector>

#include "squeezelab/kernels.hpp"

namespace squeezelab {
namespace kern {

#if defined(SQUEEZELAB_HAVE_AVX2_TU)
const Ops& avx2_ops();  // defined in kernels_avx2.cpp
#endif
#if defined(SQUEEZELAB_HAVE_NEON_TU)
const Ops& neon_ops();  // defined in kernels_neon.cpp
#endif

namespace {

std::vector<const Ops*> detect_ops() {
  std::vector<const Ops*> ops;
  ops.push_back(&scalar_ops());
#if defined(SQUEEZELAB_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) ops.push_back(&avx2_ops());
#endif
#if defined(SQUEEZELAB_HAVE_NEON_TU)
  // NEON is baseline on aarch64.
  ops.push_back(&neon_ops());
#endif
  return ops;
}

const Ops* pick_default() {
  const std::vector<const Ops*>& ops = available_ops();
  if (const char* forced = std::getenv("SQUEEZELAB_KERNEL")) {
    for (const Ops* o : ops) {
      if (std::strcmp(o->name, forced) == 0) return o;
    }
    // Unknown name in the environment: fall through to the widest variant
    // rather than failing startup.
  }
  return ops.back();
}

const Ops*& active_slot() {
  static const Ops* active = pick_default();
  return active;
}

}  // namespace

const std::vector<const Ops*>& available_ops() {
  static const std::vector<const Ops*> ops = detect_ops();
  return ops;
}

const Ops& active_ops() { return *active_slot(); }

bool force_ops(const char* name) {
  for (const Ops* o : available_ops()) {
    if (std::strcmp(o->name, name) == 0) {
      active_slot() = o;
      return true;
    }
  }
  return false;
}

}  // namespace kern
}  // namespace squeezelab
