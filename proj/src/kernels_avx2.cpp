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

// AVX2 kernel variants. This translation unit is the only one compiled with
// -mavx2; the dispatcher never hands these out unless the CPU reports AVX2.

#include <immintrin.h>

#include <cstdint>

#include "squeezelab/kernels.hpp"

namespace squeezelab {
namespace kern {
namespace {

using u64 = std::uint64_t;

// Low 64 bits of a 64x64 multiply. AVX2 has no 64-bit mullo, so build it
// from 32x32->64 partial products: lo*lo + ((lo*hi + hi*lo) << 32).
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void add_avx2(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(vc, v));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) + static_cast<u64>(in[i]));
  }
}

void rsub_avx2(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi64(vc, v));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) - static_cast<u64>(in[i]));
  }
}

void mul_avx2(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mullo_epi64(vc, v));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<u64>(c) * static_cast<u64>(in[i]));
  }
}

void sqdiff_avx2(std::int64_t c, const std::int64_t* in, std::int64_t* out, std::size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i d = _mm256_sub_epi64(vc, v);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mullo_epi64(d, d));
  }
  for (; i < n; ++i) {
    const u64 d = static_cast<u64>(c) - static_cast<u64>(in[i]);
    out[i] = static_cast<std::int64_t>(d * d);
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {"avx2", add_avx2, rsub_avx2, mul_avx2, sqdiff_avx2};
  return ops;
}

}  // namespace kern
}  // namespace squeezelab
