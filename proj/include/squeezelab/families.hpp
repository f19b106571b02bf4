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

#ifndef SQUEEZELAB_FAMILIES_HPP_
#define SQUEEZELAB_FAMILIES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "squeezelab/numset.hpp"
#include "squeezelab/scalar.hpp"

namespace squeezelab {

// Deterministic generator descriptions for the set families the experiments
// run over. Equal specs (including seed) generate equal sets, always.
struct FamilySpec {
  enum class Kind {
    kAP,             // {1, ..., n}
    kGAP,            // {1 + sum_i j_i * step_i : 0 <= j_i < dim_i}, first n
    kGeometric,      // {ratio^i : 0 <= i < n}
    kConvexSquares,  // {j^2 : 1 <= j <= n}
    kRandomInteger,  // n distinct uniform draws from [lo, hi]
    kRandomRational, // n distinct num/den with uniform num and den draws
  };

  Kind kind = Kind::kAP;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;

  // kGAP
  std::vector<std::uint32_t> dims;
  std::vector<std::int64_t> steps;
  // kGeometric
  Scalar geo_ratio = Scalar(2);
  // kRandomInteger
  std::int64_t int_lo = 1, int_hi = 1'000'000;
  // kRandomRational
  std::int64_t num_lo = 1, num_hi = 1'000;
  std::int64_t den_lo = 1, den_hi = 30;

  // Parses the CLI spelling: "ap", "convex", "gap:r=2,dims=3x3,steps=1:10",
  // "geo:2", "geo:3/2", "randint:1..1000000", "randrat:-50..50/1..8".
  // Throws ParseError on malformed text.
  static FamilySpec parse(std::string_view text, std::uint32_t n, std::uint64_t seed);

  // Canonical spelling, reparseable by parse(); used in reports.
  std::string str() const;
};

// Generates the family. Throws InfeasibleSpec when the requested cardinality
// cannot be met (GAP dims too small, random range narrower than n, ...).
NumSet generate(const FamilySpec& spec);

}  // namespace squeezelab

#endif  // SQUEEZELAB_FAMILIES_HPP_
