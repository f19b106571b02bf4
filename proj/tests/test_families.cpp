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
#include <string>

#include "doctest.h"
#include "squeezelab/errors.hpp"
#include "squeezelab/families.hpp"
#include "squeezelab/numset.hpp"
#include "squeezelab/scalar.hpp"

using namespace squeezelab;

namespace {
NumSet gen(const std::string& text, std::uint32_t n, std::uint64_t seed = 0) {
  return generate(FamilySpec::parse(text, n, seed));
}
}  // namespace

TEST_CASE("structured families match their closed forms") {
  CHECK(gen("ap", 5) == NumSet::of({1, 2, 3, 4, 5}));
  CHECK(gen("ap", 1) == NumSet::of({1}));
  CHECK(gen("convex", 4) == NumSet::of({1, 4, 9, 16}));
  CHECK(gen("geo:2", 4) == NumSet::of({1, 2, 4, 8}));
  CHECK(gen("geo:10", 3) == NumSet::of({1, 10, 100}));
  CHECK(gen("gap:r=2,dims=3x3,steps=1:10", 9) ==
        NumSet::of({1, 2, 3, 11, 12, 13, 21, 22, 23}));
}

TEST_CASE("rational geometric ratio") {
  const NumSet g = gen("geo:3/2", 4);
  REQUIRE(g.size() == 4);
  CHECK(g.at(0) == Scalar(1));
  CHECK(g.at(1) == Scalar(3, 2));
  CHECK(g.at(2) == Scalar(9, 4));
  CHECK(g.at(3) == Scalar(27, 8));
}

TEST_CASE("random families are deterministic for fixed parameters") {
  for (const char* fam : {"randint:1..1000000", "randrat:-50..50/1..8"}) {
    const NumSet a = gen(fam, 40, 1234);
    const NumSet b = gen(fam, 40, 1234);
    const NumSet c = gen(fam, 40, 1235);
    CHECK(a == b);
    CHECK_FALSE(a == c);  // astronomically unlikely to collide
  }
}

TEST_CASE("random families respect cardinality and ranges") {
  const NumSet ints = gen("randint:-7..9", 17, 99);  // full range forced
  CHECK(ints.size() == 17);
  for (std::size_t i = 0; i < ints.size(); ++i) {
    CHECK(ints.at(i) >= Scalar(-7));
    CHECK(ints.at(i) <= Scalar(9));
    CHECK(ints.at(i).is_integer());
  }
  const NumSet rats = gen("randrat:1..10/2..5", 25, 7);
  CHECK(rats.size() == 25);
  for (std::size_t i = 0; i < rats.size(); ++i) {
    CHECK(rats.at(i) > Scalar(0));
    CHECK(rats.at(i) <= Scalar(10));
  }
}

TEST_CASE("default random ranges live on the struct, spellings need them") {
  const FamilySpec defaults;
  CHECK(defaults.int_lo == 1);
  CHECK(defaults.int_hi == 1'000'000);
  CHECK(defaults.num_lo == 1);
  CHECK(defaults.num_hi == 1'000);
  CHECK(defaults.den_lo == 1);
  CHECK(defaults.den_hi == 30);
  // The textual forms require explicit ranges; base^exp literals parse.
  CHECK_THROWS_AS(FamilySpec::parse("randint", 10, 5), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("randrat", 10, 5), ParseError);
  const FamilySpec p = FamilySpec::parse("randint:1..10^6", 10, 5);
  CHECK(p.int_hi == 1'000'000);
}

TEST_CASE("str round-trips through parse") {
  const char* specs[] = {
      "ap",       "convex",           "geo:2",
      "geo:3/2",  "randint:1..1000",  "randrat:-50..50/1..8",
      "gap:r=2,dims=3x3,steps=1:10",
  };
  for (const char* text : specs) {
    const FamilySpec s = FamilySpec::parse(text, 8, 77);
    const FamilySpec t = FamilySpec::parse(s.str(), 8, 77);
    CHECK(s.str() == t.str());
    CHECK(generate(s) == generate(t));
  }
}

TEST_CASE("arithmetic progression difference-set closed forms") {
  // |A - A| = 2n - 1 and |k(A') - k(A')| = 2k(n/2 - 1) + 1 for the lower
  // half A' of {1..n}; these anchor several report cross-checks.
  CardinalityGuard guard{};
  for (std::uint32_t n : {8u, 12u}) {
    const NumSet a = gen("ap", n);
    CHECK(difference_set(a, a, guard).size() == 2 * n - 1);
    const NumSet half = half_lower(a);
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const NumSet kd = k_diff(half, k, guard);
      CHECK(kd.size() == 2 * k * (n / 2 - 1) + 1);
    }
  }
}

TEST_CASE("infeasible requests throw") {
  CHECK_THROWS_AS(gen("randint:1..5", 9, 3), InfeasibleSpec);     // range too narrow
  CHECK_THROWS_AS(gen("gap:r=2,dims=2x2,steps=1:10", 5), InfeasibleSpec);
  CHECK_THROWS_AS(gen("randrat:1..2/1..1", 3, 3), InfeasibleSpec);
}

TEST_CASE("malformed specs throw ParseError") {
  CHECK_THROWS_AS(FamilySpec::parse("", 4, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("apx", 4, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("geo:", 4, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("geo:0", 4, 0), ParseError);     // ratio must be > 1
  CHECK_THROWS_AS(FamilySpec::parse("geo:1", 4, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("randint:5..1", 4, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("randint:abc", 4, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("randrat:1..10", 4, 0), ParseError);  // missing dens
  CHECK_THROWS_AS(FamilySpec::parse("gap:r=2,dims=3x3", 9, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("gap:r=2,dims=3x3,steps=1", 9, 0), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("bogus:1", 4, 0), ParseError);
}

TEST_CASE("gap takes the first n points in sorted order") {
  // dims 3x3 gives 9 lattice points; asking for 4 keeps the smallest 4.
  CHECK(gen("gap:r=2,dims=3x3,steps=1:10", 4) == NumSet::of({1, 2, 3, 11}));
}
