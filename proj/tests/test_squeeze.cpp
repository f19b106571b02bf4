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
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "squeezelab/convex.hpp"
#include "squeezelab/errors.hpp"
#include "squeezelab/families.hpp"
#include "squeezelab/numset.hpp"
#include "squeezelab/prng.hpp"
#include "squeezelab/scalar.hpp"
#include "squeezelab/squeeze.hpp"

using namespace squeezelab;
namespace o = squeezelab::oracle;

namespace {
const ConvexFn kSq = ConvexFn::square();
const CardinalityGuard kGuard{};

NumSet rs(std::initializer_list<Scalar> xs) { return NumSet::from_scalars(std::vector<Scalar>(xs)); }

// Internal-consistency checks every built certificate must satisfy,
// independent of which instance produced it.
void check_consistency(const SqueezeCertificate& c, const NumSet& a) {
  CHECK(c.shift_diffs.size() == a.size() / 2);  // strict monotonicity in j
  CHECK(c.diffs == k_diff(c.shift_diffs, c.k, kGuard));
  const Scalar kt = Scalar(std::int64_t(c.k)) * c.spacing;
  REQUIRE(c.window.size() > 0);
  CHECK(c.window.front() == Scalar(0));
  for (std::size_t i = 0; i < c.window.size(); ++i) {
    CHECK(c.diffs.contains(c.window.at(i)));
    if (c.open_range) {
      CHECK(c.window.at(i) < kt);
    } else {
      CHECK(c.window.at(i) <= kt);
    }
  }
  CHECK_FALSE(c.block_range.empty());
  CHECK(c.anchors.size() == c.block_range.count());
  REQUIRE(c.blocks.size() == c.block_range.count());
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const Block& blk = c.blocks[b];
    REQUIRE(blk.elems.size() == c.window.size());
    for (std::size_t i = 0; i < c.window.size(); ++i) {
      CHECK(blk.elems.at(i) == blk.base + c.window.at(i));
    }
  }
  // Pairwise disjointness is the binding exact check: re-derive it by
  // comparing the union cardinality against the sum of block sizes.
  std::uint64_t union_card = 0;
  for (const Block& blk : c.blocks) union_card += blk.elems.size();
  std::vector<Scalar> all;
  for (const Block& blk : c.blocks) {
    for (std::size_t i = 0; i < blk.elems.size(); ++i) all.push_back(blk.elems.at(i));
  }
  const NumSet unioned = NumSet::from_scalars(std::move(all));
  CHECK(unioned.size() == union_card);
  CHECK(c.certified_count == c.block_range.count() * c.window.size());
  CHECK(certified_lower_bound(c) == c.certified_count);
  CHECK(c.target_superset_card >= c.certified_count);
  CHECK((c.corrections == 0 || c.corrections == 1));
}
}  // namespace

TEST_CASE("shift difference spec examples") {
  // additive images, smallest-gap pair supplied explicitly
  CHECK(build_shift_diffs(Variant::kShiftPlus, kSq, NumSet::of({0, 1}), Scalar(0), Scalar(1)) ==
        NumSet::of({1}));
  CHECK(build_shift_diffs(Variant::kShiftPlus, kSq, NumSet::of({0, 1, 2, 4}), Scalar(0),
                          Scalar(1)) == NumSet::of({1, 3}));
  // dilate images with an explicit pair
  CHECK(build_shift_diffs(Variant::kMultiplicative, kSq, NumSet::of({2, 3, 5, 7}), Scalar(2),
                          Scalar(3)) == NumSet::of({2, 3}));
  // subtractive images over {1..8}
  CHECK(build_shift_diffs(Variant::kShiftMinus, kSq, NumSet::of({1, 2, 3, 4, 5, 6, 7, 8}),
                          Scalar(1), Scalar(2)) == NumSet::of({-5, -3, -1, 1}));
  CHECK_THROWS_AS(
      build_shift_diffs(Variant::kShiftPlus, kSq, NumSet::of({0, 1, 2}), Scalar(0), Scalar(1)),
      OddCardinality);
}

TEST_CASE("block index ranges") {
  const BlockIndexRange r16 = block_index_range(16, 1);
  CHECK(r16.lo == 9);
  CHECK(r16.hi == 15);
  CHECK(r16.count() == 7);
  const BlockIndexRange r8 = block_index_range(8, 1);
  CHECK(r8.lo == 5);
  CHECK(r8.hi == 7);
  const BlockIndexRange r12 = block_index_range(12, 2);
  CHECK(r12.lo == 4);
  CHECK(r12.hi == 5);
  CHECK(block_index_range(4, 4).empty());
  CHECK(block_index_range(2, 1).empty());
  CHECK(block_index_range(8, 4).empty());  // (1, 1] holds no integer
}

TEST_CASE("subtractive certificate over {1..8}") {
  const NumSet a = NumSet::of({1, 2, 3, 4, 5, 6, 7, 8});
  const SqueezeCertificate c = build_certificate(Variant::kShiftMinus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(1));
  CHECK(c.pair_hi == Scalar(2));
  CHECK(c.shift_diffs == NumSet::of({-5, -3, -1, 1}));
  CHECK(c.spacing == Scalar(6));  // diameter of D: shift differences cross zero
  CHECK_FALSE(c.open_range);
  CHECK(c.diffs.size() == 7);  // D is a step-2 progression, so D-D collapses
  CHECK(c.window == NumSet::of({0, 2, 4, 6}));  // closed: k*t stays in
  CHECK(c.block_range.lo == 5);
  CHECK(c.block_range.hi == 7);
  CHECK(c.anchors == NumSet::of({5, 6, 7}));
  REQUIRE(c.blocks.size() == 3);
  CHECK(c.blocks[0].base == Scalar(9));
  CHECK(c.blocks[0].elems == NumSet::of({9, 11, 13, 15}));
  CHECK(c.blocks[1].base == Scalar(16));
  CHECK(c.blocks[1].elems == NumSet::of({16, 18, 20, 22}));
  CHECK(c.blocks[2].base == Scalar(25));
  CHECK(c.blocks[2].elems == NumSet::of({25, 27, 29, 31}));
  CHECK(c.corrections == 0);
  CHECK(c.claim_holds);  // 16-9 = 7 >= 6 and 25-16 = 9 >= 6
  CHECK(c.certified_count == 12);
}

TEST_CASE("subtractive certificate over {1..12} with k=2") {
  const NumSet a = NumSet::of({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  const SqueezeCertificate c = build_certificate(Variant::kShiftMinus, kSq, a, 2, kGuard);
  check_consistency(c, a);
  CHECK(c.shift_diffs == NumSet::of({-9, -7, -5, -3, -1, 1}));
  CHECK(c.spacing == Scalar(10));
  CHECK(c.diffs.size() == 21);
  CHECK(c.window.size() == 11);
  CHECK(c.window.back() == Scalar(20));  // k*t retained
  CHECK(c.block_range.lo == 4);
  CHECK(c.block_range.hi == 5);
  CHECK(c.anchors == NumSet::of({8, 10}));
  REQUIRE(c.blocks.size() == 2);
  CHECK(c.blocks[0].base == Scalar(36));
  CHECK(c.blocks[1].base == Scalar(64));
  CHECK(c.certified_count == 22);
}

TEST_CASE("subtractive certificate over {0,1,2,3}") {
  const NumSet a = NumSet::of({0, 1, 2, 3});
  const SqueezeCertificate c = build_certificate(Variant::kShiftMinus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(0));
  CHECK(c.pair_hi == Scalar(1));
  CHECK(c.shift_diffs == NumSet::of({-1, 1}));
  CHECK(c.spacing == Scalar(2));
  CHECK(c.window == NumSet::of({0, 2}));
  CHECK(c.block_range.lo == 3);
  CHECK(c.block_range.hi == 3);
  CHECK(c.anchors == NumSet::of({2}));
  REQUIRE(c.blocks.size() == 1);
  CHECK(c.blocks[0].base == Scalar(1));
  CHECK(c.blocks[0].elems == NumSet::of({1, 3}));
  CHECK(c.certified_count == 2);
}

TEST_CASE("additive certificate over {1..8}") {
  const NumSet a = NumSet::of({1, 2, 3, 4, 5, 6, 7, 8});
  const SqueezeCertificate c = build_certificate(Variant::kShiftPlus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.shift_diffs == NumSet::of({5, 7, 9, 11}));
  CHECK(c.spacing == Scalar(11));
  CHECK(c.open_range);  // every shift difference positive
  CHECK(c.window == NumSet::of({0, 2, 4, 6}));
  CHECK(c.anchors == NumSet::of({5, 6, 7}));
  REQUIRE(c.blocks.size() == 3);
  CHECK(c.blocks[0].base == Scalar(36));
  CHECK(c.blocks[1].base == Scalar(49));
  CHECK(c.blocks[2].base == Scalar(64));
  CHECK(c.claim_holds);
  CHECK(c.corrections == 0);
  CHECK(c.certified_count == 12);
}

TEST_CASE("additive certificate over {1..16}") {
  const NumSet a = generate(FamilySpec::parse("ap", 16, 0));
  const SqueezeCertificate c = build_certificate(Variant::kShiftPlus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(1));
  CHECK(c.pair_hi == Scalar(2));
  CHECK(c.shift_diffs == NumSet::of({5, 7, 9, 11, 13, 15, 17, 19}));
  CHECK(c.spacing == Scalar(19));
  CHECK(c.diffs.size() == 15);
  CHECK(c.window == NumSet::of({0, 2, 4, 6, 8, 10, 12, 14}));
  CHECK(c.block_range.lo == 9);
  CHECK(c.block_range.hi == 15);
  REQUIRE(c.blocks.size() == 7);
  CHECK(c.blocks[0].base == Scalar(100));
  CHECK(c.blocks[6].base == Scalar(256));
  CHECK(c.certified_count == 56);
  CHECK(c.target_superset_card == 215);
  CHECK(c.corrections == 0);
  CHECK(c.claim_holds);
}

TEST_CASE("multiplicative certificate over {1,2,4,8}") {
  const NumSet a = NumSet::of({1, 2, 4, 8});
  const SqueezeCertificate c = build_certificate(Variant::kMultiplicative, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(1));  // ratio ties resolve to the lowest index
  CHECK(c.pair_hi == Scalar(2));
  CHECK(c.shift_diffs == NumSet::of({1, 2}));
  CHECK(c.spacing == Scalar(2));
  CHECK(c.open_range);
  CHECK(c.window == NumSet::of({0, 1}));
  CHECK(c.anchors == NumSet::of({4}));
  REQUIRE(c.blocks.size() == 1);
  CHECK(c.blocks[0].base == Scalar(4));
  CHECK(c.blocks[0].elems == NumSet::of({4, 5}));
  CHECK(c.certified_count == 2);
  CHECK(c.claim_holds);
}

TEST_CASE("multiplicative certificate over {2,3,5,7}") {
  const NumSet a = NumSet::of({2, 3, 5, 7});
  const SqueezeCertificate c = build_certificate(Variant::kMultiplicative, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(5));  // minimal-ratio consecutive pair
  CHECK(c.pair_hi == Scalar(7));
  CHECK(c.shift_diffs == NumSet::of({4, 6}));
  CHECK(c.spacing == Scalar(6));
  CHECK(c.window == NumSet::of({0, 2}));
  CHECK(c.anchors == NumSet::of({5}));
  REQUIRE(c.blocks.size() == 1);
  CHECK(c.blocks[0].base == Scalar(25));
  CHECK(c.blocks[0].elems == NumSet::of({25, 27}));
  CHECK(c.certified_count == 2);
}

TEST_CASE("rational arithmetic progression with step 1/2") {
  const NumSet a = rs({Scalar(1, 2), Scalar(1), Scalar(3, 2), Scalar(2), Scalar(5, 2), Scalar(3),
                       Scalar(7, 2), Scalar(4)});
  const SqueezeCertificate c = build_certificate(Variant::kShiftPlus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(1, 2));
  CHECK(c.pair_hi == Scalar(1));
  CHECK(c.shift_diffs == rs({Scalar(5, 4), Scalar(7, 4), Scalar(9, 4), Scalar(11, 4)}));
  CHECK(c.spacing == Scalar(11, 4));
  CHECK(c.window == rs({Scalar(0), Scalar(1, 2), Scalar(1), Scalar(3, 2)}));
  CHECK(c.anchors == rs({Scalar(5, 2), Scalar(3), Scalar(7, 2)}));
  REQUIRE(c.blocks.size() == 3);
  CHECK(c.blocks[0].base == Scalar(9));
  CHECK(c.blocks[1].base == Scalar(49, 4));
  CHECK(c.blocks[2].base == Scalar(16));
  CHECK(c.claim_holds);
  CHECK(c.certified_count == 12);
}

TEST_CASE("vacuous parameter combinations throw with exact bounds") {
  const NumSet a = NumSet::of({1, 2, 3, 4, 5, 6, 7, 8});
  try {
    build_certificate(Variant::kShiftPlus, kSq, a, 4, kGuard);
    FAIL("expected EmptyBlockRange");
  } catch (const EmptyBlockRange& e) {
    CHECK(e.lo() == "1");
    CHECK(e.hi() == "1");
  }
  try {
    build_certificate(Variant::kShiftPlus, kSq, NumSet::of({1, 2, 3, 4}), 4, kGuard);
    FAIL("expected EmptyBlockRange");
  } catch (const EmptyBlockRange& e) {
    CHECK(e.lo() == "1/2");
    CHECK(e.hi() == "0");
  }
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(build_certificate(Variant::kShiftPlus, kSq, NumSet::of({1, 2, 3}), 1, kGuard),
                  OddCardinality);
  // dilate images demand a strictly positive set
  CHECK_THROWS_AS(
      build_certificate(Variant::kMultiplicative, kSq, NumSet::of({0, 1, 2, 3}), 1, kGuard),
      PreconditionViolated);
  CHECK_THROWS_AS(
      build_certificate(Variant::kMultiplicative, kSq, NumSet::of({-2, -1, 1, 2}), 1, kGuard),
      PreconditionViolated);
  // square is not strictly convex across a flat second-derivative claim:
  // an affine map must be rejected outright.
  CHECK_THROWS_AS(build_certificate(Variant::kShiftPlus,
                                    ConvexFn::polynomial({Scalar(0), Scalar(1)}),
                                    NumSet::of({1, 2, 3, 4}), 1, kGuard),
                  NotConvexOnDomain);
}

TEST_CASE("subtractive variant can record a failed spacing claim yet verify") {
  // Smallest-gap pair deep in the upper half: anchor images nearly collide,
  // but the translates happen to interleave disjointly.
  const NumSet a = NumSet::of({0, 10, 20, 30, 40, 41, 50, 60});
  const SqueezeCertificate c = build_certificate(Variant::kShiftMinus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(40));
  CHECK(c.pair_hi == Scalar(41));
  CHECK(c.shift_diffs == NumSet::of({21, 41, 61, 81}));
  CHECK(c.open_range);  // all shift differences positive even for subtractive
  CHECK(c.spacing == Scalar(81));
  CHECK(c.window == NumSet::of({0, 20, 40, 60}));
  REQUIRE(c.blocks.size() == 3);
  CHECK(c.blocks[0].base == Scalar(1));   // f(40 - 41)
  CHECK(c.blocks[1].base == Scalar(0));   // f(41 - 41)
  CHECK(c.blocks[2].base == Scalar(81));  // f(50 - 41)
  CHECK_FALSE(c.claim_holds);             // |0 - 1| < 81
  CHECK(c.certified_count == 12);
}

TEST_CASE("subtractive variant with one far outlier") {
  const NumSet a = NumSet::of({-1000, 1, 2, 3, 4, 5, 6, 7});
  const SqueezeCertificate c = build_certificate(Variant::kShiftMinus, kSq, a, 1, kGuard);
  check_consistency(c, a);
  CHECK(c.pair_lo == Scalar(1));
  CHECK(c.pair_hi == Scalar(2));
  CHECK(c.shift_diffs == NumSet::of({-3, -1, 1, 2003}));
  CHECK_FALSE(c.open_range);
  CHECK(c.spacing == Scalar(2006));
  CHECK(c.window == NumSet::of({0, 2, 4, 2002, 2004, 2006}));
  CHECK(c.anchors == NumSet::of({4, 5, 6}));
  REQUIRE(c.blocks.size() == 3);
  CHECK(c.blocks[0].base == Scalar(4));
  CHECK(c.blocks[1].base == Scalar(9));
  CHECK(c.blocks[2].base == Scalar(16));
  CHECK_FALSE(c.claim_holds);  // anchor images 4, 9, 16 are far closer than 2006
  CHECK(c.certified_count == 18);
}

TEST_CASE("subtractive variant rejects colliding translates exactly") {
  const NumSet a = NumSet::of({104, 166, 194, 268, 351, 374, 425, 442, 641, 919});
  CHECK_THROWS_AS(build_certificate(Variant::kShiftMinus, kSq, a, 1, kGuard),
                  PreconditionViolated);
}

TEST_CASE("difference identity: shift differences are a dilated lower half") {
  // With the square map, D is an affine image of the lower half A', so
  // kD - kD = (2 * gap) . (kA' - kA') for both shift variants, and
  // (ratio gap) . (kX' - kX') for the dilate variant.
  SplitMix64 rng(20260819);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 * rng.in_range(2, 8);
    const NumSet a = o::random_rationals(rng, n, -300, 300, 8);
    const auto [lo, hi] = min_gap_pair(a);
    const NumSet half = half_lower(a);
    const NumSet dp = build_shift_diffs(Variant::kShiftPlus, kSq, a, lo, hi);
    const NumSet dm = build_shift_diffs(Variant::kShiftMinus, kSq, a, lo, hi);
    const Scalar beta = Scalar(2) * (hi - lo);
    for (unsigned k = 1; k <= 3; ++k) {
      const NumSet rhs = dilate(beta, k_diff(half, k, kGuard));
      CHECK(k_diff(dp, k, kGuard) == rhs);
      CHECK(k_diff(dm, k, kGuard) == rhs);  // symmetric set: sign irrelevant
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 * rng.in_range(2, 8);
    const NumSet x = o::random_rationals(rng, n, 1, 400, 6);
    const auto [lo, hi] = min_ratio_pair(x);
    const NumSet half = half_lower(x);
    const NumSet d = build_shift_diffs(Variant::kMultiplicative, kSq, x, lo, hi);
    for (unsigned k = 1; k <= 3; ++k) {
      CHECK(k_diff(d, k, kGuard) == dilate(hi - lo, k_diff(half, k, kGuard)));
    }
  }
}

TEST_CASE("random positive pools always certify for monotone variants") {
  // On positive sets the additive and dilate spacing claims are theorems,
  // so construction either proves the count or reports a vacuous range.
  SplitMix64 rng(0x5eedf00d);
  int built = 0, vacuous = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 * rng.in_range(4, 8);
    const unsigned k = unsigned(rng.in_range(1, 3));
    const NumSet a = o::random_rationals(rng, n, 1, 500, 6);
    const Variant v = (trial % 2 == 0) ? Variant::kShiftPlus : Variant::kMultiplicative;
    try {
      const SqueezeCertificate c = build_certificate(v, kSq, a, k, kGuard);
      check_consistency(c, a);
      CHECK(c.open_range);
      CHECK(c.claim_holds);
      CHECK(c.corrections == 0);
      ++built;
    } catch (const EmptyBlockRange&) {
      CHECK(block_index_range(a.size(), k).empty());
      ++vacuous;
    }
  }
  CHECK(built > 0);
}

TEST_CASE("random convex pools certify for the subtractive variant") {
  SplitMix64 rng(0xabcdef);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 * rng.in_range(2, 6);
    const NumSet a = o::random_convex(rng, n);
    try {
      const SqueezeCertificate c = build_certificate(Variant::kShiftMinus, kSq, a, 1, kGuard);
      check_consistency(c, a);
    } catch (const EmptyBlockRange&) {
      CHECK(block_index_range(a.size(), 1).empty());
    }
  }
}
