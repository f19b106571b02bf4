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

#ifndef SQUEEZELAB_SQUEEZE_HPP_
#define SQUEEZELAB_SQUEEZE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "squeezelab/convex.hpp"
#include "squeezelab/numset.hpp"
#include "squeezelab/scalar.hpp"

namespace squeezelab {

// Which shifted image of the input set the packing walks along.
enum class Variant {
  kShiftPlus,       // images f(a + .), f(a' + .) of additive shifts
  kShiftMinus,      // images f(. - a'), f(. - a) of subtractive shifts
  kMultiplicative,  // dilates x * ., x' * . of a positive set
};

const char* variant_name(Variant v);  // "shift-plus" / "shift-minus" / "mult"

// Inclusive integer interval of block indices: n/(2k) < ell <= n/k - 1.
struct BlockIndexRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  std::uint64_t count() const { return empty() ? 0 : std::uint64_t(hi - lo + 1); }
};

struct Block {
  Scalar base;  // anchor image value the window is translated to
  NumSet elems; // base + window
};

// Constructive, exactly verified witness that the target set
// f(shifted A) + (kD - kD) holds at least certified_count elements: disjoint
// translates of the non-negative half of kD - kD, one per block index.
struct SqueezeCertificate {
  Variant variant = Variant::kShiftPlus;
  std::string fn;       // ConvexFn::describe() of the map used
  unsigned k = 1;
  Scalar pair_lo;       // (a, a'): consecutive pair with minimal gap
  Scalar pair_hi;       //          (minimal ratio for the multiplicative variant)
  NumSet shift_diffs;   // D: image differences over the lower half indices
  Scalar spacing;       // t: window radius and claimed minimum anchor spacing
  // True when every shift difference is positive, i.e. max(D) bounds the
  // diameter of D and kD - kD sits strictly inside (-kt, kt). When shift
  // differences cross zero (possible for the subtractive variant), t is the
  // diameter of D instead and kD - kD sits in the closed interval [-kt, kt].
  bool open_range = true;
  NumSet diffs;         // kD - kD
  NumSet window;        // non-negative part of kD - kD, within [0, kt]
  BlockIndexRange block_range;
  NumSet anchors;       // elements a_{k*ell} the blocks are anchored at
  std::vector<Block> blocks;
  // 1 if the boundary value k*t had to be dropped from the window to keep
  // the translates disjoint, else 0.
  int corrections = 0;
  // Exact check of the spacing claim: consecutive anchor images at least
  // k*t apart. Guaranteed (and required) for the shift-plus and
  // multiplicative variants; recorded for shift-minus, where disjointness
  // of the actual translates is the binding check.
  bool claim_holds = true;
  std::uint64_t certified_count = 0;       // |block_range| * |window|
  std::uint64_t target_superset_card = 0;  // |f(shifted A) + (kD - kD)|
};

// D for the given variant: differences of the two shifted images at the
// first half of A (indices j <= |A|/2, 1-based), deduplicated. (lo, hi) is
// the minimal pair (a, a'). |A| must be even.
NumSet build_shift_diffs(Variant variant, const ConvexFn& f, const NumSet& a, const Scalar& lo,
                         const Scalar& hi);

// Integers ell with n/(2k) < ell <= n/k - 1 (exact rational comparisons).
BlockIndexRange block_index_range(std::uint64_t n, unsigned k);

// Builds and exactly verifies the packing certificate. Throws:
//   OddCardinality        |A| odd
//   EmptyBlockRange       no valid block index for (|A|, k)
//   NotConvexOnDomain     f not certifiably strictly convex on the spans
//   PreconditionViolated  any exact verification step fails
//   GuardExceeded         an intermediate set would exceed the guard
// The multiplicative variant ignores f and requires A to be positive.
SqueezeCertificate build_certificate(Variant variant, const ConvexFn& f, const NumSet& a,
                                     unsigned k, const CardinalityGuard& guard);

// The count the certificate witnesses. Equals |block_range| * |window|, and
// when corrections == 0 is >= |block_range| * ceil(|kD - kD| / 2).
std::uint64_t certified_lower_bound(const SqueezeCertificate& cert);

}  // namespace squeezelab

#endif  // SQUEEZELAB_SQUEEZE_HPP_
