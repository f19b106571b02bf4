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

#include "squeezelab/squeeze.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "squeezelab/errors.hpp"

namespace squeezelab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

i64 floor_div(i64 num, i64 den) {
  // den > 0 here; round toward negative infinity.
  i64 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

NumSet singleton(const Scalar& s) { return NumSet::from_scalars({s}); }

// Image value a block is anchored at for a given source element of A.
Scalar anchor_image(Variant v, const ConvexFn& f, const Scalar& lo, const Scalar& hi,
                    const Scalar& elem) {
  switch (v) {
    case Variant::kShiftPlus:
      return f(lo + elem);
    case Variant::kShiftMinus:
      return f(elem - hi);
    case Variant::kMultiplicative:
      return lo * elem;
  }
  throw PreconditionViolated("anchor_image: unknown variant");
}

// The shifted image of A that all blocks (and the target superset) live in.
NumSet base_image_set(Variant v, const ConvexFn& f, const NumSet& a, const Scalar& lo,
                      const Scalar& hi, const CardinalityGuard& guard) {
  switch (v) {
    case Variant::kShiftPlus:
      return apply(f, sumset(a, singleton(lo), guard));
    case Variant::kShiftMinus:
      return apply(f, sumset(a, singleton(-hi), guard));
    case Variant::kMultiplicative:
      return dilate(lo, a);
  }
  throw PreconditionViolated("base_image_set: unknown variant");
}

// The per-index image differences d_j, in j order (j = 1..N/2, 1-based).
std::vector<Scalar> shift_diff_sequence(Variant v, const ConvexFn& f, const NumSet& a,
                                        const Scalar& lo, const Scalar& hi) {
  const std::size_t half = a.size() / 2;
  std::vector<Scalar> out;
  out.reserve(half);
  for (std::size_t j = 0; j < half; ++j) {
    const Scalar elem = a.at(j);
    switch (v) {
      case Variant::kShiftPlus:
        out.push_back(f(hi + elem) - f(lo + elem));
        break;
      case Variant::kShiftMinus:
        out.push_back(f(elem - hi) - f(elem - lo));
        break;
      case Variant::kMultiplicative:
        out.push_back((hi - lo) * elem);
        break;
    }
  }
  return out;
}

void check_convex_span(Variant v, const ConvexFn& f, const NumSet& a, const Scalar& lo,
                       const Scalar& hi) {
  if (v == Variant::kMultiplicative) return;  // operates on X directly, no f
  Scalar span_lo, span_hi;
  if (v == Variant::kShiftPlus) {
    span_lo = lo + a.front();
    span_hi = hi + a.back();
  } else {
    span_lo = a.front() - hi;
    span_hi = a.back() - lo;
  }
  if (!f.convex_on(span_lo, span_hi)) {
    throw NotConvexOnDomain(f.describe() + ": strict convexity not established on [" +
                            span_lo.str() + ", " + span_hi.str() + "]");
  }
}

// Gathers all block elements and checks that no value appears twice.
bool blocks_pairwise_disjoint(const std::vector<Block>& blocks) {
  bool all_i64 = true;
  std::size_t total = 0;
  for (const Block& b : blocks) {
    total += b.elems.size();
    all_i64 = all_i64 && b.elems.is_int64();
  }
  if (all_i64) {
    std::vector<i64> vals;
    vals.reserve(total);
    for (const Block& b : blocks) {
      const auto view = b.elems.int64_view();
      vals.insert(vals.end(), view.begin(), view.end());
    }
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
  }
  std::vector<Scalar> vals;
  vals.reserve(total);
  for (const Block& b : blocks) {
    std::vector<Scalar> s = b.elems.to_scalars();
    vals.insert(vals.end(), s.begin(), s.end());
  }
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

std::vector<Block> build_blocks(const NumSet& window, const std::vector<Scalar>& bases,
                                const CardinalityGuard& guard) {
  std::vector<Block> blocks;
  blocks.reserve(bases.size());
  for (const Scalar& base : bases) {
    blocks.push_back(Block{base, sumset(window, singleton(base), guard)});
  }
  return blocks;
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kShiftPlus:
      return "shift-plus";
    case Variant::kShiftMinus:
      return "shift-minus";
    case Variant::kMultiplicative:
      return "mult";
  }
  return "?";
}

BlockIndexRange block_index_range(u64 n, unsigned k) {
  if (k == 0) throw PreconditionViolated("block_index_range: k must be >= 1");
  const i64 ni = static_cast<i64>(n);
  const i64 ki = static_cast<i64>(k);
  BlockIndexRange r;
  r.lo = floor_div(ni, 2 * ki) + 1;     // smallest integer > n/(2k)
  r.hi = floor_div(ni - ki, ki);        // largest integer <= n/k - 1
  return r;
}

NumSet build_shift_diffs(Variant variant, const ConvexFn& f, const NumSet& a, const Scalar& lo,
                         const Scalar& hi) {
  if (a.size() % 2 != 0) {
    throw OddCardinality("build_shift_diffs: cardinality " + std::to_string(a.size()) +
                         " is odd");
  }
  if (a.size() < 2) throw TooSmall("build_shift_diffs: need at least 2 elements");
  if (!(lo < hi)) {
    throw PreconditionViolated("build_shift_diffs: pair must satisfy lo < hi");
  }
  if (variant == Variant::kMultiplicative && !(a.front() > Scalar(0))) {
    throw PreconditionViolated("build_shift_diffs: multiplicative variant needs a positive set");
  }
  check_convex_span(variant, f, a, lo, hi);
  return NumSet::from_scalars(shift_diff_sequence(variant, f, a, lo, hi));
}

SqueezeCertificate build_certificate(Variant variant, const ConvexFn& f, const NumSet& a,
                                     unsigned k, const CardinalityGuard& guard) {
  if (k == 0) throw PreconditionViolated("build_certificate: k must be >= 1");
  const std::size_t n = a.size();
  if (n % 2 != 0) {
    throw OddCardinality("build_certificate: cardinality " + std::to_string(n) + " is odd");
  }

  // Block index range first: when it is empty the bound is vacuous at this
  // scale and nothing else needs to be computed.
  const BlockIndexRange range = block_index_range(n, k);
  if (range.empty()) {
    const i64 ni = static_cast<i64>(n);
    const i64 ki = static_cast<i64>(k);
    throw EmptyBlockRange(Scalar(ni, 2 * ki).str(), (Scalar(ni, ki) - Scalar(1)).str());
  }
  // Nonempty range forces n/k - 1 > n/(2k), i.e. n > 2k >= 2, so n >= 4.

  SqueezeCertificate cert;
  cert.variant = variant;
  cert.fn = f.describe();
  cert.k = k;

  // The pair: consecutive elements at minimal gap, except the multiplicative
  // variant, which walks dilates x*X and needs the minimal-ratio pair (the
  // minimal gap of the exponent set).
  const auto pair = variant == Variant::kMultiplicative ? min_ratio_pair(a) : min_gap_pair(a);
  cert.pair_lo = pair.first;
  cert.pair_hi = pair.second;

  check_convex_span(variant, f, a, cert.pair_lo, cert.pair_hi);

  // Image differences over the lower half, exact monotonicity verified:
  // strictly increasing in j for the plus/multiplicative variants, strictly
  // decreasing for the minus variant. Either follows from strict convexity,
  // so a violation means the input contract was broken.
  const std::vector<Scalar> djs =
      shift_diff_sequence(variant, f, a, cert.pair_lo, cert.pair_hi);
  for (std::size_t j = 0; j + 1 < djs.size(); ++j) {
    const bool ok = variant == Variant::kShiftMinus ? djs[j + 1] < djs[j] : djs[j] < djs[j + 1];
    if (!ok) {
      throw PreconditionViolated(
          "build_certificate: image differences are not strictly monotone over the lower half");
    }
  }
  cert.shift_diffs = NumSet::from_scalars(djs);
  if (cert.shift_diffs.size() != n / 2) {
    throw PreconditionViolated("build_certificate: |D| != N/2 despite monotone differences");
  }

  const Scalar min_d = cert.shift_diffs.front();
  const Scalar max_d = cert.shift_diffs.back();
  cert.open_range = min_d > Scalar(0);
  // Window radius: with all differences positive, max(D) bounds the diameter
  // and the strict range inclusion holds; otherwise fall back to the diameter
  // of D, which the difference set attains (closed inclusion).
  cert.spacing = cert.open_range ? max_d : max_d - min_d;
  if (!(cert.spacing > Scalar(0))) {
    throw PreconditionViolated("build_certificate: nonpositive window radius");
  }

  cert.diffs = k_diff(cert.shift_diffs, k, guard);
  const Scalar kt = Scalar(static_cast<i64>(k)) * cert.spacing;

  // Exact range control: kD - kD inside (-kt, kt) when open, [-kt, kt] always.
  if (cert.open_range) {
    if (!(cert.diffs.front() > -kt && cert.diffs.back() < kt)) {
      throw PreconditionViolated("build_certificate: kD-kD escapes the open range (-kt, kt)");
    }
  } else {
    if (!(-kt <= cert.diffs.front() && cert.diffs.back() <= kt)) {
      throw PreconditionViolated("build_certificate: kD-kD escapes the closed range [-kt, kt]");
    }
  }

  // Non-negative window. No clipping can occur before the correction step
  // (max(kD-kD) <= kt in both regimes), so |window| = ceil(|kD-kD| / 2) here;
  // verified below via the symmetry count.
  const auto window_of = [&](bool drop_boundary) {
    std::vector<Scalar> w;
    const std::vector<Scalar> all = cert.diffs.to_scalars();
    for (const Scalar& v : all) {
      if (v.sign() < 0) continue;
      if (drop_boundary && v == kt) continue;
      w.push_back(v);
    }
    return NumSet::from_scalars(std::move(w));
  };
  cert.window = window_of(false);
  if (cert.window.size() != (cert.diffs.size() + 1) / 2) {
    throw PreconditionViolated("build_certificate: window size violates difference-set symmetry");
  }

  cert.block_range = range;

  // Anchor elements a_{k*ell} (1-based indices; k*(hi+1) <= n by the range
  // arithmetic, so the claim's right neighbor below is always in bounds).
  std::vector<Scalar> anchor_elems;
  std::vector<Scalar> bases;
  for (i64 ell = range.lo; ell <= range.hi; ++ell) {
    const Scalar elem = a.at(static_cast<std::size_t>(k * static_cast<u64>(ell)) - 1);
    anchor_elems.push_back(elem);
    bases.push_back(anchor_image(variant, f, cert.pair_lo, cert.pair_hi, elem));
  }
  cert.anchors = NumSet::from_scalars(anchor_elems);

  // The packing claim: consecutive anchor images at least k*t apart. In the
  // regimes where the anchor walk is provably monotone (all differences
  // positive, plus/multiplicative variant) this is a theorem given the
  // minimal pair, so a failed exact check aborts; otherwise it is recorded
  // and the disjointness check below is the binding soundness gate.
  cert.claim_holds = true;
  for (i64 ell = range.lo; ell <= range.hi; ++ell) {
    const Scalar left = anchor_image(variant, f, cert.pair_lo, cert.pair_hi,
                                     a.at(static_cast<std::size_t>(k * static_cast<u64>(ell)) - 1));
    const Scalar right =
        anchor_image(variant, f, cert.pair_lo, cert.pair_hi,
                     a.at(static_cast<std::size_t>(k * static_cast<u64>(ell + 1)) - 1));
    const bool directional = variant != Variant::kShiftMinus;
    const Scalar gap = directional ? right - left : (right - left).abs();
    if (!(gap >= kt)) {
      cert.claim_holds = false;
      if (cert.open_range && directional) {
        throw PreconditionViolated(
            "build_certificate: anchor image gap below k*t in the monotone regime");
      }
    }
  }

  // Build the translates and verify pairwise disjointness exactly. If the
  // closed-range boundary value k*t is in the window and causes the only
  // collision, drop it (recorded as a correction) and re-verify.
  cert.blocks = build_blocks(cert.window, bases, guard);
  cert.corrections = 0;
  if (!blocks_pairwise_disjoint(cert.blocks)) {
    const bool boundary_present = !cert.open_range && cert.window.back() == kt;
    if (boundary_present) {
      cert.window = window_of(true);
      cert.corrections = 1;
      cert.blocks = build_blocks(cert.window, bases, guard);
    }
    if (!boundary_present || !blocks_pairwise_disjoint(cert.blocks)) {
      throw PreconditionViolated(
          "build_certificate: translated blocks are not pairwise disjoint");
    }
  }

  cert.certified_count = range.count() * static_cast<u64>(cert.window.size());

  // Target superset: the full shifted image plus kD - kD. Every block sits
  // inside it by construction; membership is re-verified exactly anyway.
  const NumSet image = base_image_set(variant, f, a, cert.pair_lo, cert.pair_hi, guard);
  const NumSet target = sumset(image, cert.diffs, guard);
  cert.target_superset_card = target.size();
  u64 block_total = 0;
  for (const Block& b : cert.blocks) {
    block_total += b.elems.size();
    for (std::size_t i = 0; i < b.elems.size(); ++i) {
      if (!target.contains(b.elems.at(i))) {
        throw PreconditionViolated("build_certificate: block element escapes the target superset");
      }
    }
  }
  if (block_total != cert.certified_count) {
    throw PreconditionViolated("build_certificate: block size sum != |range| * |window|");
  }
  if (cert.certified_count > cert.target_superset_card) {
    throw PreconditionViolated("build_certificate: certified count exceeds the target superset");
  }
  return cert;
}

u64 certified_lower_bound(const SqueezeCertificate& cert) { return cert.certified_count; }

}  // namespace squeezelab
