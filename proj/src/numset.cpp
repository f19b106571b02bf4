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

#include "squeezelab/numset.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <unordered_set>

#include "squeezelab/errors.hpp"
#include "squeezelab/kernels.hpp"

namespace squeezelab {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

constexpr i64 kI64Max = std::numeric_limits<i64>::max();
constexpr i64 kI64Min = std::numeric_limits<i64>::min();
// floor(sqrt(INT64_MAX)); differences above this cannot be squared in int64.
constexpr i64 kSqrtI64Max = 3037000499LL;

// Path-selection limits for the int64 engine.
constexpr u64 kDenseSpanBits = u64{1} << 28;  // 32 MiB bitmap ceiling
constexpr u64 kFillPairLimit = u64{1} << 24;  // 128 MiB buffer ceiling
constexpr u64 kExactFillPairLimit = u64{1} << 22;
constexpr std::size_t kRowChunk = 4096;

bool fits_i64(i128 v) { return v >= i128(kI64Min) && v <= i128(kI64Max); }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class PairOp { kAdd, kSub, kMul, kSqDiff };

// Open-addressing int64 set used by the hash dedup path. Tracks occupancy in
// a bitmap so every int64 value (including INT64_MIN) is storable.
class I64HashSet {
 public:
  explicit I64HashSet(std::size_t expected) { rehash(std::max<std::size_t>(1024, expected * 2)); }

  void insert(i64 v) {
    std::size_t h = static_cast<std::size_t>(mix64(static_cast<u64>(v))) & mask_;
    while (occupied(h)) {
      if (slots_[h] == v) return;
      h = (h + 1) & mask_;
    }
    slots_[h] = v;
    used_[h >> 6] |= u64{1} << (h & 63);
    ++count_;
    if (count_ * 10 > slots_.size() * 7) grow();
  }

  std::size_t size() const { return count_; }

  std::vector<i64> extract_sorted() const {
    std::vector<i64> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (occupied(i)) out.push_back(slots_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool occupied(std::size_t i) const { return (used_[i >> 6] >> (i & 63)) & 1u; }

  void rehash(std::size_t min_slots) {
    std::size_t cap = 1;
    while (cap < min_slots) cap <<= 1;
    slots_.assign(cap, 0);
    used_.assign((cap + 63) / 64, 0);
    mask_ = cap - 1;
    count_ = 0;
  }

  void grow() {
    std::vector<i64> old = extract_sorted();
    rehash(slots_.size() * 2);
    for (i64 v : old) insert(v);
  }

  std::vector<i64> slots_;
  std::vector<u64> used_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

void run_kernel_row(PairOp op, i64 a, const i64* b, i64* out, std::size_t n) {
  const kern::Ops& k = kern::active_ops();
  switch (op) {
    case PairOp::kAdd:
      k.broadcast_add(a, b, out, n);
      break;
    case PairOp::kSub:
      k.broadcast_rsub(a, b, out, n);
      break;
    case PairOp::kMul:
      k.broadcast_mul(a, b, out, n);
      break;
    case PairOp::kSqDiff:
      k.broadcast_sqdiff(a, b, out, n);
      break;
  }
}

struct PairBounds {
  i64 lo;
  i64 hi;
};

// Exact min/max of op(a, b) over sorted nonempty views, or nullopt when some
// value might not fit in int64 (in which case the caller must go exact).
// Min/max are attained at interval corners because the ops are monotone in
// each argument once signs are fixed; evaluating all corners covers every
// sign split.
std::optional<PairBounds> pair_bounds(PairOp op, std::span<const i64> a, std::span<const i64> b) {
  const i128 af = a.front(), ab = a.back(), bf = b.front(), bb = b.back();
  i128 lo, hi;
  switch (op) {
    case PairOp::kAdd:
      lo = af + bf;
      hi = ab + bb;
      break;
    case PairOp::kSub:
      lo = af - bb;
      hi = ab - bf;
      break;
    case PairOp::kMul: {
      const i128 c[4] = {af * bf, af * bb, ab * bf, ab * bb};
      lo = hi = c[0];
      for (int i = 1; i < 4; ++i) {
        lo = std::min(lo, c[i]);
        hi = std::max(hi, c[i]);
      }
      break;
    }
    case PairOp::kSqDiff: {
      const i128 d = ab - af;
      if (d > kSqrtI64Max) return std::nullopt;
      lo = 0;
      hi = d * d;
      break;
    }
  }
  if (!fits_i64(lo) || !fits_i64(hi)) return std::nullopt;
  return PairBounds{static_cast<i64>(lo), static_cast<i64>(hi)};
}

// Visits op(a, b) row by row through the broadcast kernels. For kSqDiff the
// set is paired with itself and only the upper triangle (b index >= a index)
// is generated; squares are symmetric in the pair.
template <typename ChunkFn>
void for_each_row_chunk(PairOp op, std::span<const i64> a, std::span<const i64> b, ChunkFn&& fn) {
  i64 chunk[kRowChunk];
  const bool triangular = op == PairOp::kSqDiff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t start = triangular ? i : 0;
    for (std::size_t j = start; j < b.size(); j += kRowChunk) {
      const std::size_t len = std::min(kRowChunk, b.size() - j);
      run_kernel_row(op, a[i], b.data() + j, chunk, len);
      fn(chunk, len);
    }
  }
}

u64 pair_count(PairOp op, std::span<const i64> a, std::span<const i64> b) {
  if (op == PairOp::kSqDiff) {
    const u64 n = a.size();
    return n * (n + 1) / 2;
  }
  return u64(a.size()) * u64(b.size());
}

std::vector<i64> dedup_dense(PairOp op, std::span<const i64> a, std::span<const i64> b,
                             PairBounds bounds, const CardinalityGuard& guard, const char* name) {
  const u64 span = static_cast<u64>(static_cast<i128>(bounds.hi) - bounds.lo + 1);
  std::vector<u64> bits((span + 63) / 64, 0);
  const i64 lo = bounds.lo;
  for_each_row_chunk(op, a, b, [&](const i64* chunk, std::size_t len) {
    for (std::size_t t = 0; t < len; ++t) {
      const u64 off = static_cast<u64>(chunk[t] - lo);
      bits[off >> 6] |= u64{1} << (off & 63);
    }
  });
  u64 count = 0;
  for (u64 w : bits) count += static_cast<u64>(__builtin_popcountll(w));
  guard.check(count, name);
  std::vector<i64> out;
  out.reserve(count);
  for (std::size_t w = 0; w < bits.size(); ++w) {
    u64 word = bits[w];
    while (word != 0) {
      const int bit = __builtin_ctzll(word);
      out.push_back(lo + static_cast<i64>((u64(w) << 6) | unsigned(bit)));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<i64> dedup_fill(PairOp op, std::span<const i64> a, std::span<const i64> b,
                            const CardinalityGuard& guard, const char* name) {
  std::vector<i64> buf;
  buf.reserve(pair_count(op, a, b));
  for_each_row_chunk(op, a, b,
                     [&](const i64* chunk, std::size_t len) { buf.insert(buf.end(), chunk, chunk + len); });
  std::sort(buf.begin(), buf.end());
  buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
  guard.check(buf.size(), name);
  return buf;
}

std::vector<i64> dedup_hash(PairOp op, std::span<const i64> a, std::span<const i64> b,
                            const CardinalityGuard& guard, const char* name) {
  I64HashSet set(std::min<u64>(guard.max_card, 1u << 16));
  for_each_row_chunk(op, a, b, [&](const i64* chunk, std::size_t len) {
    for (std::size_t t = 0; t < len; ++t) set.insert(chunk[t]);
    if (set.size() > guard.max_card) throw GuardExceeded(guard.max_card, name);
  });
  guard.check(set.size(), name);
  return set.extract_sorted();
}

std::optional<std::vector<i64>> pairwise_int64(PairOp op, std::span<const i64> a,
                                               std::span<const i64> b, const CardinalityGuard& guard,
                                               const char* name) {
  const std::optional<PairBounds> bounds = pair_bounds(op, a, b);
  if (!bounds) return std::nullopt;

  const u64 pairs = pair_count(op, a, b);
  const u64 span = static_cast<u64>(static_cast<i128>(bounds->hi) - bounds->lo + 1);
  if (span <= kDenseSpanBits && span / 64 <= pairs) {
    return dedup_dense(op, a, b, *bounds, guard, name);
  }
  if (pairs <= kFillPairLimit) {
    return dedup_fill(op, a, b, guard, name);
  }
  return dedup_hash(op, a, b, guard, name);
}

Scalar scalar_op(PairOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case PairOp::kAdd:
      return a + b;
    case PairOp::kSub:
      return a - b;
    case PairOp::kMul:
      return a * b;
    case PairOp::kSqDiff:
      return (a - b).squared();
  }
  throw PreconditionViolated("unreachable pair op");
}

std::vector<Scalar> pairwise_exact(PairOp op, const std::vector<Scalar>& a,
                                   const std::vector<Scalar>& b, const CardinalityGuard& guard,
                                   const char* name) {
  const bool triangular = op == PairOp::kSqDiff;
  const u64 pairs = triangular ? u64(a.size()) * (a.size() + 1) / 2 : u64(a.size()) * u64(b.size());
  std::vector<Scalar> out;
  if (pairs <= kExactFillPairLimit) {
    out.reserve(pairs);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = triangular ? i : 0; j < b.size(); ++j) {
        out.push_back(scalar_op(op, a[i], b[j]));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    guard.check(out.size(), name);
    return out;
  }
  std::unordered_set<Scalar, ScalarHash> set;
  set.reserve(1u << 16);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = triangular ? i : 0; j < b.size(); ++j) {
      set.insert(scalar_op(op, a[i], b[j]));
      if (set.size() > guard.max_card) throw GuardExceeded(guard.max_card, name);
    }
  }
  out.assign(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

NumSet pairwise(PairOp op, const NumSet& a, const NumSet& b, const CardinalityGuard& guard,
                const char* name) {
  if (a.empty() || b.empty()) return NumSet();
  // |A op B| >= |A| + |B| - 1 for add/sub of sorted sets; fail fast if even
  // that floor breaks the guard.
  if (op == PairOp::kAdd || op == PairOp::kSub) {
    guard.check(u64(a.size()) + u64(b.size()) - 1, name);
  }
  if (a.is_int64() && b.is_int64()) {
    if (std::optional<std::vector<i64>> fast =
            pairwise_int64(op, a.int64_view(), b.int64_view(), guard, name)) {
      return NumSet::from_sorted_int64(std::move(*fast));
    }
  }
  return NumSet::from_scalars(pairwise_exact(op, a.to_scalars(), b.to_scalars(), guard, name));
}

}  // namespace

CardinalityGuard CardinalityGuard::from_env() {
  CardinalityGuard g;
  if (const char* env = std::getenv("SQUEEZELAB_MAX_CARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) g.max_card = v;
  }
  return g;
}

void CardinalityGuard::check(std::uint64_t produced, const char* op) const {
  if (produced > max_card) throw GuardExceeded(max_card, op);
}

NumSet NumSet::of(std::initializer_list<std::int64_t> values) {
  std::vector<i64> v(values);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return from_sorted_int64(std::move(v));
}

NumSet NumSet::from_scalars(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Canonical representation: demote to int64 when every element allows it.
  std::vector<i64> ints;
  ints.reserve(values.size());
  for (const Scalar& s : values) {
    const std::optional<i64> v = s.as_int64();
    if (!v) {
      NumSet out;
      out.rep_ = std::move(values);
      return out;
    }
    ints.push_back(*v);
  }
  return from_sorted_int64(std::move(ints));
}

NumSet NumSet::from_scalars_strict(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) {
      throw ParseError("duplicate element " + values[i].str());
    }
  }
  return from_scalars(std::move(values));
}

NumSet NumSet::from_sorted_int64(std::vector<std::int64_t> values) {
  assert(std::is_sorted(values.begin(), values.end()) &&
         std::adjacent_find(values.begin(), values.end()) == values.end());
  NumSet out;
  out.rep_ = std::move(values);
  return out;
}

std::size_t NumSet::size() const {
  return is_int64() ? std::get<0>(rep_).size() : std::get<1>(rep_).size();
}

Scalar NumSet::at(std::size_t i) const {
  assert(i < size());
  return is_int64() ? Scalar(std::get<0>(rep_)[i]) : std::get<1>(rep_)[i];
}

bool NumSet::contains(const Scalar& v) const {
  if (is_int64()) {
    const std::optional<i64> x = v.as_int64();
    if (!x) return false;
    const std::vector<i64>& r = std::get<0>(rep_);
    return std::binary_search(r.begin(), r.end(), *x);
  }
  const std::vector<Scalar>& r = std::get<1>(rep_);
  return std::binary_search(r.begin(), r.end(), v);
}

std::span<const std::int64_t> NumSet::int64_view() const {
  assert(is_int64());
  return std::get<0>(rep_);
}

const std::vector<Scalar>& NumSet::scalar_view() const {
  assert(!is_int64());
  return std::get<1>(rep_);
}

std::vector<Scalar> NumSet::to_scalars() const {
  if (!is_int64()) return std::get<1>(rep_);
  const std::vector<i64>& r = std::get<0>(rep_);
  std::vector<Scalar> out;
  out.reserve(r.size());
  for (i64 v : r) out.emplace_back(v);
  return out;
}

NumSet sumset(const NumSet& a, const NumSet& b, const CardinalityGuard& guard) {
  return pairwise(PairOp::kAdd, a, b, guard, "sumset");
}

NumSet difference_set(const NumSet& a, const NumSet& b, const CardinalityGuard& guard) {
  return pairwise(PairOp::kSub, a, b, guard, "difference_set");
}

NumSet product_set(const NumSet& a, const NumSet& b, const CardinalityGuard& guard) {
  return pairwise(PairOp::kMul, a, b, guard, "product_set");
}

NumSet squared_difference_set(const NumSet& a, const CardinalityGuard& guard) {
  return pairwise(PairOp::kSqDiff, a, a, guard, "squared_difference_set");
}

NumSet iterated_sumset(const NumSet& a, unsigned k, const CardinalityGuard& guard,
                       SumsetStrategy strategy) {
  if (k == 0) throw PreconditionViolated("iterated_sumset: k must be >= 1");
  if (a.empty()) return a;
  if (strategy == SumsetStrategy::kLeftFold) {
    NumSet acc = a;
    for (unsigned i = 1; i < k; ++i) acc = sumset(acc, a, guard);
    return acc;
  }
  // Meet in the middle with per-stage deduplication: the halves are far
  // smaller than the k-fold Cartesian power they replace.
  std::map<unsigned, NumSet> memo;
  memo.emplace(1, a);
  auto solve = [&](auto&& self, unsigned kk) -> const NumSet& {
    auto it = memo.find(kk);
    if (it != memo.end()) return it->second;
    const NumSet& lo = self(self, kk / 2);
    const NumSet& hi = self(self, kk - kk / 2);
    return memo.emplace(kk, sumset(lo, hi, guard)).first->second;
  };
  return solve(solve, k);
}

NumSet k_diff(const NumSet& a, unsigned k, const CardinalityGuard& guard) {
  const NumSet ka = iterated_sumset(a, k, guard);
  return difference_set(ka, ka, guard);
}

NumSet dilate(const Scalar& c, const NumSet& a) {
  if (a.empty()) return a;
  if (c.is_zero()) return NumSet::of({0});

  if (a.is_int64()) {
    if (const std::optional<i64> ci = c.as_int64()) {
      const std::span<const i64> v = a.int64_view();
      const i128 worst = i128(*ci) * std::max<i128>(i128(v.front()) < 0 ? -i128(v.front()) : i128(v.front()),
                                                    i128(v.back()) < 0 ? -i128(v.back()) : i128(v.back()));
      if (fits_i64(worst) && fits_i64(-worst)) {
        std::vector<i64> out(v.size());
        kern::active_ops().broadcast_mul(*ci, v.data(), out.data(), v.size());
        if (*ci < 0) std::reverse(out.begin(), out.end());
        return NumSet::from_sorted_int64(std::move(out));
      }
    }
  }
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(c * a.at(i));
  if (c.sign() < 0) std::reverse(out.begin(), out.end());
  NumSet r = NumSet::from_scalars(std::move(out));
  return r;
}

NumSet half_lower(const NumSet& a) {
  if (a.size() % 2 != 0) {
    throw OddCardinality("half_lower: cardinality " + std::to_string(a.size()) + " is odd");
  }
  const std::size_t h = a.size() / 2;
  if (a.is_int64()) {
    const std::span<const i64> v = a.int64_view();
    return NumSet::from_sorted_int64(std::vector<i64>(v.begin(), v.begin() + h));
  }
  const std::vector<Scalar>& v = a.scalar_view();
  return NumSet::from_scalars(std::vector<Scalar>(v.begin(), v.begin() + h));
}

NumSet scale_to_integers(const NumSet& a) {
  if (a.is_int64()) return a;
  mpz_class lcm_den = 1;
  for (const Scalar& s : a.scalar_view()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.den().get_mpz_t());
  }
  if (lcm_den == 1) return a;
  return dilate(Scalar(mpq_class(lcm_den)), a);
}

std::pair<Scalar, Scalar> min_gap_pair(const NumSet& a) {
  if (a.size() < 2) throw TooSmall("min_gap_pair: need at least 2 elements");
  std::size_t best = 0;
  Scalar best_gap = a.at(1) - a.at(0);
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const Scalar gap = a.at(i + 1) - a.at(i);
    if (gap < best_gap) {  // strict: ties keep the lowest index
      best_gap = gap;
      best = i;
    }
  }
  return {a.at(best), a.at(best + 1)};
}

std::pair<Scalar, Scalar> min_ratio_pair(const NumSet& a) {
  if (a.size() < 2) throw TooSmall("min_ratio_pair: need at least 2 elements");
  if (!(a.front() > Scalar(0))) {
    throw PreconditionViolated("min_ratio_pair: all elements must be positive");
  }
  std::size_t best = 0;
  Scalar best_ratio = a.at(1).divided_by(a.at(0));
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const Scalar ratio = a.at(i + 1).divided_by(a.at(i));
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  return {a.at(best), a.at(best + 1)};
}

}  // namespace squeezelab
