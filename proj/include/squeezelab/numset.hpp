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

#ifndef SQUEEZELAB_NUMSET_HPP_
#define SQUEEZELAB_NUMSET_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "squeezelab/scalar.hpp"

namespace squeezelab {

// Ceiling on the cardinality of any set an operation may produce. Checked
// before results are materialized where possible; violating it raises
// GuardExceeded instead of exhausting memory.
struct CardinalityGuard {
  static constexpr std::uint64_t kDefaultMaxCard = 50'000'000;

  std::uint64_t max_card = kDefaultMaxCard;

  // Default guard, honoring a SQUEEZELAB_MAX_CARD environment override.
  static CardinalityGuard from_env();

  void check(std::uint64_t produced, const char* op) const;
};

// Finite set of Scalars, stored strictly sorted and duplicate-free.
//
// Representation is canonical: if every element is an integer that fits in
// int64 the set is stored as a plain int64 vector (the fast path the
// broadcast kernels operate on), otherwise as exact Scalars. Operations
// decide per call whether int64 arithmetic provably cannot overflow and fall
// back to exact rationals when it could, so both paths compute the same sets.
class NumSet {
 public:
  NumSet() = default;

  static NumSet of(std::initializer_list<std::int64_t> values);
  // Sorts and removes duplicates.
  static NumSet from_scalars(std::vector<Scalar> values);
  // Sorts; duplicates are an error (ParseError) instead of being dropped.
  static NumSet from_scalars_strict(std::vector<Scalar> values);
  // `values` must already be strictly increasing.
  static NumSet from_sorted_int64(std::vector<std::int64_t> values);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  Scalar at(std::size_t i) const;
  Scalar front() const { return at(0); }
  Scalar back() const { return at(size() - 1); }
  bool contains(const Scalar& v) const;

  bool is_int64() const { return std::holds_alternative<std::vector<std::int64_t>>(rep_); }
  std::span<const std::int64_t> int64_view() const;
  const std::vector<Scalar>& scalar_view() const;
  std::vector<Scalar> to_scalars() const;

  bool operator==(const NumSet& o) const { return rep_ == o.rep_; }
  bool operator!=(const NumSet& o) const { return !(*this == o); }

 private:
  std::variant<std::vector<std::int64_t>, std::vector<Scalar>> rep_;
};

// {a + b : a in A, b in B}
NumSet sumset(const NumSet& a, const NumSet& b, const CardinalityGuard& guard);

// {a - b : a in A, b in B}
NumSet difference_set(const NumSet& a, const NumSet& b, const CardinalityGuard& guard);

enum class SumsetStrategy {
  // kA = floor(k/2)A + ceil(k/2)A with deduplication at every stage.
  kMeetInMiddle,
  // kA = ((A + A) + A) + ...; kept for equivalence testing.
  kLeftFold,
};

// k-fold sumset kA (k >= 1).
NumSet iterated_sumset(const NumSet& a, unsigned k, const CardinalityGuard& guard,
                       SumsetStrategy strategy = SumsetStrategy::kMeetInMiddle);

// kA - kA (k >= 1).
NumSet k_diff(const NumSet& a, unsigned k, const CardinalityGuard& guard);

// {c * a : a in A}; c = 0 collapses to {0}.
NumSet dilate(const Scalar& c, const NumSet& a);

// {a * b : a in A, b in B}
NumSet product_set(const NumSet& a, const NumSet& b, const CardinalityGuard& guard);

// {(a - b)^2 : a, b in A}
NumSet squared_difference_set(const NumSet& a, const CardinalityGuard& guard);

// First half of A (A must have even cardinality; throws OddCardinality).
NumSet half_lower(const NumSet& a);

// A scaled by the least common multiple of its denominators: an integer set
// with the same order type. Every cardinality statement in this library is
// invariant under dilation, so verifiers may precondition inputs with this
// to unlock the int64 fast path. Identity on integer sets.
NumSet scale_to_integers(const NumSet& a);

// Consecutive pair (a, a') with the smallest gap a' - a; ties resolve to the
// lowest index. Requires |A| >= 2 (throws TooSmall).
std::pair<Scalar, Scalar> min_gap_pair(const NumSet& a);

// Consecutive pair with the smallest ratio a'/a; requires all elements
// positive and |A| >= 2. Ties resolve to the lowest index.
std::pair<Scalar, Scalar> min_ratio_pair(const NumSet& a);

}  // namespace squeezelab

#endif  // SQUEEZELAB_NUMSET_HPP_
