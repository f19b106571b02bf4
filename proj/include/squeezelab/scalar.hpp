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

#ifndef SQUEEZELAB_SCALAR_HPP_
#define SQUEEZELAB_SCALAR_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace squeezelab {

// Exact rational, always in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1. Arithmetic never rounds and the
// order is the order of the reals, so equality and comparison are decidable
// and exact. Backed by GMP.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(mpq_class v);

  // Parses "p" or "p/q" with optional leading '-' on p (and on q).
  // Throws ParseError on anything else, including q = 0.
  static Scalar parse(std::string_view text);

  // GMP rational arithmetic yields canonical results from canonical inputs,
  // so these skip the constructor's re-canonicalization.
  Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_), Canonical{}); }
  Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_), Canonical{}); }
  Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_), Canonical{}); }
  Scalar operator-() const { return Scalar(mpq_class(-v_), Canonical{}); }

  // Exact division; the divisor must be nonzero.
  Scalar divided_by(const Scalar& o) const;

  Scalar squared() const { return *this * *this; }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  bool operator==(const Scalar& o) const {
    return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }
  bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
  bool operator>(const Scalar& o) const { return compare(o) > 0; }
  bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

  int compare(const Scalar& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()); }

  bool is_integer() const;
  // The value as an int64 if it is an integer that fits, otherwise empty.
  std::optional<std::int64_t> as_int64() const;

  // Canonical text form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  std::size_t hash() const;

 private:
  // Tag for values already in canonical form (results of canonical-input
  // GMP arithmetic): skips re-canonicalizing.
  struct Canonical {};
  Scalar(mpq_class v, Canonical) : v_(std::move(v)) {}

  mpq_class v_;
};

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace squeezelab

#endif  // SQUEEZELAB_SCALAR_HPP_
