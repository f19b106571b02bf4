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

#ifndef SQUEEZELAB_CONVEX_HPP_
#define SQUEEZELAB_CONVEX_HPP_

#include <string>
#include <vector>

#include "squeezelab/numset.hpp"
#include "squeezelab/scalar.hpp"

namespace squeezelab {

// A function applied pointwise to sets, with exact rational evaluation.
// Supported shapes: x^2, and polynomials with rational coefficients.
class ConvexFn {
 public:
  enum class Kind { kSquare, kPolynomial };

  static ConvexFn square();
  // coeffs[i] multiplies x^i; trailing zero coefficients are stripped.
  static ConvexFn polynomial(std::vector<Scalar> coeffs);

  Kind kind() const { return kind_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar operator()(const Scalar& x) const;

  // Exact, conservative test that the function is strictly convex on the
  // open interval (lo, hi): decides whether the second derivative is
  // strictly positive there (Sturm root counting plus a midpoint sign).
  // "Conservative" means false negatives are possible for functions that
  // are strictly convex with f'' touching zero; never false positives.
  bool convex_on(const Scalar& lo, const Scalar& hi) const;

  // One-line spelling for reports and CLIs: "square" or "poly:c0,c1,...".
  std::string describe() const;

 private:
  ConvexFn(Kind kind, std::vector<Scalar> coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {}

  Kind kind_;
  std::vector<Scalar> coeffs_;  // low-to-high; also populated for kSquare
};

// {f(a) : a in A}. Requires strict convexity on the hull of A (singletons
// excepted); throws NotConvexOnDomain otherwise.
NumSet apply(const ConvexFn& f, const NumSet& a);

}  // namespace squeezelab

#endif  // SQUEEZELAB_CONVEX_HPP_
