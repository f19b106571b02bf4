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

#include "squeezelab/convex.hpp"

#include <algorithm>

#include "squeezelab/errors.hpp"

namespace squeezelab {
namespace {

// Dense rational polynomials, low-to-high coefficients, no trailing zeros.
using Poly = std::vector<Scalar>;

void strip(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<std::int64_t>(i)));
  strip(d);
  return d;
}

// Remainder of a / b (b nonzero). Quotient is discarded; only signs of the
// Sturm chain matter.
Poly rem(Poly a, const Poly& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar factor = a.back().divided_by(b.back());
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = a[shift + i] - factor * b[i];
    }
    a.pop_back();
    strip(a);
  }
  return a;
}

// Exact polynomial division when the remainder is known to vanish.
Poly exact_div(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar factor = a.back().divided_by(b.back());
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = a[shift + i] - factor * b[i];
    }
    a.pop_back();
    strip(a);
  }
  strip(q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar lead = a.back();
    for (Scalar& c : a) c = c.divided_by(lead);  // monic for stability
  }
  return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (!chain.back().empty()) {
    Poly r = rem(chain[chain.size() - 2], chain.back());
    for (Scalar& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Scalar& x) {
  int variations = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    const int s = p.empty() ? 0 : eval(p, x).sign();
    if (s != 0 && prev != 0 && s != prev) ++variations;
    if (s != 0) prev = s;
  }
  return variations;
}

// Number of distinct real roots of p in the open interval (lo, hi).
// Standard Sturm counting on the squarefree part, with roots at the
// endpoints divided out first so the endpoint evaluations are nonzero.
int count_roots_open(const Poly& p, const Scalar& lo, const Scalar& hi) {
  Poly q = p;
  strip(q);
  if (q.empty()) return -1;  // the zero polynomial: roots everywhere
  if (q.size() == 1) return 0;

  const Poly g = gcd(q, derivative(q));
  if (g.size() > 1) q = exact_div(q, g);

  for (const Scalar* endpoint : {&lo, &hi}) {
    while (q.size() > 1 && eval(q, *endpoint).is_zero()) {
      q = exact_div(q, Poly{-*endpoint, Scalar(1)});  // divide by (x - endpoint)
    }
  }
  if (q.size() == 1) return 0;

  const std::vector<Poly> chain = sturm_chain(q);
  // q(lo) != 0 and q(hi) != 0, so V(lo) - V(hi) counts roots in (lo, hi].
  // hi is not a root, hence the count is exactly the open-interval count.
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace

ConvexFn ConvexFn::square() {
  return ConvexFn(Kind::kSquare, {Scalar(0), Scalar(0), Scalar(1)});
}

ConvexFn ConvexFn::polynomial(std::vector<Scalar> coeffs) {
  strip(coeffs);
  return ConvexFn(Kind::kPolynomial, std::move(coeffs));
}

Scalar ConvexFn::operator()(const Scalar& x) const {
  if (kind_ == Kind::kSquare) return x.squared();
  return eval(coeffs_, x);
}

bool ConvexFn::convex_on(const Scalar& lo, const Scalar& hi) const {
  if (kind_ == Kind::kSquare) return true;
  if (!(lo < hi)) return false;

  const Poly second = derivative(derivative(coeffs_));
  if (second.empty()) return false;  // degree < 2: affine, never strictly convex
  if (second.size() == 1) return second[0].sign() > 0;

  // Strict positivity of f'' on (lo, hi): no roots strictly inside, and a
  // positive sign at the midpoint. Roots exactly at the endpoints are
  // allowed; the open interval does not see them.
  const int roots = count_roots_open(second, lo, hi);
  if (roots != 0) return false;
  const Scalar mid = (lo + hi) * Scalar(1, 2);
  return eval(second, mid).sign() > 0;
}

std::string ConvexFn::describe() const {
  if (kind_ == Kind::kSquare) return "square";
  std::string out = "poly:";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ",";
    out += coeffs_[i].str();
  }
  return out;
}

NumSet apply(const ConvexFn& f, const NumSet& a) {
  if (a.size() >= 2 && !f.convex_on(a.front(), a.back())) {
    throw NotConvexOnDomain("apply: strict convexity not established on [" + a.front().str() +
                            ", " + a.back().str() + "] for " + f.describe());
  }
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a.at(i)));
  return NumSet::from_scalars(std::move(out));
}

}  // namespace squeezelab
