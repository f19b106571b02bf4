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

#include "squeezelab/verify.hpp"

#include <cstdint>
#include <string>

#include "squeezelab/convex.hpp"
#include "squeezelab/errors.hpp"

namespace squeezelab {

namespace {

using u64 = std::uint64_t;

void push_card(VerifyReport& r, const std::string& name, u64 value) {
  r.cardinalities.emplace_back(name, value);
}

void require_even(const NumSet& a, const char* who) {
  if (a.size() % 2 != 0) {
    throw OddCardinality(std::string(who) + ": cardinality " + std::to_string(a.size()) +
                         " is odd");
  }
}

// ceil(|kDkD| / 2); difference sets have odd cardinality but stay exact
// regardless.
u64 half_up(u64 n) { return (n + 1) / 2; }

// (m)B - (j)B as one deduplicated set.
NumSet signed_combination(const NumSet& b, unsigned m, unsigned j, const CardinalityGuard& g) {
  const NumSet pos = iterated_sumset(b, m, g);
  if (j == 0) return pos;
  const NumSet neg = dilate(Scalar(-1), iterated_sumset(b, j, g));
  return sumset(pos, neg, g);
}

}  // namespace

const char* statement_name(StatementId id) {
  switch (id) {
    case StatementId::kQuadBound:
      return "cor-quad";
    case StatementId::kRuzsaTriangle:
      return "ruzsa";
    case StatementId::kMainChain:
      return "main-chain";
    case StatementId::kProductExpander:
      return "expander";
    case StatementId::kDistributiveRefinement:
      return "distributive";
    case StatementId::kDiffRangeControl:
      return "diff-range";
    case StatementId::kDIdentity:
      return "d-identity";
  }
  return "?";
}

StatementId statement_from_name(const std::string& s) {
  for (StatementId id :
       {StatementId::kQuadBound, StatementId::kRuzsaTriangle, StatementId::kMainChain,
        StatementId::kProductExpander, StatementId::kDistributiveRefinement,
        StatementId::kDiffRangeControl, StatementId::kDIdentity}) {
    if (s == statement_name(id)) return id;
  }
  throw ParseError("unknown statement: " + s);
}

VerifyReport verify_quad_bound(const NumSet& a, unsigned k, const CardinalityGuard& guard) {
  require_even(a, "verify_quad_bound");
  if (a.size() < 4) throw TooSmall("verify_quad_bound: need at least 4 elements");
  VerifyReport r;
  r.statement = StatementId::kQuadBound;
  r.inputs.n = a.size();
  r.inputs.k = k;

  // Every cardinality below is dilation-invariant, so verify on the
  // integer-scaled copy to stay on the fast path.
  const NumSet ai = scale_to_integers(a);
  const NumSet s = squared_difference_set(ai, guard);
  const NumSet lset = signed_combination(s, 2 * k + 1, 2 * k, guard);
  const SqueezeCertificate cert =
      build_certificate(Variant::kShiftMinus, ConvexFn::square(), ai, k, guard);
  const NumSet khalf = k_diff(half_lower(ai), k, guard);

  push_card(r, "S", s.size());
  push_card(r, "(2k+1)S-2kS", lset.size());
  push_card(r, "kD-kD", cert.diffs.size());
  push_card(r, "kA'-kA'", khalf.size());
  push_card(r, "window", cert.window.size());
  push_card(r, "blocks", cert.block_range.count());
  push_card(r, "target", cert.target_superset_card);
  r.certified_lower_bound = cert.certified_count;

  const bool bound_ok = lset.size() >= cert.certified_count;
  const bool constant_ok =
      cert.certified_count >= cert.block_range.count() * half_up(cert.diffs.size());
  const bool identity_ok = cert.diffs.size() == khalf.size();
  r.holds = bound_ok && constant_ok && identity_ok;
  if (!r.holds) {
    if (!bound_ok) r.note = "|(2k+1)S-2kS| < certified_count";
    else if (!constant_ok) r.note = "certified_count < |range| * ceil(|kD-kD|/2)";
    else r.note = "|kD-kD| != |kA'-kA'|";
    r.witness.emplace_back("A(scaled)", ai);
    r.witness.emplace_back("D", cert.shift_diffs);
    r.witness.emplace_back("kD-kD", cert.diffs);
    r.witness.emplace_back("kA'-kA'", khalf);
  }
  return r;
}

VerifyReport verify_ruzsa_triangle(const NumSet& x, const NumSet& y, const NumSet& z,
                                   const CardinalityGuard& guard) {
  VerifyReport r;
  r.statement = StatementId::kRuzsaTriangle;
  r.inputs.n = x.size();

  const NumSet ymz = difference_set(y, z, guard);
  const NumSet xpy = sumset(x, y, guard);
  const NumSet xpz = sumset(x, z, guard);

  push_card(r, "X", x.size());
  push_card(r, "Y", y.size());
  push_card(r, "Z", z.size());
  push_card(r, "Y-Z", ymz.size());
  push_card(r, "X+Y", xpy.size());
  push_card(r, "X+Z", xpz.size());

  r.holds = static_cast<u64>(ymz.size()) * x.size() <=
            static_cast<u64>(xpy.size()) * xpz.size();
  if (!r.holds) {  // unreachable if the set engine is correct
    r.note = "|Y-Z| |X| > |X+Y| |X+Z|";
    r.witness.emplace_back("X", x);
    r.witness.emplace_back("Y", y);
    r.witness.emplace_back("Z", z);
  }
  return r;
}

VerifyReport verify_main_chain(const NumSet& a, unsigned k, const CardinalityGuard& guard) {
  require_even(a, "verify_main_chain");
  VerifyReport r;
  r.statement = StatementId::kMainChain;
  r.inputs.n = a.size();
  r.inputs.k = k;
  r.inputs.d = 2 * k + 3;

  const NumSet ai = scale_to_integers(a);
  const NumSet s = squared_difference_set(ai, guard);
  const NumSet two_s = iterated_sumset(s, 2, guard);
  const NumSet m2 = iterated_sumset(s, 2 * k + 2, guard);
  const NumSet m1 = iterated_sumset(s, 2 * k + 3, guard);
  const NumSet lset = signed_combination(s, 2 * k + 1, 2 * k, guard);

  u64 certified = 0;
  try {
    const SqueezeCertificate cert =
        build_certificate(Variant::kShiftMinus, ConvexFn::square(), ai, k, guard);
    certified = cert.certified_count;
  } catch (const EmptyBlockRange& e) {
    r.note = std::string("vacuous block range: ") + e.what();
  }

  push_card(r, "S", s.size());
  push_card(r, "2S", two_s.size());
  push_card(r, "(2k+2)S", m2.size());
  push_card(r, "(2k+3)S", m1.size());
  push_card(r, "distance-count", m1.size());  // |d(A-A)^2| with d = 2k+3
  push_card(r, "(2k+1)S-2kS", lset.size());
  r.certified_lower_bound = certified;

  const u64 m1c = m1.size(), m2c = m2.size(), twoc = two_s.size(), lc = lset.size();
  const bool c1 = m1c * m1c >= m1c * m2c;
  const bool c2 = m1c * m2c >= twoc * lc;  // Ruzsa with X=2S, Y=(2k+1)S, Z=2kS
  const bool c3 = lc >= certified;
  r.holds = c1 && c2 && c3;
  if (!r.holds) {
    r.note = !c1   ? "|(2k+3)S|^2 < |(2k+3)S| |(2k+2)S|"
             : !c2 ? "|(2k+3)S| |(2k+2)S| < |2S| |(2k+1)S-2kS|"
                   : "|(2k+1)S-2kS| < certified_count";
    r.witness.emplace_back("A(scaled)", ai);
    r.witness.emplace_back("S", s);
  }
  return r;
}

VerifyReport verify_product_expander(const NumSet& x, unsigned k, const CardinalityGuard& guard) {
  require_even(x, "verify_product_expander");
  if (!(x.front() > Scalar(0))) {
    throw PreconditionViolated("verify_product_expander: set must be positive");
  }
  VerifyReport r;
  r.statement = StatementId::kProductExpander;
  r.inputs.n = x.size();
  r.inputs.k = k;

  const NumSet xi = scale_to_integers(x);
  const NumSet xx = product_set(xi, xi, guard);
  const NumSet eset = signed_combination(xx, 2 * k + 1, 2 * k, guard);
  const SqueezeCertificate cert =
      build_certificate(Variant::kMultiplicative, ConvexFn::square(), xi, k, guard);
  const NumSet khalf = k_diff(half_lower(xi), k, guard);

  push_card(r, "XX", xx.size());
  push_card(r, "(2k+1)XX-2kXX", eset.size());
  push_card(r, "kD-kD", cert.diffs.size());
  push_card(r, "kX'-kX'", khalf.size());
  push_card(r, "window", cert.window.size());
  push_card(r, "blocks", cert.block_range.count());
  push_card(r, "target", cert.target_superset_card);
  r.certified_lower_bound = cert.certified_count;

  const bool bound_ok = eset.size() >= cert.certified_count;
  const bool identity_ok = cert.diffs.size() == khalf.size();
  r.holds = bound_ok && identity_ok;
  if (!r.holds) {
    r.note = bound_ok ? "|kD-kD| != |kX'-kX'|" : "|(2k+1)XX-2kXX| < certified_count";
    r.witness.emplace_back("X(scaled)", xi);
    r.witness.emplace_back("D", cert.shift_diffs);
  }
  return r;
}

VerifyReport verify_distributive_refinement(const NumSet& x, unsigned k,
                                            const CardinalityGuard& guard) {
  require_even(x, "verify_distributive_refinement");
  if (!(x.front() > Scalar(0))) {
    throw PreconditionViolated("verify_distributive_refinement: set must be positive");
  }
  VerifyReport r;
  r.statement = StatementId::kDistributiveRefinement;
  r.inputs.n = x.size();
  r.inputs.k = k;

  const NumSet xi = scale_to_integers(x);
  const SqueezeCertificate cert =
      build_certificate(Variant::kMultiplicative, ConvexFn::square(), xi, k, guard);
  const NumSet spread = signed_combination(xi, k + 1, k, guard);  // (k+1)X - kX
  const NumSet kdx = k_diff(xi, k, guard);                        // kX - kX
  const NumSet refined =
      sumset(dilate(cert.pair_lo, spread), dilate(cert.pair_hi, kdx), guard);

  push_card(r, "(k+1)X-kX", spread.size());
  push_card(r, "kX-kX", kdx.size());
  push_card(r, "{x}((k+1)X-kX)+{x'}(kX-kX)", refined.size());
  push_card(r, "window", cert.window.size());
  push_card(r, "blocks", cert.block_range.count());
  r.certified_lower_bound = cert.certified_count;

  r.holds = refined.size() >= cert.certified_count;
  if (!r.holds) {
    r.note = "refined set smaller than certified_count";
    r.witness.emplace_back("X(scaled)", xi);
    r.witness.emplace_back("D", cert.shift_diffs);
  }
  return r;
}

VerifyReport verify_diff_range_control(const NumSet& a, unsigned k, const Scalar& t,
                                       const CardinalityGuard& guard) {
  if (a.empty()) throw TooSmall("verify_diff_range_control: empty set");
  if (!(a.front() > Scalar(0) && a.back() < t)) {
    throw PreconditionViolated("verify_diff_range_control: set not inside (0, t)");
  }
  VerifyReport r;
  r.statement = StatementId::kDiffRangeControl;
  r.inputs.n = a.size();
  r.inputs.k = k;

  const NumSet kd = k_diff(a, k, guard);
  const Scalar kt = Scalar(static_cast<std::int64_t>(k)) * t;
  bool ok = true;
  for (std::size_t i = 0; i < kd.size(); ++i) {
    const Scalar v = kd.at(i);
    if (!(-kt < v && v < kt)) {
      ok = false;
      break;
    }
  }

  push_card(r, "A", a.size());
  push_card(r, "kA-kA", kd.size());
  r.holds = ok;
  if (!ok) {
    r.note = "kA-kA escapes (-kt, kt)";
    r.witness.emplace_back("A", a);
    r.witness.emplace_back("kA-kA", kd);
  }
  return r;
}

VerifyReport verify_d_identity(const NumSet& a, unsigned k, const CardinalityGuard& guard) {
  require_even(a, "verify_d_identity");
  VerifyReport r;
  r.statement = StatementId::kDIdentity;
  r.inputs.n = a.size();
  r.inputs.k = k;

  const NumSet ai = scale_to_integers(a);
  const auto pair = min_gap_pair(ai);
  const NumSet d =
      build_shift_diffs(Variant::kShiftMinus, ConvexFn::square(), ai, pair.first, pair.second);
  const NumSet dd = difference_set(d, d, guard);
  const NumSet half = half_lower(ai);
  const NumSet hh = difference_set(half, half, guard);
  const Scalar minus_two_gap = Scalar(-2) * (pair.second - pair.first);
  const NumSet dilated = dilate(minus_two_gap, hh);
  const NumSet kdd = k_diff(d, k, guard);
  const NumSet khh = k_diff(half, k, guard);

  push_card(r, "D", d.size());
  push_card(r, "D-D", dd.size());
  push_card(r, "A'-A'", hh.size());
  push_card(r, "kD-kD", kdd.size());
  push_card(r, "kA'-kA'", khh.size());

  const bool set_eq = dd == dilated;
  const bool card_eq = kdd.size() == khh.size();
  r.holds = set_eq && card_eq;
  if (!r.holds) {
    r.note = set_eq ? "|kD-kD| != |kA'-kA'|" : "D-D != {-2(a'-a)}(A'-A')";
    r.witness.emplace_back("A(scaled)", ai);
    r.witness.emplace_back("D-D", dd);
    r.witness.emplace_back("dilated A'-A'", dilated);
  }
  return r;
}

}  // namespace squeezelab
