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

#ifndef SQUEEZELAB_VERIFY_HPP_
#define SQUEEZELAB_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "squeezelab/numset.hpp"
#include "squeezelab/scalar.hpp"
#include "squeezelab/squeeze.hpp"

namespace squeezelab {

// The statements the tool can check end to end. CLI spellings in brackets.
enum class StatementId {
  kQuadBound,               // [cor-quad]     |(2k+1)S - 2kS| >= certified, S = (A-A)^2
  kRuzsaTriangle,           // [ruzsa]        |Y-Z| |X| <= |X+Y| |X+Z|
  kMainChain,               // [main-chain]   |(2k+3)S|^2 >= ... >= |2S| * certified
  kProductExpander,         // [expander]     |(2k+1)XX - 2kXX| >= certified
  kDistributiveRefinement,  // [distributive] |{x}((k+1)X-kX) + {x'}(kX-kX)| >= certified
  kDiffRangeControl,        // [diff-range]   A in (0,t) => kA-kA in (-kt, kt)
  kDIdentity,               // [d-identity]   D-D = {-2(a'-a)}(A'-A'), |kD-kD| = |kA'-kA'|
};

const char* statement_name(StatementId id);          // the CLI spelling
StatementId statement_from_name(const std::string&); // throws ParseError

// How the inputs were obtained; echoed into reports for reproducibility.
struct VerifyInputs {
  std::string family;  // family spec string, or "file:<path>"
  std::uint64_t n = 0;
  unsigned k = 0;
  unsigned d = 0;  // dimension, where the statement has one (main-chain: 2k+3)
  std::uint64_t seed = 0;
};

struct VerifyReport {
  StatementId statement = StatementId::kQuadBound;
  VerifyInputs inputs;
  // Every cardinality the verifier computed, in a fixed documented order.
  std::vector<std::pair<std::string, std::uint64_t>> cardinalities;
  std::uint64_t certified_lower_bound = 0;
  bool holds = false;
  std::int64_t runtime_ms = 0;  // 0 unless timing was requested (reproducibility)
  std::string note;             // failure detail or vacuous-range note
  // Witness sets, populated only when holds = false (serialization caps size).
  std::vector<std::pair<std::string, NumSet>> witness;
};

// Corollary-level bound via the subtractive-shift certificate with f = x^2:
// computes S = (A-A)^2 and checks |(2k+1)S - 2kS| >= certified_count,
// certified_count >= |range| * ceil(|kD-kD| / 2), |kD-kD| = |kA'-kA'|.
// |A| must be even and >= 4. Throws EmptyBlockRange when vacuous.
VerifyReport verify_quad_bound(const NumSet& a, unsigned k, const CardinalityGuard& guard);

// |Y-Z| * |X| <= |X+Y| * |X+Z|, exactly.
VerifyReport verify_ruzsa_triangle(const NumSet& x, const NumSet& y, const NumSet& z,
                                   const CardinalityGuard& guard);

// The distance-count chain with S = (A-A)^2:
//   |(2k+3)S|^2 >= |(2k+3)S| |(2k+2)S| >= |2S| |(2k+1)S - 2kS| >= |2S| * certified.
// Also reports the distance count |d(A-A)^2| for d = 2k+3. A vacuous block
// range is absorbed as certified = 0 (the chain still must hold).
VerifyReport verify_main_chain(const NumSet& a, unsigned k, const CardinalityGuard& guard);

// |(2k+1)XX - 2kXX| >= certified via the multiplicative certificate, and
// |kD-kD| = |kX'-kX'|. X positive, |X| even. Throws EmptyBlockRange.
VerifyReport verify_product_expander(const NumSet& x, unsigned k, const CardinalityGuard& guard);

// |{x}((k+1)X - kX) + {x'}(kX - kX)| >= certified, with (x, x') the
// certificate's pair. Same preconditions as the expander.
VerifyReport verify_distributive_refinement(const NumSet& x, unsigned k,
                                            const CardinalityGuard& guard);

// Range control: A inside (0, t) strictly implies kA - kA inside (-kt, kt)
// strictly, checked element by element.
VerifyReport verify_diff_range_control(const NumSet& a, unsigned k, const Scalar& t,
                                       const CardinalityGuard& guard);

// For the subtractive-shift differences with f = x^2 and (a, a') the minimal
// pair: D - D = {-2(a'-a)}(A'-A') as sets, and |kD-kD| = |kA'-kA'|.
VerifyReport verify_d_identity(const NumSet& a, unsigned k, const CardinalityGuard& guard);

}  // namespace squeezelab

#endif  // SQUEEZELAB_VERIFY_HPP_
