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

#include "squeezelab/families.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "squeezelab/errors.hpp"
#include "squeezelab/prng.hpp"

namespace squeezelab {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr std::uint64_t kMaxGeneratedElements = 100'000'000;

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Integer literal, optionally in base^exponent form ("10^6").
i64 parse_i64(std::string_view s) {
  const std::size_t caret = s.find('^');
  if (caret != std::string_view::npos) {
    const i64 base = parse_i64(s.substr(0, caret));
    const i64 exp = parse_i64(s.substr(caret + 1));
    if (exp < 0 || exp > 62) throw ParseError("integer exponent out of range: " + std::string(s));
    i128 acc = 1;
    for (i64 i = 0; i < exp; ++i) {
      acc *= base;
      if (acc > std::numeric_limits<i64>::max() || acc < std::numeric_limits<i64>::min()) {
        throw ParseError("integer power overflows: " + std::string(s));
      }
    }
    return static_cast<i64>(acc);
  }
  const Scalar v = Scalar::parse(s);
  const std::optional<i64> n = v.as_int64();
  if (!n) throw ParseError("expected integer, got \"" + std::string(s) + "\"");
  return *n;
}

std::pair<i64, i64> parse_range(std::string_view s) {
  const std::size_t dots = s.find("..");
  if (dots == std::string_view::npos) throw ParseError("expected LO..HI range: " + std::string(s));
  const i64 lo = parse_i64(s.substr(0, dots));
  const i64 hi = parse_i64(s.substr(dots + 2));
  if (lo > hi) throw ParseError("empty range: " + std::string(s));
  return {lo, hi};
}

NumSet generate_gap(const FamilySpec& spec) {
  std::uint64_t points = 1;
  for (std::uint32_t d : spec.dims) {
    if (d == 0) throw InfeasibleSpec("gap: zero dimension");
    points *= d;
    if (points > kMaxGeneratedElements) throw InfeasibleSpec("gap: dims product too large");
  }
  if (points < spec.n) {
    throw InfeasibleSpec("gap: dims product " + std::to_string(points) + " < n=" +
                         std::to_string(spec.n));
  }
  std::vector<Scalar> values;
  values.reserve(points);
  std::vector<std::uint32_t> idx(spec.dims.size(), 0);
  for (std::uint64_t p = 0; p < points; ++p) {
    i128 v = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) v += i128(idx[i]) * spec.steps[i];
    values.push_back(Scalar(mpq_class(static_cast<long>(v))));  // steps bounded; fits long
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < spec.dims[i]) break;
      idx[i] = 0;
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < spec.n) {
    throw InfeasibleSpec("gap: only " + std::to_string(values.size()) + " distinct elements");
  }
  values.resize(spec.n);
  return NumSet::from_scalars(std::move(values));
}

NumSet generate_random_integer(const FamilySpec& spec) {
  const i128 span = i128(spec.int_hi) - spec.int_lo + 1;
  if (span < i128(spec.n)) {
    throw InfeasibleSpec("randint: range narrower than n=" + std::to_string(spec.n));
  }
  SplitMix64 rng(spec.seed);
  std::unordered_set<i64> seen;
  std::vector<i64> out;
  out.reserve(spec.n);
  while (out.size() < spec.n) {
    const i64 v = rng.in_range(spec.int_lo, spec.int_hi);
    if (seen.insert(v).second) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return NumSet::from_sorted_int64(std::move(out));
}

NumSet generate_random_rational(const FamilySpec& spec) {
  SplitMix64 rng(spec.seed);
  std::unordered_set<Scalar, ScalarHash> seen;
  std::vector<Scalar> out;
  out.reserve(spec.n);
  // Distinct values may be scarcer than raw (num, den) draws suggest once
  // fractions cancel; bail out instead of spinning forever.
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 1'000ULL * spec.n + 1'000'000ULL;
  while (out.size() < spec.n) {
    if (++attempts > max_attempts) {
      throw InfeasibleSpec("randrat: could not reach n distinct values");
    }
    const i64 num = rng.in_range(spec.num_lo, spec.num_hi);
    const i64 den = rng.in_range(spec.den_lo, spec.den_hi);
    const Scalar v(num, den);
    if (seen.insert(v).second) out.push_back(v);
  }
  return NumSet::from_scalars(std::move(out));
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text, std::uint32_t n, std::uint64_t seed) {
  FamilySpec spec;
  spec.n = n;
  spec.seed = seed;

  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);

  if (name == "ap") {
    spec.kind = Kind::kAP;
    return spec;
  }
  if (name == "convex") {
    spec.kind = Kind::kConvexSquares;
    return spec;
  }
  if (name == "geo") {
    spec.kind = Kind::kGeometric;
    if (params.empty()) throw ParseError("geo: missing ratio");
    spec.geo_ratio = Scalar::parse(params);
    if (!(spec.geo_ratio > Scalar(1))) throw ParseError("geo: ratio must be > 1");
    return spec;
  }
  if (name == "gap") {
    spec.kind = Kind::kGAP;
    std::uint32_t rank = 0;
    for (const std::string& kv : split(params, ',')) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError("gap: expected key=value, got \"" + kv + "\"");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (key == "r") {
        rank = static_cast<std::uint32_t>(parse_i64(value));
      } else if (key == "dims") {
        for (const std::string& d : split(value, 'x')) {
          spec.dims.push_back(static_cast<std::uint32_t>(parse_i64(d)));
        }
      } else if (key == "steps") {
        for (const std::string& s : split(value, ':')) {
          spec.steps.push_back(parse_i64(s));
        }
      } else {
        throw ParseError("gap: unknown key \"" + key + "\"");
      }
    }
    if (rank == 0 || spec.dims.size() != rank || spec.steps.size() != rank) {
      throw ParseError("gap: need r with matching dims and steps");
    }
    return spec;
  }
  if (name == "randint") {
    spec.kind = Kind::kRandomInteger;
    if (params.empty()) throw ParseError("randint: missing LO..HI range");
    std::tie(spec.int_lo, spec.int_hi) = parse_range(params);
    return spec;
  }
  if (name == "randrat") {
    spec.kind = Kind::kRandomRational;
    if (params.empty()) throw ParseError("randrat: missing NLO..NHI/DLO..DHI ranges");
    const std::vector<std::string> parts = split(params, '/');
    if (parts.size() != 2) throw ParseError("randrat: expected NLO..NHI/DLO..DHI");
    std::tie(spec.num_lo, spec.num_hi) = parse_range(parts[0]);
    std::tie(spec.den_lo, spec.den_hi) = parse_range(parts[1]);
    if (spec.den_lo < 1) throw ParseError("randrat: denominators must be >= 1");
    return spec;
  }
  throw ParseError("unknown family \"" + std::string(name) + "\"");
}

std::string FamilySpec::str() const {
  switch (kind) {
    case Kind::kAP:
      return "ap";
    case Kind::kConvexSquares:
      return "convex";
    case Kind::kGeometric:
      return "geo:" + geo_ratio.str();
    case Kind::kGAP: {
      std::string out = "gap:r=" + std::to_string(dims.size()) + ",dims=";
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i > 0) out += "x";
        out += std::to_string(dims[i]);
      }
      out += ",steps=";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0) out += ":";
        out += std::to_string(steps[i]);
      }
      return out;
    }
    case Kind::kRandomInteger:
      return "randint:" + std::to_string(int_lo) + ".." + std::to_string(int_hi);
    case Kind::kRandomRational:
      return "randrat:" + std::to_string(num_lo) + ".." + std::to_string(num_hi) + "/" +
             std::to_string(den_lo) + ".." + std::to_string(den_hi);
  }
  return "?";
}

NumSet generate(const FamilySpec& spec) {
  if (spec.n == 0) return NumSet();
  if (spec.n > kMaxGeneratedElements) throw InfeasibleSpec("family: n too large");

  switch (spec.kind) {
    case FamilySpec::Kind::kAP: {
      std::vector<i64> v(spec.n);
      for (std::uint32_t i = 0; i < spec.n; ++i) v[i] = i64(i) + 1;
      return NumSet::from_sorted_int64(std::move(v));
    }
    case FamilySpec::Kind::kConvexSquares: {
      std::vector<Scalar> v;
      v.reserve(spec.n);
      for (std::uint32_t j = 1; j <= spec.n; ++j) v.push_back(Scalar(i64(j)).squared());
      return NumSet::from_scalars(std::move(v));
    }
    case FamilySpec::Kind::kGeometric: {
      std::vector<Scalar> v;
      v.reserve(spec.n);
      Scalar acc(1);
      for (std::uint32_t i = 0; i < spec.n; ++i) {
        v.push_back(acc);
        acc = acc * spec.geo_ratio;
      }
      return NumSet::from_scalars(std::move(v));
    }
    case FamilySpec::Kind::kGAP:
      return generate_gap(spec);
    case FamilySpec::Kind::kRandomInteger:
      return generate_random_integer(spec);
    case FamilySpec::Kind::kRandomRational:
      return generate_random_rational(spec);
  }
  throw PreconditionViolated("unreachable family kind");
}

}  // namespace squeezelab
