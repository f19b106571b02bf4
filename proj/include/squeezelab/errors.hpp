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

#ifndef SQUEEZELAB_ERRORS_HPP_
#define SQUEEZELAB_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace squeezelab {

// Base class for every error squeezelab raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set operation would produce more elements than the configured ceiling.
// First-class so callers can catch it and report instead of crashing.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::uint64_t limit, const std::string& op)
      : Error(op + ": result cardinality would exceed max_card=" +
              std::to_string(limit)),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

// Malformed textual input (scalar literals, set files, config, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation that needs an even number of elements saw an odd one.
class OddCardinality : public Error {
 public:
  using Error::Error;
};

// Input set too small for the requested operation.
class TooSmall : public Error {
 public:
  using Error::Error;
};

// Strict convexity could not be established on the required interval.
class NotConvexOnDomain : public Error {
 public:
  using Error::Error;
};

// A documented precondition failed an exact check at runtime.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A set-family request that cannot yield the demanded cardinality.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

// The block index range (n/(2k), n/k - 1] contains no integer, so the
// packing construction is vacuous for these parameters.
class EmptyBlockRange : public Error {
 public:
  EmptyBlockRange(const std::string& lo, const std::string& hi)
      : Error("block index range (" + lo + ", " + hi +
              "] contains no integer"),
        lo_(lo),
        hi_(hi) {}
  const std::string& lo() const { return lo_; }
  const std::string& hi() const { return hi_; }

 private:
  std::string lo_;
  std::string hi_;
};

}  // namespace squeezelab

#endif  // SQUEEZELAB_ERRORS_HPP_
