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

#include "squeezelab/scalar.hpp"

#include <cctype>
#include <cstddef>

#include "squeezelab/errors.hpp"

namespace squeezelab {
namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::uint64_t h = mix64(static_cast<std::uint64_t>(mpz_sgn(p)) + 0x517cc1b7ULL);
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix64(h ^ static_cast<std::uint64_t>(mpz_getlimbn(p, i)));
  }
  return h;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("scalar: zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Scalar::Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  // Trim surrounding whitespace; the payload itself must be strict.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("scalar: empty literal");

  std::string_view num_part = text;
  std::string_view den_part;
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos) {
      throw ParseError("scalar: more than one '/' in \"" + std::string(text) + "\"");
    }
  }
  if (!valid_integer_literal(num_part) ||
      (slash != std::string_view::npos && !valid_integer_literal(den_part))) {
    throw ParseError("scalar: bad literal \"" + std::string(text) + "\"");
  }

  mpz_class num(std::string(num_part), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    den = mpz_class(std::string(den_part), 10);
    if (den == 0) throw ParseError("scalar: zero denominator in \"" + std::string(text) + "\"");
  }
  mpq_class q(num);
  q /= mpq_class(den);
  return Scalar(std::move(q));
}

Scalar Scalar::divided_by(const Scalar& o) const {
  if (o.is_zero()) throw PreconditionViolated("scalar: division by zero");
  return Scalar(mpq_class(v_ / o.v_));
}

bool Scalar::is_integer() const { return v_.get_den() == 1; }

std::optional<std::int64_t> Scalar::as_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

std::string Scalar::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Scalar::hash() const {
  const std::uint64_t h = hash_mpz(v_.get_num()) ^ (hash_mpz(v_.get_den()) * 0x9e3779b97f4a7c15ULL);
  return static_cast<std::size_t>(mix64(h));
}

}  // namespace squeezelab
