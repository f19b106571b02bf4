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

#ifndef SQUEEZELAB_IO_HPP_
#define SQUEEZELAB_IO_HPP_

#include <map>
#include <string>

#include "json.hpp"
#include "squeezelab/numset.hpp"
#include "squeezelab/squeeze.hpp"
#include "squeezelab/verify.hpp"

namespace squeezelab {

// Set file format: UTF-8 text, one Scalar per line ("p" or "p/q"), blank
// lines skipped, '#' starts a comment that runs to end of line.
enum class DuplicatePolicy {
  kError,  // duplicate values raise ParseError
  kAllow,  // duplicates collapse silently
};

NumSet load_set(const std::string& path, DuplicatePolicy policy = DuplicatePolicy::kError);
void save_set(const std::string& path, const NumSet& a);

// Exact JSON document for a certificate; all Scalar values are strings.
nlohmann::ordered_json certificate_to_json(const SqueezeCertificate& cert);

// One JSONL object per report. Witness sets are capped at kWitnessCap
// elements each (a "truncated" marker is added when the cap bites).
inline constexpr std::size_t kWitnessCap = 10'000;
nlohmann::ordered_json report_to_json(const VerifyReport& report);

// Fixed-column CSV: statement,family,n,k,d,seed,certified_lower_bound,holds,
// runtime_ms,cardinalities — the last column packs "name=value" pairs
// separated by ';' so the column set never depends on the statement.
std::string report_csv_header();
std::string report_csv_row(const VerifyReport& report);

// key=value config file ('#' comments, blank lines ignored). Values may be
// overridden by CLI flags; parsing of the values happens at the CLI layer.
std::map<std::string, std::string> load_config(const std::string& path);

}  // namespace squeezelab

#endif  // SQUEEZELAB_IO_HPP_
