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

#include "squeezelab/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "squeezelab/errors.hpp"

namespace squeezelab {

namespace {

using json = nlohmann::ordered_json;

std::string strip(const std::string& line) {
  std::string s = line;
  if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

json set_to_json(const NumSet& a, std::size_t cap) {
  json arr = json::array();
  const std::size_t limit = std::min(a.size(), cap);
  for (std::size_t i = 0; i < limit; ++i) arr.push_back(a.at(i).str());
  return arr;
}

}  // namespace

NumSet load_set(const std::string& path, DuplicatePolicy policy) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file: " + path);
  std::vector<Scalar> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    try {
      values.push_back(Scalar::parse(body));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (values.empty()) throw ParseError(path + ": no elements");
  if (policy == DuplicatePolicy::kError) {
    try {
      return NumSet::from_scalars_strict(std::move(values));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  return NumSet::from_scalars(std::move(values));
}

void save_set(const std::string& path, const NumSet& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  for (std::size_t i = 0; i < a.size(); ++i) out << a.at(i).str() << '\n';
}

json certificate_to_json(const SqueezeCertificate& cert) {
  json j;
  j["schema"] = "squeezelab.certificate/1";
  j["variant"] = variant_name(cert.variant);
  j["fn"] = cert.fn;
  j["k"] = cert.k;
  j["a"] = cert.pair_lo.str();
  j["a_prime"] = cert.pair_hi.str();
  j["t"] = cert.spacing.str();
  j["range_mode"] = cert.open_range ? "open" : "closed";
  j["D"] = set_to_json(cert.shift_diffs, cert.shift_diffs.size());
  j["kDkD_card"] = cert.diffs.size();
  j["window"] = set_to_json(cert.window, cert.window.size());
  j["ell_range"] = json{{"lo", cert.block_range.lo}, {"hi", cert.block_range.hi}};
  j["anchors"] = set_to_json(cert.anchors, cert.anchors.size());
  json blocks = json::array();
  for (const Block& b : cert.blocks) {
    blocks.push_back(json{{"base", b.base.str()}, {"size", b.elems.size()}});
  }
  j["blocks"] = std::move(blocks);
  j["corrections"] = cert.corrections;
  j["claim_holds"] = cert.claim_holds;
  j["certified_count"] = cert.certified_count;
  j["target_superset_card"] = cert.target_superset_card;
  return j;
}

json report_to_json(const VerifyReport& report) {
  json j;
  j["schema"] = "squeezelab.report/1";
  j["statement"] = statement_name(report.statement);
  j["family"] = report.inputs.family;
  j["n"] = report.inputs.n;
  j["k"] = report.inputs.k;
  j["d"] = report.inputs.d;
  j["seed"] = report.inputs.seed;
  json cards = json::object();
  for (const auto& [name, value] : report.cardinalities) cards[name] = value;
  j["cardinalities"] = std::move(cards);
  j["certified_lower_bound"] = report.certified_lower_bound;
  j["holds"] = report.holds;
  j["runtime_ms"] = report.runtime_ms;
  if (!report.note.empty()) j["note"] = report.note;
  if (!report.witness.empty()) {
    json w;
    for (const auto& [name, set] : report.witness) {
      w[name] = set_to_json(set, kWitnessCap);
      if (set.size() > kWitnessCap) w[name + ".truncated"] = true;
    }
    j["witness"] = std::move(w);
  }
  return j;
}

std::string report_csv_header() {
  return "statement,family,n,k,d,seed,certified_lower_bound,holds,runtime_ms,cardinalities";
}

std::string report_csv_row(const VerifyReport& report) {
  std::ostringstream out;
  out << statement_name(report.statement) << ',' << report.inputs.family << ','
      << report.inputs.n << ',' << report.inputs.k << ',' << report.inputs.d << ','
      << report.inputs.seed << ',' << report.certified_lower_bound << ','
      << (report.holds ? "true" : "false") << ',' << report.runtime_ms << ',';
  bool first = true;
  for (const auto& [name, value] : report.cardinalities) {
    if (!first) out << ';';
    first = false;
    out << name << '=' << value;
  }
  return out.str();
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = strip(body.substr(0, eq));
    const std::string value = strip(body.substr(eq + 1));
    out[key] = value;
  }
  return out;
}

}  // namespace squeezelab
