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
//
// squeezelab: compute exact sumset-style sets, build packing certificates,
// and run the statement verifiers, one binary with four subcommands.
//
// Exit codes (stable contract):
//   0  success
//   1  a verified mathematical statement failed to hold (witness emitted)
//   2  cardinality guard exceeded
//   3  usage error (bad flags, malformed input, infeasible family, ...)
//   4  vacuous block index range (no certificate exists for this n, k)

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "squeezelab/convex.hpp"
#include "squeezelab/errors.hpp"
#include "squeezelab/families.hpp"
#include "squeezelab/io.hpp"
#include "squeezelab/kernels.hpp"
#include "squeezelab/numset.hpp"
#include "squeezelab/scalar.hpp"
#include "squeezelab/squeeze.hpp"
#include "squeezelab/verify.hpp"

namespace {

using namespace squeezelab;

// ---------------------------------------------------------------------------
// Shared option bundles

struct InputOpts {
  std::string family;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::string file;
};

void add_input_opts(CLI::App* cmd, InputOpts* in) {
  auto* fam = cmd->add_option("--family", in->family,
                              "Set family (ap | convex | geo:R | gap:r=2,dims=AxB,steps=S:T | "
                              "randint:LO..HI | randrat:LO..HI/LO..HI)");
  auto* n = cmd->add_option("--n", in->n, "Family cardinality")->check(CLI::PositiveNumber);
  auto* seed = cmd->add_option("--seed", in->seed, "Family seed (default 0)");
  auto* file = cmd->add_option("--file", in->file, "Read the set from a file instead");
  file->excludes(fam)->excludes(n)->excludes(seed);
}

// Loads the primary input set plus the label reports carry in their
// `family` field.
std::pair<NumSet, std::string> load_primary(const InputOpts& in) {
  if (!in.file.empty()) return {load_set(in.file), "file:" + in.file};
  if (in.family.empty()) throw ParseError("provide either --family with --n, or --file");
  if (in.n == 0) throw ParseError("--n is required with --family");
  const FamilySpec spec = FamilySpec::parse(in.family, in.n, in.seed);
  return {generate(spec), spec.str()};
}

CardinalityGuard make_guard(std::uint64_t flag_value, bool flag_given) {
  CardinalityGuard g = CardinalityGuard::from_env();
  if (flag_given) g.max_card = flag_value;
  return g;
}

void apply_kernel_choice(const std::string& name) {
  if (name.empty()) return;
  if (!kern::force_ops(name.c_str())) {
    throw ParseError("unknown or unavailable kernel variant: " + name);
  }
}

ConvexFn parse_fn(const std::string& text) {
  if (text == "square") return ConvexFn::square();
  constexpr std::string_view kPoly = "poly:";
  if (text.rfind(kPoly, 0) == 0) {
    std::vector<Scalar> coeffs;
    std::stringstream body(text.substr(kPoly.size()));
    std::string piece;
    while (std::getline(body, piece, ',')) coeffs.push_back(Scalar::parse(piece));
    if (coeffs.empty()) throw ParseError("poly: needs at least one coefficient");
    return ConvexFn::polynomial(std::move(coeffs));
  }
  throw ParseError("unknown function spelling: " + text + " (expected square or poly:c0,c1,...)");
}

Variant parse_variant(const std::string& text) {
  if (text == "shift-plus") return Variant::kShiftPlus;
  if (text == "shift-minus") return Variant::kShiftMinus;
  if (text == "mult") return Variant::kMultiplicative;
  throw ParseError("unknown variant: " + text + " (expected shift-plus, shift-minus, or mult)");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  return out;
}

void write_set(std::ostream& out, const NumSet& a) {
  for (std::size_t i = 0; i < a.size(); ++i) out << a.at(i).str() << '\n';
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOpts {
  std::string op;
  InputOpts input;
  unsigned k = 1;
  unsigned d = 2;
  std::string out_path;
};

int run_compute(const ComputeOpts& opt, const CardinalityGuard& guard) {
  const auto [a, label] = load_primary(opt.input);
  (void)label;
  NumSet result;
  if (opt.op == "sum") {
    result = sumset(a, a, guard);
  } else if (opt.op == "diff") {
    result = difference_set(a, a, guard);
  } else if (opt.op == "ksum") {
    result = iterated_sumset(a, opt.k, guard);
  } else if (opt.op == "kdiff") {
    result = k_diff(a, opt.k, guard);
  } else if (opt.op == "sqdiff") {
    result = squared_difference_set(a, guard);
  } else if (opt.op == "prodset") {
    result = product_set(a, a, guard);
  } else if (opt.op == "delta") {
    result = iterated_sumset(squared_difference_set(a, guard), opt.d, guard);
  } else {
    throw ParseError("unknown op: " + opt.op +
                     " (expected sum, diff, ksum, kdiff, sqdiff, prodset, or delta)");
  }
  if (opt.out_path.empty()) {
    write_set(std::cout, result);
  } else {
    auto out = open_out(opt.out_path);
    write_set(out, result);
  }
  std::cout << "cardinality " << result.size() << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOpts {
  std::string variant = "shift-plus";
  std::string fn = "square";
  InputOpts input;
  unsigned k = 1;
  std::string out_path;
};

int run_certify(const CertifyOpts& opt, const CardinalityGuard& guard) {
  const auto [a, label] = load_primary(opt.input);
  (void)label;
  const Variant variant = parse_variant(opt.variant);
  const ConvexFn fn = parse_fn(opt.fn);
  const SqueezeCertificate cert = build_certificate(variant, fn, a, opt.k, guard);
  const std::string text = certificate_to_json(cert).dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    open_out(opt.out_path) << text;
  }
  std::cout << "certified_count " << cert.certified_count << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// verify / sweep share the statement runners

struct StatementOpts {
  StatementId statement = StatementId::kQuadBound;
  unsigned k = 1;
  unsigned d = 0;
  std::optional<Scalar> t;  // diff-range only; defaults to max(A) + 1
};

// Runs one single-set statement. A PreconditionViolated from the verifier —
// the statement's hypotheses fail on this input, e.g. the packing's blocks
// collide on a set without the needed structure — is an honest mathematical
// failure, reported as holds=false with the reason in `note` rather than
// aborting a whole sweep.
VerifyReport dispatch_statement(const StatementOpts& st, const NumSet& a,
                                const CardinalityGuard& guard) {
  try {
    switch (st.statement) {
      case StatementId::kQuadBound:
        return verify_quad_bound(a, st.k, guard);
      case StatementId::kMainChain:
        return verify_main_chain(a, st.k, guard);
      case StatementId::kProductExpander:
        return verify_product_expander(a, st.k, guard);
      case StatementId::kDistributiveRefinement:
        return verify_distributive_refinement(a, st.k, guard);
      case StatementId::kDiffRangeControl: {
        const Scalar t = st.t ? *st.t : a.back() + Scalar(1);
        return verify_diff_range_control(a, st.k, t, guard);
      }
      case StatementId::kDIdentity:
        return verify_d_identity(a, st.k, guard);
      case StatementId::kRuzsaTriangle:
        break;  // three-set statement, handled by the callers
    }
  } catch (const PreconditionViolated& e) {
    VerifyReport report;
    report.statement = st.statement;
    report.inputs.n = a.size();
    report.inputs.k = st.k;
    report.holds = false;
    report.note = std::string("precondition violated: ") + e.what();
    report.witness.emplace_back("A", a);
    return report;
  }
  throw ParseError("unhandled statement");
}

// Runs one statement on sets generated from `family` text at (n, seed). The
// Ruzsa statement consumes three sets; their seeds derive from the point
// seed s as 3s, 3s+1, 3s+2.
VerifyReport run_family_point(const StatementOpts& st, const std::string& family, std::uint32_t n,
                              std::uint64_t seed, const CardinalityGuard& guard) {
  if (st.statement == StatementId::kRuzsaTriangle) {
    const NumSet x = generate(FamilySpec::parse(family, n, 3 * seed));
    const NumSet y = generate(FamilySpec::parse(family, n, 3 * seed + 1));
    const NumSet z = generate(FamilySpec::parse(family, n, 3 * seed + 2));
    VerifyReport report = verify_ruzsa_triangle(x, y, z, guard);
    report.inputs.family = FamilySpec::parse(family, n, seed).str();
    report.inputs.seed = seed;
    return report;
  }
  const FamilySpec spec = FamilySpec::parse(family, n, seed);
  const NumSet a = generate(spec);
  VerifyReport report = dispatch_statement(st, a, guard);
  report.inputs.family = spec.str();
  report.inputs.seed = seed;
  report.inputs.d = st.d;
  return report;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string statement;
  InputOpts input;
  std::string file2, file3;  // extra Ruzsa inputs
  unsigned k = 1;
  unsigned d = 0;
  std::string t_text;
  std::string json_path;
  bool timings = false;
};

void print_report_summary(const VerifyReport& report) {
  std::cout << "statement=" << statement_name(report.statement)
            << " family=" << report.inputs.family << " n=" << report.inputs.n
            << " k=" << report.inputs.k << " seed=" << report.inputs.seed << '\n';
  for (const auto& [name, value] : report.cardinalities) {
    std::cout << "  |" << name << "| = " << value << '\n';
  }
  std::cout << "certified_lower_bound = " << report.certified_lower_bound << '\n';
  if (!report.note.empty()) std::cout << "note: " << report.note << '\n';
  std::cout << "holds=" << (report.holds ? "true" : "false") << '\n';
}

int run_verify(const VerifyOpts& opt, const CardinalityGuard& guard) {
  StatementOpts st;
  st.statement = statement_from_name(opt.statement);
  st.k = opt.k;
  st.d = opt.d;
  if (!opt.t_text.empty()) st.t = Scalar::parse(opt.t_text);

  const auto started = std::chrono::steady_clock::now();
  VerifyReport report = [&] {
    if (!opt.input.file.empty()) {
      const NumSet a = load_set(opt.input.file);
      if (st.statement == StatementId::kRuzsaTriangle) {
        const NumSet y = opt.file2.empty() ? a : load_set(opt.file2);
        const NumSet z = opt.file3.empty() ? a : load_set(opt.file3);
        VerifyReport r = verify_ruzsa_triangle(a, y, z, guard);
        r.inputs.family = "file:" + opt.input.file;
        return r;
      }
      VerifyReport r = dispatch_statement(st, a, guard);
      r.inputs.family = "file:" + opt.input.file;
      r.inputs.d = st.d;
      return r;
    }
    if (opt.input.family.empty() || opt.input.n == 0) {
      throw ParseError("provide either --family with --n, or --file");
    }
    return run_family_point(st, opt.input.family, opt.input.n, opt.input.seed, guard);
  }();
  if (opt.timings) {
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  }

  const std::string line = report_to_json(report).dump() + "\n";
  if (!opt.json_path.empty()) open_out(opt.json_path) << line;
  print_report_summary(report);
  if (!report.holds && opt.json_path.empty()) std::cout << line;  // witness for forensics
  return report.holds ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
  std::string statement;
  std::vector<std::string> families;
  std::vector<std::uint32_t> ns;
  std::vector<unsigned> ks;
  unsigned d = 0;
  std::string t_text;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool timings = false;
  std::string out_path;
  std::string csv_path;
};

struct GridPoint {
  std::string family;
  std::uint32_t n;
  unsigned k;
  std::uint64_t seed;
};

int run_sweep(const SweepOpts& opt, const CardinalityGuard& guard) {
  StatementOpts st;
  st.statement = statement_from_name(opt.statement);
  st.d = opt.d;
  if (!opt.t_text.empty()) st.t = Scalar::parse(opt.t_text);

  const std::vector<std::string> families =
      opt.families.empty() ? std::vector<std::string>{"randint:1..10^6"} : opt.families;
  const std::vector<unsigned> ks = opt.ks.empty() ? std::vector<unsigned>{1} : opt.ks;

  std::vector<GridPoint> grid;
  for (const std::string& family : families) {
    for (const std::uint32_t n : opt.ns) {
      for (const unsigned k : ks) {
        for (std::uint32_t trial = 0; trial < opt.trials; ++trial) {
          grid.push_back(GridPoint{family, n, k, opt.seed + trial});
        }
      }
    }
  }
  if (grid.empty()) throw ParseError("sweep grid is empty");

  std::vector<VerifyReport> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= grid.size()) return;
      const GridPoint& p = grid[i];
      try {
        StatementOpts point_st = st;
        point_st.k = p.k;
        const auto started = std::chrono::steady_clock::now();
        results[i] = run_family_point(point_st, p.family, p.n, p.seed, guard);
        if (opt.timings) {
          results[i].runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - started)
                                      .count();
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned worker_count =
      std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(grid.size())));
  if (worker_count == 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) workers.emplace_back(work);
    for (std::thread& t : workers) t.join();
  }
  // First failure in grid order, so behavior is independent of thread count.
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::ostringstream jsonl;
  std::ostringstream csv;
  csv << report_csv_header() << '\n';
  std::size_t violations = 0;
  for (const VerifyReport& report : results) {
    jsonl << report_to_json(report).dump() << '\n';
    csv << report_csv_row(report) << '\n';
    if (!report.holds) ++violations;
  }
  if (opt.out_path.empty()) {
    std::cout << jsonl.str();
  } else {
    open_out(opt.out_path) << jsonl.str();
  }
  if (!opt.csv_path.empty()) open_out(opt.csv_path) << csv.str();
  std::cout << "sweep points=" << results.size() << " violations=" << violations << '\n';
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sumset computations and packing-certificate verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key=value config file; command-line flags override it");

  std::uint64_t max_card = CardinalityGuard::kDefaultMaxCard;
  std::string kernel;

  ComputeOpts compute_opts;
  CLI::App* compute = app.add_subcommand("compute", "Compute a derived set and its cardinality");
  compute->add_option("--op", compute_opts.op,
                      "sum | diff | ksum | kdiff | sqdiff | prodset | delta")
      ->required();
  add_input_opts(compute, &compute_opts.input);
  compute->add_option("--k", compute_opts.k, "Fold count for ksum/kdiff (default 1)")
      ->check(CLI::PositiveNumber);
  compute->add_option("--d", compute_opts.d, "Dimension for delta (default 2)")
      ->check(CLI::PositiveNumber);
  compute->add_option("--out", compute_opts.out_path, "Write the set here instead of stdout");

  CertifyOpts certify_opts;
  CLI::App* certify = app.add_subcommand("certify", "Build and verify a packing certificate");
  certify->add_option("--variant", certify_opts.variant,
                      "shift-plus | shift-minus | mult (default shift-plus)");
  certify->add_option("--fn", certify_opts.fn, "square | poly:c0,c1,... (default square)");
  add_input_opts(certify, &certify_opts.input);
  certify->add_option("--k", certify_opts.k, "Fold count (default 1)")->check(CLI::PositiveNumber);
  certify->add_option("--out", certify_opts.out_path, "Write certificate JSON here");

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Run one statement verifier");
  verify->add_option("--statement", verify_opts.statement,
                     "cor-quad | ruzsa | main-chain | expander | distributive | diff-range | "
                     "d-identity")
      ->required();
  add_input_opts(verify, &verify_opts.input);
  verify->add_option("--file2", verify_opts.file2, "Second set (ruzsa)");
  verify->add_option("--file3", verify_opts.file3, "Third set (ruzsa)");
  verify->add_option("--k", verify_opts.k, "Fold count (default 1)")->check(CLI::PositiveNumber);
  verify->add_option("--d", verify_opts.d, "Dimension tag recorded in the report");
  verify->add_option("--t", verify_opts.t_text, "Range bound for diff-range (default max(A)+1)");
  verify->add_option("--json", verify_opts.json_path, "Write the JSONL report line here");
  verify->add_flag("--timings", verify_opts.timings, "Record wall-clock runtime_ms");

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a verifier over a seeded grid");
  sweep->add_option("--statement", sweep_opts.statement,
                    "cor-quad | ruzsa | main-chain | expander | distributive | diff-range | "
                    "d-identity")
      ->required();
  sweep->add_option("--family", sweep_opts.families,
                    "Families to sweep (default randint:1..10^6)")
      ->delimiter(',');
  sweep->add_option("--n", sweep_opts.ns, "Cardinalities to sweep (comma-separated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep->add_option("--k", sweep_opts.ks, "Fold counts to sweep (comma-separated, default 1)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep->add_option("--d", sweep_opts.d, "Dimension tag recorded in reports");
  sweep->add_option("--t", sweep_opts.t_text, "Range bound for diff-range (default max(A)+1)");
  sweep->add_option("--trials", sweep_opts.trials, "Seeds per grid cell (default 1)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_opts.seed, "Base seed; trial i uses seed+i (default 0)");
  sweep->add_option("--threads", sweep_opts.threads, "Worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--timings", sweep_opts.timings,
                  "Record wall-clock runtime_ms (reports stop being byte-stable)");
  sweep->add_option("--out", sweep_opts.out_path, "Write JSONL reports here instead of stdout");
  sweep->add_option("--csv", sweep_opts.csv_path, "Also write a CSV summary here");

  for (CLI::App* cmd : {compute, certify, verify, sweep}) {
    cmd->add_option("--max-card", max_card,
                    "Cardinality guard (overrides SQUEEZELAB_MAX_CARD and the default)");
    cmd->add_option("--kernel", kernel, "Pin a broadcast kernel variant (scalar, avx2, neon)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    bool max_card_given = false;
    for (CLI::App* cmd : {compute, certify, verify, sweep}) {
      if (cmd->parsed() && cmd->count("--max-card") > 0) max_card_given = true;
    }
    const CardinalityGuard guard = make_guard(max_card, max_card_given);
    apply_kernel_choice(kernel);
    if (compute->parsed()) return run_compute(compute_opts, guard);
    if (certify->parsed()) return run_certify(certify_opts, guard);
    if (verify->parsed()) return run_verify(verify_opts, guard);
    return run_sweep(sweep_opts, guard);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return 2;
  } catch (const EmptyBlockRange& e) {
    std::cerr << "vacuous block index range: (" << e.lo() << ", " << e.hi()
              << "] contains no integer\n";
    return 4;
  } catch (const PreconditionViolated& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
