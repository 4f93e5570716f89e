// Copyright 2026 The ckp Authors
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

#include "ckp/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckp/approx.hpp"
#include "ckp/bench.hpp"
#include "ckp/bounds.hpp"
#include "ckp/exact.hpp"
#include "ckp/generators.hpp"
#include "ckp/instance_io.hpp"
#include "ckp/ncr.hpp"

namespace ckp {

namespace {

using nlohmann::ordered_json;

// Thrown inside command handlers; carries the exit code to return.
struct CommandFailure {
  int code;
  std::string message;
};

struct RunRecord {
  std::string instance;
  std::string algorithm;
  double value = 0.0;
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, ordered_json>> counters;
  std::vector<double> x;
};

void emit(const RunRecord& rec, bool as_json, std::ostream& out) {
  if (as_json) {
    ordered_json doc;
    doc["instance"] = rec.instance;
    doc["algorithm"] = rec.algorithm;
    doc["objective"] = rec.value;
    doc["wall_time_s"] = rec.wall_seconds;
    ordered_json counters = ordered_json::object();
    for (const auto& [k, v] : rec.counters) counters[k] = v;
    doc["counters"] = std::move(counters);
    doc["x"] = rec.x;
    out << doc.dump(2) << "\n";
    return;
  }
  fmt::print(out, "instance:   {}\n", rec.instance);
  fmt::print(out, "algorithm:  {}\n", rec.algorithm);
  fmt::print(out, "objective:  {:.12g}\n", rec.value);
  fmt::print(out, "time_s:     {:.6f}\n", rec.wall_seconds);
  for (const auto& [k, v] : rec.counters) {
    fmt::print(out, "{:<11} {}\n", k + ":", v.dump());
  }
}

Instance load(const std::string& path) {
  try {
    return read_instance(path);
  } catch (const IoError& e) {
    throw CommandFailure{kExitUsage, e.what()};
  }
}

void check_valid(const Instance& inst, bool force) {
  try {
    require_valid(inst, force);
  } catch (const InvalidInstanceError& e) {
    throw CommandFailure{kExitInvalidInstance, e.what()};
  }
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double> d =
      std::chrono::steady_clock::now() - start;
  return d.count();
}

std::vector<double> to_vector(const std::vector<std::uint8_t>& bits) {
  return {bits.begin(), bits.end()};
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  double rho = 0.9;
  std::uint64_t seed = 0;
  double capacity_factor = 1.0;
  std::string out;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  const auto family = parse_family(args.family);
  if (!family) throw CommandFailure{kExitUsage, "unknown family " + args.family};
  Instance inst = [&] {
    try {
      return generate(
          GenSpec{*family, args.n, args.rho, args.seed, args.capacity_factor});
    } catch (const DomainError& e) {
      throw CommandFailure{kExitUsage, e.what()};
    } catch (const InvalidInstanceError& e) {
      throw CommandFailure{kExitInvalidInstance, e.what()};
    }
  }();
  try {
    write_instance(inst, args.out);
  } catch (const IoError& e) {
    throw CommandFailure{kExitUsage, e.what()};
  }
  const auto violations = validate(inst);
  fmt::print(out, "wrote {} ({} items, b = {:.12g}, kappa = {:.12g})\n",
             args.out, inst.size(), inst.capacity(), inst.kappa());
  if (violations.empty()) {
    fmt::print(out, "validation: ok\n");
    return kExitOk;
  }
  for (const auto& v : violations) fmt::print(out, "violation: {}\n", v.message);
  return kExitInvalidInstance;
}

struct SolveArgs {
  std::string alg;
  std::string in;
  bool json = false;
  bool force = false;
  double time_limit = 60.0;
  std::size_t node_limit = 1'000'000;
};

RunRecord solve_record(const Instance& inst, const SolveArgs& args) {
  RunRecord rec;
  rec.instance = inst.name();
  rec.algorithm = args.alg;
  if (args.alg == "ncr") {
    NcrResult r;
    rec.wall_seconds = timed([&] { r = solve_ncr(inst); });
    rec.value = r.z;
    rec.x = r.x.x;
    rec.counters = {{"delta_count", r.deltas.delta_count},
                    {"delta_star_count", r.deltas.candidates.size()},
                    {"delta_L", r.deltas.delta_L},
                    {"delta_U", r.deltas.delta_U},
                    {"best_delta", r.best_delta},
                    {"g_x", eval_g(inst, r.x.x)}};
    if (r.x.frac_index) rec.counters.emplace_back("frac_index", *r.x.frac_index);
  } else if (args.alg == "approx") {
    ApproxResult r;
    rec.wall_seconds = timed([&] { r = solve_approx(inst); });
    rec.value = r.x.objective;
    rec.x = to_vector(r.x.x);
    const double z_nc = r.certificate.z_NC;
    const double gap = z_nc > 0.0 ? (z_nc - r.x.objective) / z_nc * 100.0 : 0.0;
    rec.counters = {{"z_NC", z_nc},
                    {"ratio", r.certificate.ratio},
                    {"gap_pct", gap},
                    {"g_x", r.x.g_value}};
  } else if (args.alg == "convex") {
    ConvexBound r;
    rec.wall_seconds = timed([&] { r = convex_bound(inst); });
    rec.value = r.z_C;
    rec.x = r.primal_x;
    rec.counters = {{"lambda", r.lambda_star},
                    {"iterations", r.iterations},
                    {"primal_value", r.primal_value},
                    {"duality_gap", r.duality_gap}};
  } else if (args.alg == "exact-bf" || args.alg == "exact-bb") {
    ExactResult r;
    rec.wall_seconds = timed([&] {
      r = args.alg == "exact-bf"
              ? brute_force(inst)
              : branch_and_bound(inst, {args.node_limit, args.time_limit});
    });
    rec.value = r.z_OPT;
    rec.x = to_vector(r.x_opt);
    rec.counters = {{"nodes", r.nodes}, {"proven", r.proven}};
  } else {
    throw CommandFailure{kExitUsage, "unknown algorithm " + args.alg};
  }
  return rec;
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const Instance inst = load(args.in);
  check_valid(inst, args.force);
  RunRecord rec;
  try {
    rec = solve_record(inst, args);
  } catch (const CommandFailure&) {
    throw;
  } catch (const UsageError& e) {
    throw CommandFailure{kExitUsage, e.what()};
  } catch (const std::exception& e) {
    throw CommandFailure{kExitSolverFailure, e.what()};
  }
  emit(rec, args.json, out);
  return kExitOk;
}

struct SeparateArgs {
  std::string in;
  std::string x;
};

int cmd_separate(const SeparateArgs& args, std::ostream& out) {
  const Instance inst = load(args.in);
  std::ifstream xs(args.x);
  if (!xs) throw CommandFailure{kExitUsage, "cannot open " + args.x};
  std::vector<double> x;
  for (double v; xs >> v;) x.push_back(v);
  if (!xs.eof()) throw CommandFailure{kExitUsage, "malformed vector file " + args.x};
  if (x.size() != inst.size()) {
    throw CommandFailure{kExitUsage,
                         fmt::format("vector has {} entries, instance has {}",
                                     x.size(), inst.size())};
  }
  const SeparationResult r = separate(inst, x);
  fmt::print(out, "eta:     {:.15g}\n", r.eta);
  fmt::print(out, "b:       {:.15g}\n", inst.capacity());
  fmt::print(out, "verdict: {}\n", r.in_polytope ? "in P_P" : "not in P_P");
  fmt::print(out, "pi:");
  for (double p : r.pi) fmt::print(out, " {:.15g}", p);
  fmt::print(out, "\n");
  return kExitOk;
}

struct BenchArgs {
  std::string suite = "smoke";
  std::string out;
  int seeds = -1;
  std::vector<double> rhos;
  std::vector<std::size_t> sizes;
  std::vector<double> capacity_factors;
  unsigned workers = 0;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  BenchConfig config = args.suite == "paper" ? paper_suite() : smoke_suite();
  if (args.seeds >= 0) config.seeds = args.seeds;
  if (!args.rhos.empty()) config.rhos = args.rhos;
  if (!args.sizes.empty()) config.sizes = args.sizes;
  if (!args.capacity_factors.empty()) config.capacity_factors = args.capacity_factors;
  config.workers = args.workers;

  const auto rows = run_bench(config);
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw CommandFailure{kExitUsage, "cannot open " + args.out};
  write_bench_csv(file, rows);

  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.error.empty() ? 0 : 1;
  fmt::print(out, "wrote {} rows to {} ({} failed)\n", rows.size(), args.out,
             failed);
  return failed == rows.size() && !rows.empty() ? kExitSolverFailure : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Chance-constrained knapsack toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a benchmark instance as JSON");
  g->add_option("--family", gen.family, "sc | ic | ss")
      ->required()
      ->check(CLI::IsMember({"sc", "ic", "ss", "SC", "IC", "SS"}));
  g->add_option("--n", gen.n, "Item count (>= 2)")->required();
  g->add_option("--rho", gen.rho, "Probability threshold in [0.5, 1)")
      ->required();
  g->add_option("--seed", gen.seed, "64-bit seed")->required();
  g->add_option("--capacity-factor", gen.capacity_factor,
                "Multiplier on floor(sum a)");
  g->add_option("--out", gen.out, "Output path")->required();

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve or bound an instance");
  s->add_option("--alg", solve.alg, "ncr | approx | convex | exact-bf | exact-bb")
      ->required()
      ->check(CLI::IsMember({"ncr", "approx", "convex", "exact-bf", "exact-bb"}));
  s->add_option("--in", solve.in, "Instance JSON")->required();
  s->add_flag("--json", solve.json, "Emit the record as JSON");
  s->add_flag("--force", solve.force, "Skip instance validation");
  s->add_option("--time-limit", solve.time_limit, "Seconds (exact-bb)");
  s->add_option("--node-limit", solve.node_limit, "Nodes (exact-bb)");

  SeparateArgs sep;
  auto* p = app.add_subcommand("separate",
                               "Separate a point from the polyhedral relaxation");
  p->add_option("--in", sep.in, "Instance JSON")->required();
  p->add_option("--x", sep.x, "Point, one value per line")->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a benchmark suite to CSV");
  b->add_option("--suite", bench.suite, "paper | smoke")
      ->check(CLI::IsMember({"paper", "smoke"}));
  b->add_option("--out", bench.out, "CSV path")->required();
  b->add_option("--seeds", bench.seeds, "Seeds per cell");
  b->add_option("--rho", bench.rhos, "Probability thresholds")->delimiter(',');
  b->add_option("--sizes", bench.sizes, "Item counts")->delimiter(',');
  b->add_option("--capacity-factors", bench.capacity_factors,
                "Capacity multipliers")
      ->delimiter(',');
  b->add_option("--workers", bench.workers, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*s) return cmd_solve(solve, out);
    if (*p) return cmd_separate(sep, out);
    if (*b) return cmd_bench(bench, out);
  } catch (const CommandFailure& f) {
    fmt::print(err, "error: {}\n", f.message);
    return f.code;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitSolverFailure;
  }
  return kExitUsage;
}

}  // namespace ckp
