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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "ckp/cli.hpp"
#include "ckp/generators.hpp"
#include "ckp/instance_io.hpp"

using namespace ckp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ckp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "ckp_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"generate", "--family", "sc"}).code == kExitUsage);
  const auto p = (scratch() / "g.json").string();
  CHECK(run({"generate", "--family", "zz", "--n", "5", "--rho", "0.9", "--seed", "1", "--out", p}).code ==
        kExitUsage);
  CHECK(run({"generate", "--family", "sc", "--n", "5", "--seed", "1", "--rho", "1.5",
             "--out", p})
            .code == kExitUsage);
  CHECK(run({"solve", "--alg", "ncr", "--in", (scratch() / "missing.json").string()}).code ==
        kExitUsage);
  write_instance(example2(6.0), scratch() / "e2.json");
  CHECK(run({"solve", "--alg", "magic", "--in", (scratch() / "e2.json").string()}).code ==
        kExitUsage);
}

TEST_CASE("generate then solve with every algorithm") {
  const auto p = (scratch() / "sc.json").string();
  const auto g = run({"generate", "--family", "sc", "--n", "12", "--rho", "0.9", "--seed", "3", "--out", p});
  REQUIRE(g.code == kExitOk);
  CHECK(g.out.find("validation: ok") != std::string::npos);
  CHECK(read_instance(p).size() == 12u);
  for (const char* alg : {"ncr", "approx", "convex", "exact-bf", "exact-bb"}) {
    const auto r = run({"solve", "--alg", alg, "--in", p, "--json"});
    CAPTURE(alg);
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["algorithm"] == alg);
    CHECK(doc["objective"].get<double>() > 0.0);
    CHECK(doc["wall_time_s"].get<double>() >= 0.0);
    CHECK(doc["x"].size() == 12u);
  }
}

TEST_CASE("solve reports on Example 2") {
  const auto p = (scratch() / "e2.json").string();
  write_instance(example2(6.0), p);
  auto r = run({"solve", "--alg", "ncr", "--in", p, "--json"});
  REQUIRE(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["objective"].get<double>() == doctest::Approx(23.0 / 18.0));
  CHECK(doc["counters"]["delta_count"] == 5);
  CHECK(doc["counters"]["delta_star_count"] == 1);

  r = run({"solve", "--alg", "approx", "--in", p, "--json"});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["objective"].get<double>() == 1.0);
  CHECK(doc["counters"]["gap_pct"].get<double>() == doctest::Approx(100.0 * 5.0 / 23.0));

  r = run({"solve", "--alg", "exact-bb", "--in", p});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("objective:  1\n") != std::string::npos);
  CHECK(r.out.find("proven:") != std::string::npos);
}

TEST_CASE("invalid instances exit with 3, solver failures with 4") {
  const auto p = (scratch() / "trivial.json").string();
  // Everything fits: the relaxation has no boundary point.
  write_instance(Instance("trivial", {Item{1, 1, 0}, Item{1, 1, 0}}, 10.0, 1.0), p);
  CHECK(run({"solve", "--alg", "ncr", "--in", p}).code == kExitInvalidInstance);
  const auto forced = run({"solve", "--alg", "ncr", "--in", p, "--force"});
  CHECK(forced.code == kExitSolverFailure);
  CHECK_FALSE(forced.err.empty());

  const auto big = (scratch() / "big.json").string();
  write_instance(generate({Family::kSS, 30, 0.9, 1, 1.0}), big);
  CHECK(run({"solve", "--alg", "exact-bf", "--in", big}).code == kExitUsage);
}

TEST_CASE("separate prints eta, verdict and pi") {
  const auto p = (scratch() / "e1.json").string();
  write_instance(example1(100), p);
  const auto xf = scratch() / "x.txt";
  {
    std::ofstream x(xf);
    for (int i = 0; i < 100; ++i) x << "0.1\n";
  }
  auto r = run({"separate", "--in", p, "--x", xf.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("eta:     2.5") != std::string::npos);
  CHECK(r.out.find("verdict: in P_P") != std::string::npos);

  {
    std::ofstream x(xf);
    x << "0.1\n0.2\n";
  }
  CHECK(run({"separate", "--in", p, "--x", xf.string()}).code == kExitUsage);
}

TEST_CASE("bench writes a deterministic CSV") {
  const auto a = scratch() / "a.csv";
  const auto b = scratch() / "b.csv";
  const std::vector<std::string> common{"--suite", "smoke", "--seeds", "1", "--sizes", "8"};
  auto args = common;
  args.insert(args.begin(), "bench");
  auto with_out = [&](const fs::path& p, const char* workers) {
    auto v = args;
    v.insert(v.end(), {"--out", p.string(), "--workers", workers});
    return v;
  };
  REQUIRE(run(with_out(a, "1")).code == kExitOk);
  REQUIRE(run(with_out(b, "3")).code == kExitOk);
  const std::string ca = slurp(a);
  CHECK(ca.rfind("family,n,rho,capacity_factor,seed,z_NC", 0) == 0);
  // 3 families x 1 seed, plus one average row per cell.
  CHECK(std::count(ca.begin(), ca.end(), '\n') == 1 + 3 + 3);
  CHECK(ca.find(",avg,") != std::string::npos);
  CHECK(slurp(b).size() > 0u);
}
