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

#ifndef CKP_BENCH_HPP_
#define CKP_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ckp/generators.hpp"

namespace ckp {

struct BenchConfig {
  std::vector<Family> families;
  std::vector<std::size_t> sizes;
  std::vector<double> rhos;
  std::vector<double> capacity_factors{1.0};
  int seeds = 5;
  unsigned workers = 0;  // 0 = hardware concurrency
  // Exact solves: brute force up to kBruteForceMaxItems, branch-and-bound
  // up to exact_max_n under the limits below, skipped beyond.
  std::size_t exact_max_n = 200;
  double exact_time_limit = 10.0;
  std::size_t exact_node_limit = 200'000;
};

/// n in {10, 15}, all three families, rho 0.9, 5 seeds.
BenchConfig smoke_suite();
/// n in {100, 500, 1000, 5000}, all three families, rho in {0.9, 0.95},
/// 10 seeds.
BenchConfig paper_suite();

struct BenchRow {
  Family family = Family::kSC;
  std::size_t n = 0;
  double rho = 0.0;
  double capacity_factor = 1.0;
  std::uint64_t seed = 0;

  double z_NC = 0.0;
  double z_C = 0.0;
  double z_A = 0.0;
  std::optional<double> z_OPT;  // set only when proven
  std::string opt_method;       // bf | bb | bb-limit | none
  double z_LB = 0.0;            // best feasible objective found
  std::size_t delta_count = 0;
  std::size_t delta_star_count = 0;
  std::size_t exact_nodes = 0;
  double gap_pct = 0.0;   // (z_UB - z_A) / z_UB * 100, z_UB = min(z_NC, z_OPT)
  double cgap_pct = 0.0;  // (z_C - z_NC) / (z_C - z_LB) * 100

  double t_ncr = 0.0;
  double t_approx = 0.0;
  double t_convex = 0.0;
  double t_exact = 0.0;
  std::string error;
};

/// Runs every (family, n, rho, capacity factor, seed) cell. Rows come back
/// in a fixed order independent of the worker count.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// CSV with a fixed header, one row per run, then one "avg" row per cell.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Names of the columns holding wall times.
const std::vector<std::string>& bench_time_columns();

}  // namespace ckp

#endif  // CKP_BENCH_HPP_
