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

#include "ckp/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "ckp/approx.hpp"
#include "ckp/bounds.hpp"
#include "ckp/exact.hpp"
#include "ckp/ncr.hpp"

namespace ckp {

namespace {

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double> d =
      std::chrono::steady_clock::now() - start;
  return d.count();
}

void run_row(const BenchConfig& config, BenchRow& row) {
  const Instance inst = generate(GenSpec{row.family, row.n, row.rho, row.seed,
                                         row.capacity_factor});
  NcrResult ncr;
  row.t_ncr = timed([&] { ncr = solve_ncr(inst); });
  row.z_NC = ncr.z;
  row.delta_count = ncr.deltas.delta_count;
  row.delta_star_count = ncr.deltas.candidates.size();

  ApproxResult approx;
  row.t_approx = timed([&] { approx = solve_approx(inst); });
  row.z_A = approx.x.objective;
  row.z_LB = row.z_A;

  ConvexBound convex;
  row.t_convex = timed([&] {
    try {
      convex = convex_bound(inst);
    } catch (const BoundQualityError& e) {
      convex.z_C = e.best_bound;
    }
  });
  row.z_C = convex.z_C;

  row.opt_method = "none";
  if (row.n <= kBruteForceMaxItems) {
    ExactResult ex;
    row.t_exact = timed([&] { ex = brute_force(inst); });
    row.z_OPT = ex.z_OPT;
    row.exact_nodes = ex.nodes;
    row.opt_method = "bf";
  } else if (row.n <= config.exact_max_n) {
    ExactResult ex;
    row.t_exact = timed([&] {
      ex = branch_and_bound(
          inst, {config.exact_node_limit, config.exact_time_limit});
    });
    row.exact_nodes = ex.nodes;
    row.z_LB = std::max(row.z_LB, ex.z_OPT);
    if (ex.proven) {
      row.z_OPT = ex.z_OPT;
      row.opt_method = "bb";
    } else {
      row.opt_method = "bb-limit";
    }
  }
  if (row.z_OPT) row.z_LB = std::max(row.z_LB, *row.z_OPT);

  const double z_ub = row.z_OPT ? std::min(row.z_NC, *row.z_OPT) : row.z_NC;
  row.gap_pct = z_ub > 0.0 ? (z_ub - row.z_A) / z_ub * 100.0 : 0.0;
  const double denom = row.z_C - row.z_LB;
  row.cgap_pct = denom > 0.0 ? (row.z_C - row.z_NC) / denom * 100.0 : 100.0;
}

std::string num(double v) { return fmt::format("{:.12g}", v); }
std::string secs(double v) { return fmt::format("{:.6f}", v); }

}  // namespace

BenchConfig smoke_suite() {
  BenchConfig c;
  c.families = {Family::kSC, Family::kIC, Family::kSS};
  c.sizes = {10, 15};
  c.rhos = {0.9};
  c.seeds = 5;
  return c;
}

BenchConfig paper_suite() {
  BenchConfig c;
  c.families = {Family::kSC, Family::kIC, Family::kSS};
  c.sizes = {100, 500, 1000, 5000};
  c.rhos = {0.9, 0.95};
  c.seeds = 10;
  return c;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (Family f : config.families) {
    for (std::size_t n : config.sizes) {
      for (double rho : config.rhos) {
        for (double factor : config.capacity_factors) {
          for (int s = 0; s < config.seeds; ++s) {
            BenchRow r;
            r.family = f;
            r.n = n;
            r.rho = rho;
            r.capacity_factor = factor;
            r.seed = static_cast<std::uint64_t>(s);
            rows.push_back(std::move(r));
          }
        }
      }
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        run_row(config, rows[i]);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  unsigned workers =
      config.workers == 0 ? std::thread::hardware_concurrency() : config.workers;
  workers = std::max(1u, workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

const std::vector<std::string>& bench_time_columns() {
  static const std::vector<std::string> cols = {"t_ncr", "t_approx",
                                                "t_convex", "t_exact"};
  return cols;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "family,n,rho,capacity_factor,seed,z_NC,z_C,z_A,z_OPT,opt_method,"
         "z_LB,delta_count,delta_star_count,exact_nodes,gap_pct,cgap_pct,"
         "t_ncr,t_approx,t_convex,t_exact,error\n";
  auto clean = [](std::string s) {
    for (char& ch : s) {
      if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
    }
    return s;
  };
  for (const BenchRow& r : rows) {
    out << fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        family_name(r.family), r.n, num(r.rho), num(r.capacity_factor), r.seed,
        num(r.z_NC), num(r.z_C), num(r.z_A), r.z_OPT ? num(*r.z_OPT) : "",
        r.opt_method, num(r.z_LB), r.delta_count, r.delta_star_count,
        r.exact_nodes, num(r.gap_pct), num(r.cgap_pct), secs(r.t_ncr),
        secs(r.t_approx), secs(r.t_convex), secs(r.t_exact), clean(r.error));
  }

  // Per-cell averages over successful rows, in first-appearance order.
  using Key = std::tuple<int, std::size_t, double, double>;
  struct Acc {
    int count = 0;
    double z_NC = 0, z_C = 0, z_A = 0, z_LB = 0, gap = 0, cgap = 0;
    double dc = 0, dsc = 0, nodes = 0;
    double t_ncr = 0, t_approx = 0, t_convex = 0, t_exact = 0;
  };
  std::vector<Key> order;
  std::map<Key, Acc> acc;
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) continue;
    const Key k{static_cast<int>(r.family), r.n, r.rho, r.capacity_factor};
    auto [it, inserted] = acc.try_emplace(k);
    if (inserted) order.push_back(k);
    Acc& a = it->second;
    ++a.count;
    a.z_NC += r.z_NC;
    a.z_C += r.z_C;
    a.z_A += r.z_A;
    a.z_LB += r.z_LB;
    a.gap += r.gap_pct;
    a.cgap += r.cgap_pct;
    a.dc += static_cast<double>(r.delta_count);
    a.dsc += static_cast<double>(r.delta_star_count);
    a.nodes += static_cast<double>(r.exact_nodes);
    a.t_ncr += r.t_ncr;
    a.t_approx += r.t_approx;
    a.t_convex += r.t_convex;
    a.t_exact += r.t_exact;
  }
  for (const Key& k : order) {
    const Acc& a = acc.at(k);
    const double m = a.count;
    out << fmt::format(
        "{},{},{},{},avg,{},{},{},,,{},{},{},{},{},{},{},{},{},{},\n",
        family_name(static_cast<Family>(std::get<0>(k))), std::get<1>(k),
        num(std::get<2>(k)), num(std::get<3>(k)), num(a.z_NC / m),
        num(a.z_C / m), num(a.z_A / m), num(a.z_LB / m), num(a.dc / m),
        num(a.dsc / m), num(a.nodes / m), num(a.gap / m), num(a.cgap / m),
        secs(a.t_ncr / m), secs(a.t_approx / m), secs(a.t_convex / m),
        secs(a.t_exact / m));
  }
}

}  // namespace ckp
