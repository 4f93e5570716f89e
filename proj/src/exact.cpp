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

#include "ckp/exact.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "ckp/approx.hpp"
#include "ckp/ncr.hpp"

namespace ckp {

namespace {

struct Enumerator {
  const Instance& inst;
  std::vector<std::uint8_t> current;
  ExactResult best;
  bool have_best = false;

  void visit(std::size_t j, double profit, double mean, double var) {
    if (j == inst.size()) {
      ++best.nodes;
      const double g = mean + inst.kappa() * std::sqrt(var);
      if (within_capacity(inst, g) && (!have_best || profit > best.z_OPT)) {
        best.z_OPT = profit;
        best.x_opt = current;
        have_best = true;
      }
      return;
    }
    current[j] = 0;
    visit(j + 1, profit, mean, var);
    const Item& it = inst.item(j);
    current[j] = 1;
    visit(j + 1, profit + it.c, mean + it.a, var + it.sigma2);
    current[j] = 0;
  }
};

class Search {
 public:
  Search(const Instance& inst, const BranchAndBoundLimits& limits)
      : inst_(inst),
        limits_(limits),
        fixing_(inst.size(), Fix::kFree),
        start_(std::chrono::steady_clock::now()) {}

  ExactResult run() {
    const ApproxResult seed = solve_approx(inst_);
    best_.z_OPT = seed.x.objective;
    best_.x_opt = seed.x.x;
    dive();
    best_.proven = !aborted_;
    return best_;
  }

 private:
  bool out_of_budget() const {
    if (best_.nodes >= limits_.node_limit) return true;
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start_;
    return elapsed.count() > limits_.time_limit_seconds;
  }

  bool dominated(double bound) const {
    return bound <= best_.z_OPT + 1e-12 * std::max(1.0, std::abs(best_.z_OPT));
  }

  std::size_t free_count() const {
    std::size_t k = 0;
    for (Fix f : fixing_) k += f == Fix::kFree ? 1 : 0;
    return k;
  }

  // Fixed-to-one items alone within capacity.
  bool anchor_fits() const {
    double mean = 0.0;
    double var = 0.0;
    for (std::size_t j = 0; j < fixing_.size(); ++j) {
      if (fixing_[j] == Fix::kOne) {
        mean += inst_.item(j).a;
        var += inst_.item(j).sigma2;
      }
    }
    return within_capacity(inst_, mean + inst_.kappa() * std::sqrt(var));
  }

  void offer(const FractionalSolution& x) {
    std::vector<std::uint8_t> bits(x.x.size());
    for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = x.x[j] >= 1.0;
    BinarySolution cand = make_binary(inst_, std::move(bits));
    if (within_capacity(inst_, cand.g_value) && cand.objective > best_.z_OPT) {
      best_.z_OPT = cand.objective;
      best_.x_opt = std::move(cand.x);
    }
  }

  void dive() {
    if (aborted_) return;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    ++best_.nodes;
    const auto node = solve_ncr_anchored(inst_, fixing_);
    if (!node || dominated(node->z)) return;
    offer(node->x);
    if (!node->x.frac_index) return;

    // With t the last free variable, t = 1 overflows and t = 0 is the
    // rounded-down point already offered.
    if (free_count() == 1) return;

    const std::size_t t = *node->x.frac_index;
    fixing_[t] = Fix::kOne;
    if (anchor_fits()) dive();
    if (!dominated(node->z)) {
      fixing_[t] = Fix::kZero;
      dive();
    }
    fixing_[t] = Fix::kFree;
  }

  const Instance& inst_;
  BranchAndBoundLimits limits_;
  std::vector<Fix> fixing_;
  std::chrono::steady_clock::time_point start_;
  ExactResult best_;
  bool aborted_ = false;
};

}  // namespace

ExactResult brute_force(const Instance& inst) {
  if (inst.size() > kBruteForceMaxItems) {
    throw UsageError("brute_force: n = " + std::to_string(inst.size()) +
                     " exceeds " + std::to_string(kBruteForceMaxItems) +
                     "; use branch_and_bound");
  }
  Enumerator e{inst, std::vector<std::uint8_t>(inst.size(), 0), {}, false};
  e.visit(0, 0.0, 0.0, 0.0);
  e.best.proven = true;
  return e.best;
}

ExactResult branch_and_bound(const Instance& inst,
                             const BranchAndBoundLimits& limits) {
  require_valid(inst);
  return Search(inst, limits).run();
}

}  // namespace ckp
