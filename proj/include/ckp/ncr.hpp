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

#ifndef CKP_NCR_HPP_
#define CKP_NCR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ckp/core.hpp"

namespace ckp {

// Solver for the non-convex relaxation
//
//   z_NC = max { c'x : a'x + kappa * sqrt(sigma2'x) <= b, x in [0,1]^n }.
//
// For a deviation budget delta >= 0 every item gets an effective cost
// a_j(delta) = a_j + kappa * sigma2_j / (2 sqrt(delta)); sorting by the
// density c_j / a_j(delta) and filling greedily until g(x) = b yields x(delta)
// with at most one fractional coordinate. The optimum is x(delta*) for some
// delta*, and the orderings only change at pairwise crossing points of the
// densities, so enumerating those crossings (restricted to [delta_L, delta_U])
// solves the relaxation exactly.

/// Pair of items whose density order flips at delta = q. Canonical form has
/// sigma2_k / c_k < sigma2_l / c_l and a_k / c_k > a_l / c_l: k precedes l
/// for delta < q, l precedes k for delta >= q.
struct ReversePoint {
  std::size_t k = 0;
  std::size_t l = 0;
  double q = 0.0;
};

struct Ordering {
  std::vector<std::size_t> perm;
  double delta = 0.0;
};

/// The candidate deviation budgets examined by solve_ncr.
struct DeltaCandidates {
  double delta_L = 0.0;
  double delta_U = 0.0;
  double gamma = 1.0;             // probe below the smallest reverse point
  std::vector<double> candidates; // sorted, distinct
  std::size_t delta_count = 0;    // |{0, gamma} u Q|
};

struct NcrResult {
  FractionalSolution x;
  double z = 0.0;
  double best_delta = 0.0;  // candidate that attained z
  DeltaCandidates deltas;
};

struct NcrOptions {
  /// Worker threads for candidate evaluation; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// a_j(delta); equals a_j at delta = 0.
double item_cost(const Instance& inst, std::size_t j, double delta);

/// p_j(delta) = c_j / a_j(delta).
double profit_density(const Instance& inst, std::size_t j, double delta);

/// tau(delta): descending density, ties by descending sigma2/c, then by
/// ascending index. At delta = 0 zero-variance items come first.
Ordering ordering(const Instance& inst, double delta);

/// Greedy boundary solution x(delta). Throws ConstructionError when the
/// items cannot reach the capacity.
FractionalSolution build_x(const Instance& inst, double delta);

/// Crossing point of items k and l (either order), if their densities cross.
std::optional<ReversePoint> reverse_point(const Instance& inst, std::size_t k,
                                          std::size_t l);

/// All reverse points over unordered pairs, sorted by q, duplicates kept.
std::vector<ReversePoint> reverse_points(const Instance& inst);

/// max { sum sigma2_j x_j : g(x) <= b, x in [0,1]^n }.
double delta_upper(const Instance& inst);

/// min { sum sigma2_j x_j : g(x) >= b, x in [0,1]^n }.
double delta_lower(const Instance& inst);

/// Exact optimum of the non-convex relaxation.
NcrResult solve_ncr(const Instance& inst, const NcrOptions& options = {});

/// Variable state in an anchored subproblem.
enum class Fix : std::int8_t { kFree = -1, kZero = 0, kOne = 1 };

/// Non-convex relaxation with some variables fixed. Items fixed to one enter
/// g as constant offsets on the mean and the variance; the parametric
/// machinery is unchanged because the densities depend only on the total
/// deviation budget. Returns nullopt when the fixed-to-one items alone
/// exceed the capacity. The solution vector is full-length with the fixed
/// coordinates filled in and the objective includes their profit.
std::optional<NcrResult> solve_ncr_anchored(const Instance& inst,
                                            std::span<const Fix> fixing,
                                            const NcrOptions& options = {});

}  // namespace ckp

#endif  // CKP_NCR_HPP_
