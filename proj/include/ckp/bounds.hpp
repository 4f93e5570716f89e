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

#ifndef CKP_BOUNDS_HPP_
#define CKP_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ckp/core.hpp"

namespace ckp {

/// F(S) = sum_{j in S} a_j + kappa * sqrt(sum_{j in S} sigma2_j), with S given
/// as a 0/1 indicator. Submodular and monotone.
double submodular_F(const Instance& inst, std::span<const std::uint8_t> subset);

/// Separation over the polyhedral relaxation P_P = { x in [0,1]^n :
/// pi'x <= b for every extreme point pi of { pi : pi(S) <= F(S) for all S } }.
/// Edmonds' greedy walks the items by descending x and sets pi_j to the
/// marginal gain of F, which maximizes pi'x over the polymatroid.
struct SeparationResult {
  double eta = 0.0;                // max_pi pi'x over the extreme points
  std::vector<double> pi;          // indexed by item
  std::vector<std::size_t> order;  // descending x, ties by index
  bool in_polytope = false;        // eta <= b within feasibility tolerance
};

SeparationResult separate(const Instance& inst, std::span<const double> x);

/// Optimum of the second-order cone relaxation
///   max c'x  s.t.  a'x + kappa * ||diag(sigma) x||_2 <= b,  x in [0,1]^n,
/// obtained from its Lagrangian dual.
struct ConvexBound {
  double z_C = 0.0;
  double lambda_star = 0.0;
  std::vector<double> primal_x;
  double primal_value = 0.0;
  double duality_gap = 0.0;
  int iterations = 0;  // outer (multiplier) iterations
};

/// The dual search stopped before reaching its tolerance. best_bound is
/// still a valid upper bound.
class BoundQualityError : public std::runtime_error {
 public:
  BoundQualityError(const std::string& what, double best_bound)
      : std::runtime_error(what), best_bound(best_bound) {}
  double best_bound;
};

struct ConvexOptions {
  double rel_tol = 1e-10;
  int max_iterations = 200;
};

ConvexBound convex_bound(const Instance& inst, const ConvexOptions& options = {});

}  // namespace ckp

#endif  // CKP_BOUNDS_HPP_
