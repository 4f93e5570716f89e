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

// Independent reference computations for the test suites. Nothing here calls
// into the solver modules except the Instance data type and eval_g.

#ifndef CKP_TESTS_ORACLES_HPP_
#define CKP_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ckp/core.hpp"

namespace ckp::oracle {

/// Standard normal CDF by adaptive Simpson quadrature of the density.
double normal_cdf_quadrature(double z);

/// Phi^{-1}(rho) by bisection on normal_cdf_quadrature, to 1e-12.
double normal_quantile_bisection(double rho);

/// Best single-fractional boundary point: for every fractional item t and
/// every subset S of the others with g(S) <= b, push x_t up to g = b (or 1).
/// Returns the maximum objective. Exponential; n <= 16.
struct PatternOptimum {
  double value = 0.0;
  std::vector<double> x;
};
PatternOptimum ncr_by_patterns(const Instance& inst);

/// Largest objective over all feasible 0/1 vectors (plain enumeration).
double binary_optimum(const Instance& inst);

/// Value of max{sum sigma2 x : g(x) <= b} or min{sum sigma2 x : g(x) >= b}
/// over single-fractional boundary patterns (exhaustive).
double delta_upper_by_patterns(const Instance& inst);
double delta_lower_by_patterns(const Instance& inst);

/// Random instance satisfying the standing assumptions. Continuous data,
/// roughly a fifth of the items with zero variance.
Instance random_instance(std::mt19937_64& rng, std::size_t n);

}  // namespace ckp::oracle

#endif  // CKP_TESTS_ORACLES_HPP_
