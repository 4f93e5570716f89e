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

#ifndef CKP_EXACT_HPP_
#define CKP_EXACT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ckp/core.hpp"

namespace ckp {

struct ExactResult {
  double z_OPT = 0.0;
  std::vector<std::uint8_t> x_opt;
  std::size_t nodes = 0;
  bool proven = false;
};

inline constexpr std::size_t kBruteForceMaxItems = 25;

/// Enumerates all 2^n subsets. Throws UsageError for n > 25.
ExactResult brute_force(const Instance& inst);

struct BranchAndBoundLimits {
  std::size_t node_limit = 1'000'000;
  double time_limit_seconds = 60.0;
};

/// Depth-first branch-and-bound on the fractional variable of the anchored
/// non-convex relaxation, 1-branch first, incumbent seeded by the
/// 1/2-approximation. proven is false when a limit stopped the search.
ExactResult branch_and_bound(const Instance& inst,
                             const BranchAndBoundLimits& limits = {});

}  // namespace ckp

#endif  // CKP_EXACT_HPP_
