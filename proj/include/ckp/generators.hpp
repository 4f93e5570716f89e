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

#ifndef CKP_GENERATORS_HPP_
#define CKP_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ckp/core.hpp"

namespace ckp {

enum class Family { kSC, kIC, kSS };

std::string_view family_name(Family f);  // "sc", "ic", "ss"
std::optional<Family> parse_family(std::string_view s);

struct GenSpec {
  Family family = Family::kSC;
  std::size_t n = 100;
  double rho = 0.9;
  std::uint64_t seed = 0;
  double capacity_factor = 1.0;
};

/// Counter-based generator: draw i of substream s under seed k is
/// mix(mix(k ^ mix(s)) + i * golden), with mix the SplitMix64 finalizer.
/// Every item owns one substream, so instances are reproducible from
/// (seed, item) alone. The mapping is frozen; changing it changes fixtures.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t substream);

  std::uint64_t next();
  /// Uniform integer in [lo, hi]; hi - lo must be below 2^32.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Benchmark families: SC c = a + 100, IC a = min(100, c + 10), SS c = a, the
/// driving integer uniform on [1, 100]; sigma uniform on [0.1 a, 0.2 a];
/// b = capacity_factor * floor(sum a); kappa = Phi^{-1}(rho). Instances that
/// fail validation are redrawn from the next attempt's substreams.
Instance generate(const GenSpec& spec);

/// n identical items with c = sigma = 1, a = 1/sqrt(n), b = 3, kappa = 1.5.
/// Requires n >= 56.
Instance example1(std::size_t n);

/// Three items (1, 2, 3), (1, 3, 1), (1, 2.5, 1.5) as (c, a, sigma2) with
/// kappa = 2. Reverse points at 1, 4 and 9.
Instance example2(double b, bool force = false);

}  // namespace ckp

#endif  // CKP_GENERATORS_HPP_
