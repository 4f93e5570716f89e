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

#include <random>
#include <vector>

#include "doctest.h"

#include "ckp/exact.hpp"
#include "ckp/generators.hpp"
#include "ckp/ncr.hpp"
#include "oracles.hpp"

using namespace ckp;

TEST_CASE("brute_force worked examples") {
  const auto e2 = brute_force(example2(6.0));
  CHECK(e2.z_OPT == 1.0);
  CHECK(e2.proven);
  CHECK(e2.nodes > 0u);

  const Instance two("two", {Item{2, 1, 0}, Item{1, 1, 0}}, 1.5, 1.0);
  CHECK(brute_force(two).z_OPT == 2.0);
  CHECK(brute_force(two).x_opt == std::vector<std::uint8_t>{1, 0});

  // Identical items with a = 0.1: 3 fit (2.898 <= 3), 4 do not (3.4 > 3).
  const Instance ident("ident", std::vector<Item>(20, Item{1.0, 0.1, 1.0}), 3.0, 1.5);
  CHECK(brute_force(ident).z_OPT == 3.0);

  CHECK_THROWS_AS(brute_force(example1(56)), UsageError);
}

TEST_CASE("branch_and_bound worked examples") {
  const auto r = branch_and_bound(example2(6.0));
  CHECK(r.z_OPT == 1.0);
  CHECK(r.proven);
  CHECK(r.nodes <= 7u);

  const Instance tight("tight", {Item{5, 2, 0}, Item{1, 1.5, 0}}, 2.0, 1.0);
  const auto t = branch_and_bound(tight);
  CHECK(t.z_OPT == 5.0);
  CHECK(t.nodes == 1u);

  const Instance sc = generate({Family::kSC, 15, 0.9, 3, 1.0});
  CHECK(branch_and_bound(sc).z_OPT == brute_force(sc).z_OPT);

  // 100 interchangeable items defeat the bound; the incumbent is still optimal.
  const auto e1 = branch_and_bound(example1(100), {2000, 60.0});
  CHECK(e1.z_OPT == 3.0);
  CHECK(e1.nodes <= 2000u);
}

TEST_CASE("branch_and_bound agrees with enumeration") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = oracle::random_instance(rng, 2 + trial % 14);
    const ExactResult bf = brute_force(inst);
    const ExactResult bb = branch_and_bound(inst);
    CAPTURE(trial);
    CHECK(bb.proven);
    CHECK(bb.z_OPT == doctest::Approx(bf.z_OPT).epsilon(1e-9));
    CHECK(within_capacity(inst, eval_g_binary(inst, bb.x_opt)));
    CHECK(bf.z_OPT == doctest::Approx(oracle::binary_optimum(inst)).epsilon(1e-12));
    CHECK(solve_ncr(inst).z <= 2.0 * bf.z_OPT * (1.0 + 1e-9));
  }
}

TEST_CASE("limits stop the search without a proof") {
  const Instance inst = generate({Family::kIC, 200, 0.95, 1, 0.6});
  const auto r = branch_and_bound(inst, {3, 60.0});
  CHECK_FALSE(r.proven);
  CHECK(r.nodes <= 3u);
  CHECK(within_capacity(inst, eval_g_binary(inst, r.x_opt)));
  CHECK(r.z_OPT > 0.0);
}
