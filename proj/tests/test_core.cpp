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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "ckp/core.hpp"
#include "ckp/generators.hpp"
#include "ckp/instance_io.hpp"
#include "oracles.hpp"

using namespace ckp;

TEST_CASE("normal_quantile matches reference values") {
  CHECK(normal_quantile(0.5) == 0.0);
  // Bisection on a quadrature CDF: 1.281551565545, 1.644853626951.
  CHECK(std::abs(normal_quantile(0.9) - 1.2815515655) < 1e-9);
  CHECK(std::abs(normal_quantile(0.95) - 1.6448536270) < 1e-9);
  for (double rho : {0.01, 0.1, 0.3, 0.6, 0.75, 0.99, 0.999}) {
    CAPTURE(rho);
    CHECK(std::abs(normal_quantile(rho) - oracle::normal_quantile_bisection(rho)) <
          1e-9);
  }
}

TEST_CASE("normal_quantile round-trips through an independent CDF") {
  for (int i = 1; i < 200; ++i) {
    const double rho = i / 200.0;
    CAPTURE(rho);
    CHECK(std::abs(oracle::normal_cdf_quadrature(normal_quantile(rho)) - rho) <= 1e-8);
  }
}

TEST_CASE("normal_quantile is monotone and rejects bad input") {
  double prev = normal_quantile(1e-6);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = normal_quantile(1e-6 + i * (1.0 - 2e-6) / 1000.0);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(-0.3), DomainError);
  CHECK_THROWS_AS(normal_quantile(std::nan("")), DomainError);
}

TEST_CASE("worst_case_kappa") {
  CHECK(worst_case_kappa(0.9) == doctest::Approx(3.0));
  CHECK(worst_case_kappa(0.8) == doctest::Approx(2.0));
  CHECK(worst_case_kappa(0.5 + 1e-12) == doctest::Approx(1.0));
  CHECK_THROWS_AS(worst_case_kappa(0.5), DomainError);
  CHECK_THROWS_AS(worst_case_kappa(1.0), DomainError);
}

TEST_CASE("eval_g and eval_g_convex on the worked examples") {
  const Instance e2 = example2(6.0);
  CHECK(eval_g(e2, std::vector<double>{0, 0, 0}) == 0.0);
  CHECK(eval_g(e2, std::vector<double>{0, 0, 1}) ==
        doctest::Approx(2.5 + 2.0 * std::sqrt(1.5)));
  CHECK(eval_g(e2, std::vector<double>{0, 5.0 / 18.0, 1}) == doctest::Approx(6.0));
  CHECK(eval_g_convex(e2, std::vector<double>{0, 0, 0}) == 0.0);
  CHECK(eval_g_convex(e2, std::vector<double>{1, 0, 0}) ==
        doctest::Approx(2.0 + 2.0 * std::sqrt(3.0)));
  CHECK(eval_g(e2, std::vector<double>{1, 0, 0}) ==
        eval_g_convex(e2, std::vector<double>{1, 0, 0}));

  const Instance e1 = example1(100);
  CHECK(eval_g_convex(e1, std::vector<double>(100, 0.1)) == doctest::Approx(2.5));

  CHECK_THROWS_AS(eval_g(e2, std::vector<double>{1, 0}), UsageError);
  CHECK_THROWS_AS(eval_g_convex(e2, std::vector<double>{1, 0, 0, 0}), UsageError);
}

TEST_CASE("g is concave and dominates its cone form on the box") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = oracle::random_instance(rng, 8);
    std::vector<double> x(8), y(8), z(8);
    for (int j = 0; j < 8; ++j) {
      x[j] = unit(rng);
      y[j] = unit(rng);
    }
    const double lam = unit(rng);
    for (int j = 0; j < 8; ++j) z[j] = lam * x[j] + (1 - lam) * y[j];
    CHECK(eval_g(inst, z) >= lam * eval_g(inst, x) + (1 - lam) * eval_g(inst, y) - 1e-9);
    CHECK(eval_g(inst, x) >= eval_g_convex(inst, x) - 1e-12);
    std::vector<double> bits(8);
    for (int j = 0; j < 8; ++j) bits[j] = unit(rng) < 0.5 ? 0.0 : 1.0;
    CHECK(eval_g(inst, bits) == doctest::Approx(eval_g_convex(inst, bits)));
  }
}

TEST_CASE("validate reports standing-assumption violations") {
  CHECK(validate(example2(6.0)).empty());

  const Instance trivial("t", {Item{1, 1, 0}}, 2.0, 1.0);
  auto v = validate(trivial);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kTrivialCapacity);

  // a + kappa sigma = b + 1 for the second item.
  const Instance big("s", {Item{1, 1, 0}, Item{1, 5, 4}, Item{1, 3, 0}}, 8.0, 2.0);
  v = validate(big);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kSingletonInfeasible);
  CHECK(v[0].item == 1u);

  const Instance bad("b", {Item{0, 1, 1}, Item{1, -1, -1}}, 1.0, -1.0);
  v = validate(bad);
  auto has = [&](ViolationKind k) {
    for (const auto& x : v) {
      if (x.kind == k) return true;
    }
    return false;
  };
  CHECK(has(ViolationKind::kNonPositiveProfit));
  CHECK(has(ViolationKind::kNonPositiveMean));
  CHECK(has(ViolationKind::kNegativeVariance));
  CHECK(has(ViolationKind::kNegativeKappa));

  CHECK_THROWS_AS(require_valid(trivial), InvalidInstanceError);
  CHECK_NOTHROW(require_valid(trivial, /*force=*/true));
}

TEST_CASE("kappa = 0 is a valid boundary case") {
  const Instance inst("k0", {Item{2, 1, 5}, Item{1, 1, 5}}, 1.5, 0.0);
  CHECK(validate(inst).empty());
}

TEST_CASE("make_fractional enforces a single fractional coordinate") {
  const Instance e2 = example2(6.0);
  const auto sol = make_fractional(e2, {0, 5.0 / 18.0, 1});
  REQUIRE(sol.frac_index);
  CHECK(*sol.frac_index == 1u);
  CHECK(sol.objective == doctest::Approx(1.0 + 5.0 / 18.0).epsilon(1e-12));
  CHECK(sol.delta == doctest::Approx(5.0 / 18.0 + 1.5).epsilon(1e-12));
  CHECK_THROWS_AS(make_fractional(e2, {0.5, 0.5, 0}), UsageError);
  const auto bin = make_binary(e2, {0, 0, 1});
  CHECK(bin.objective == 1.0);
  CHECK(within_capacity(e2, bin.g_value));
}

TEST_CASE("instance JSON round trip is exact") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Instance inst = oracle::random_instance(rng, 7);
    const Instance back = from_json(to_json(inst));
    REQUIRE(back.size() == inst.size());
    CHECK(back.capacity() == inst.capacity());
    CHECK(back.kappa() == inst.kappa());
    for (std::size_t j = 0; j < inst.size(); ++j) {
      CHECK(back.item(j).c == inst.item(j).c);
      CHECK(back.item(j).a == inst.item(j).a);
      CHECK(back.item(j).sigma2 == inst.item(j).sigma2);
    }
  }
  const Instance g = generate({Family::kSC, 12, 0.95, 3, 1.0});
  const Instance gb = from_json(to_json(g));
  CHECK(gb.rho() == 0.95);
  CHECK(to_json(gb) == to_json(g));

  CHECK_THROWS_AS(from_json("{not json"), IoError);
  CHECK_THROWS_AS(from_json(R"({"b": 1, "kappa": 1})"), IoError);
  CHECK_THROWS_AS(
      from_json(R"({"n": 2, "b": 1, "kappa": 1, "items": [{"c":1,"a":1,"sigma2":0}]})"),
      IoError);
  CHECK_THROWS_AS(read_instance("/nonexistent/instance.json"), IoError);
}
