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

#include "ckp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace ckp {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr int kMaxAttempts = 10000;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t substream)
    : key_(mix64(seed ^ mix64(substream))) {}

std::uint64_t CounterRng::next() {
  return mix64(key_ + (counter_++) * kGolden);
}

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  // Multiply-shift on the high 32 bits; ranges here are tiny.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(((next() >> 32) * span) >> 32);
}

double CounterRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kSC:
      return "sc";
    case Family::kIC:
      return "ic";
    case Family::kSS:
      return "ss";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "sc" || s == "SC") return Family::kSC;
  if (s == "ic" || s == "IC") return Family::kIC;
  if (s == "ss" || s == "SS") return Family::kSS;
  return std::nullopt;
}

Instance generate(const GenSpec& spec) {
  if (spec.n < 2) throw DomainError("generate: n must be at least 2");
  if (!(spec.rho >= 0.5 && spec.rho < 1.0)) {
    throw DomainError("generate: rho must lie in [0.5, 1)");
  }
  if (!(spec.capacity_factor > 0.0)) {
    throw DomainError("generate: capacity factor must be positive");
  }
  const double kappa = normal_quantile(spec.rho);
  const std::string name =
      fmt::format("{}-n{}-rho{}-s{}", family_name(spec.family), spec.n,
                  spec.rho, spec.seed);
  const std::string full_name =
      spec.capacity_factor == 1.0
          ? name
          : fmt::format("{}-f{}", name, spec.capacity_factor);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Item> items(spec.n);
    double sum_a = 0.0;
    for (std::size_t j = 0; j < spec.n; ++j) {
      const std::uint64_t stream =
          (static_cast<std::uint64_t>(attempt) << 32) | j;
      CounterRng rng(spec.seed, stream);
      const auto v = static_cast<double>(rng.uniform_int(1, 100));
      Item& it = items[j];
      switch (spec.family) {
        case Family::kSC:
          it.a = v;
          it.c = v + 100.0;
          break;
        case Family::kIC:
          it.c = v;
          it.a = std::min(100.0, v + 10.0);
          break;
        case Family::kSS:
          it.a = v;
          it.c = v;
          break;
      }
      const double sigma = rng.uniform(0.1 * it.a, 0.2 * it.a);
      it.sigma2 = sigma * sigma;
      sum_a += it.a;
    }
    const double b = spec.capacity_factor * std::floor(sum_a);
    Instance inst(full_name, std::move(items), b, kappa, spec.rho);
    if (validate(inst).empty()) return inst;
  }
  throw InvalidInstanceError(
      fmt::format("generate: no valid instance for {} after {} attempts",
                  full_name, kMaxAttempts));
}

Instance example1(std::size_t n) {
  if (n < 56) throw DomainError("example1: requires n >= 56");
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Item> items(n, Item{1.0, a, 1.0});
  return Instance(fmt::format("example1-n{}", n), std::move(items), 3.0, 1.5);
}

Instance example2(double b, bool force) {
  Instance inst(fmt::format("example2-b{}", b),
                {Item{1.0, 2.0, 3.0}, Item{1.0, 3.0, 1.0}, Item{1.0, 2.5, 1.5}},
                b, 2.0);
  require_valid(inst, force);
  return inst;
}

}  // namespace ckp
