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

#include "ckp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace ckp {

Instance::Instance(std::string name, std::vector<Item> items, double b,
                   double kappa, std::optional<double> rho)
    : name_(std::move(name)),
      items_(std::move(items)),
      b_(b),
      kappa_(kappa),
      rho_(rho) {}

double Instance::total_mean() const {
  double s = 0.0;
  for (const Item& it : items_) s += it.a;
  return s;
}

double Instance::total_variance() const {
  double s = 0.0;
  for (const Item& it : items_) s += it.sigma2;
  return s;
}

double Instance::total_profit() const {
  double s = 0.0;
  for (const Item& it : items_) s += it.c;
  return s;
}

namespace {

// Rational approximation of the normal quantile (P. J. Acklam), relative
// error about 1.15e-9 before refinement.
double acklam_quantile(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double normal_quantile(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw DomainError("normal_quantile: rho must lie in (0, 1)");
  }
  if (rho == 0.5) return 0.0;
  double x = acklam_quantile(rho);
  // One Halley step against the library CDF brings the error to ~1e-15.
  const double e = normal_cdf(x) - rho;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double worst_case_kappa(double rho) {
  if (!(rho > 0.5 && rho < 1.0)) {
    throw DomainError("worst_case_kappa: rho must lie in (0.5, 1)");
  }
  return std::sqrt(rho / (1.0 - rho));
}

namespace {

void check_dim(const Instance& inst, std::size_t n, const char* what) {
  if (n != inst.size()) {
    std::ostringstream os;
    os << what << ": vector has " << n << " entries, instance has "
       << inst.size() << " items";
    throw UsageError(os.str());
  }
}

}  // namespace

double eval_g(const Instance& inst, std::span<const double> x) {
  check_dim(inst, x.size(), "eval_g");
  double mean = 0.0;
  double var = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    mean += inst.item(j).a * x[j];
    var += inst.item(j).sigma2 * x[j];
  }
  return mean + inst.kappa() * std::sqrt(std::max(var, 0.0));
}

double eval_g_convex(const Instance& inst, std::span<const double> x) {
  check_dim(inst, x.size(), "eval_g_convex");
  double mean = 0.0;
  double var = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    mean += inst.item(j).a * x[j];
    var += inst.item(j).sigma2 * x[j] * x[j];
  }
  return mean + inst.kappa() * std::sqrt(var);
}

double eval_g_binary(const Instance& inst,
                     std::span<const std::uint8_t> x) {
  check_dim(inst, x.size(), "eval_g_binary");
  double mean = 0.0;
  double var = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) {
      mean += inst.item(j).a;
      var += inst.item(j).sigma2;
    }
  }
  return mean + inst.kappa() * std::sqrt(var);
}

bool within_capacity(const Instance& inst, double g_value) {
  return g_value <= inst.capacity() * (1.0 + 1e-9) + 1e-12;
}

std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind k, std::optional<std::size_t> j,
                    std::string msg) {
    out.push_back(Violation{k, j, std::move(msg)});
  };

  const double b = inst.capacity();
  const double kappa = inst.kappa();
  if (!(kappa >= 0.0)) {
    add(ViolationKind::kNegativeKappa, std::nullopt,
        "kappa must be non-negative (rho >= 0.5)");
  }
  if (!(b > 0.0)) {
    add(ViolationKind::kNonPositiveCapacity, std::nullopt,
        "capacity b must be positive");
  }
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const Item& it = inst.item(j);
    if (!(it.c > 0.0)) {
      add(ViolationKind::kNonPositiveProfit, j,
          "item " + std::to_string(j) + ": profit must be positive");
    }
    if (!(it.a > 0.0)) {
      add(ViolationKind::kNonPositiveMean, j,
          "item " + std::to_string(j) + ": mean weight must be positive");
    }
    if (!(it.sigma2 >= 0.0)) {
      add(ViolationKind::kNegativeVariance, j,
          "item " + std::to_string(j) + ": variance must be non-negative");
    }
    const double single = it.a + kappa * std::sqrt(std::max(it.sigma2, 0.0));
    if (single > b) {
      std::ostringstream os;
      os.precision(17);
      os << "item " << j << ": singleton load " << single
         << " exceeds capacity " << b;
      add(ViolationKind::kSingletonInfeasible, j, os.str());
    }
  }
  const double total =
      inst.total_mean() + kappa * std::sqrt(std::max(inst.total_variance(), 0.0));
  if (!(total > b)) {
    std::ostringstream os;
    os.precision(17);
    os << "total load " << total << " does not exceed capacity " << b
       << " (all items fit)";
    add(ViolationKind::kTrivialCapacity, std::nullopt, os.str());
  }
  return out;
}

void require_valid(const Instance& inst, bool force) {
  if (force) return;
  const auto violations = validate(inst);
  if (violations.empty()) return;
  std::string msg = "instance '" + inst.name() + "' is invalid:";
  for (const auto& v : violations) msg += "\n  " + v.message;
  throw InvalidInstanceError(msg);
}

FractionalSolution make_fractional(const Instance& inst,
                                   std::vector<double> x) {
  check_dim(inst, x.size(), "make_fractional");
  FractionalSolution sol;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sol.objective += inst.item(j).c * x[j];
    sol.delta += inst.item(j).sigma2 * x[j];
    if (x[j] > 0.0 && x[j] < 1.0) {
      if (sol.frac_index) {
        throw UsageError("make_fractional: more than one fractional coordinate");
      }
      sol.frac_index = j;
    }
  }
  sol.x = std::move(x);
  return sol;
}

BinarySolution make_binary(const Instance& inst,
                           std::vector<std::uint8_t> x) {
  check_dim(inst, x.size(), "make_binary");
  BinarySolution sol;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) sol.objective += inst.item(j).c;
  }
  sol.g_value = eval_g_binary(inst, x);
  sol.x = std::move(x);
  return sol;
}

}  // namespace ckp
