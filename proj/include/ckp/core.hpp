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

#ifndef CKP_CORE_HPP_
#define CKP_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckp {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes.

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse, e.g. vectors whose dimension does not match the instance.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An instance violates the standing assumptions and was not forced.
class InvalidInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A greedy boundary construction could not reach g(x) = b, or produced a
/// fractional value outside [0, 1].
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One knapsack item with normally distributed weight N(a, sigma2).
struct Item {
  double c = 0.0;       // profit
  double a = 0.0;       // mean weight
  double sigma2 = 0.0;  // weight variance
};

/// Chance-constrained knapsack instance:
///   max c'x  s.t.  a'x + kappa * sqrt(sigma2'x) <= b,  x binary.
///
/// kappa is stored directly so that robust and distributionally robust
/// models with the same constraint shape can share the solvers; rho is kept
/// only as metadata. Immutable after construction.
class Instance {
 public:
  Instance(std::string name, std::vector<Item> items, double b, double kappa,
           std::optional<double> rho = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t size() const { return items_.size(); }
  const Item& item(std::size_t j) const { return items_[j]; }
  std::span<const Item> items() const { return items_; }
  double capacity() const { return b_; }
  double kappa() const { return kappa_; }
  std::optional<double> rho() const { return rho_; }

  double total_mean() const;
  double total_variance() const;
  double total_profit() const;

 private:
  std::string name_;
  std::vector<Item> items_;
  double b_;
  double kappa_;
  std::optional<double> rho_;
};

/// Continuous solution with at most one coordinate strictly inside (0, 1).
struct FractionalSolution {
  std::vector<double> x;
  std::optional<std::size_t> frac_index;
  double objective = 0.0;  // sum c_j x_j
  double delta = 0.0;      // sum sigma2_j x_j
};

struct BinarySolution {
  std::vector<std::uint8_t> x;
  double objective = 0.0;
  double g_value = 0.0;
};

/// Phi^{-1}(rho) for the standard normal. Throws DomainError unless
/// 0 < rho < 1.
double normal_quantile(double rho);

/// Standard normal CDF.
double normal_cdf(double z);

/// sqrt(rho / (1 - rho)), the safety factor under the worst-case
/// distribution with given mean and variance. Requires 0.5 < rho < 1.
double worst_case_kappa(double rho);

/// g(x) = sum a_j x_j + kappa * sqrt(sum sigma2_j x_j).
double eval_g(const Instance& inst, std::span<const double> x);

/// Second-order cone form: sum a_j x_j + kappa * sqrt(sum sigma2_j x_j^2).
double eval_g_convex(const Instance& inst, std::span<const double> x);

/// g on a 0/1 vector; evaluated with integer selections, no rounding of x.
double eval_g_binary(const Instance& inst, std::span<const std::uint8_t> x);

/// Feasibility test used throughout: value <= b (1 + 1e-9) + 1e-12.
bool within_capacity(const Instance& inst, double g_value);

enum class ViolationKind {
  kNonPositiveProfit,
  kNonPositiveMean,
  kNegativeVariance,
  kNegativeKappa,
  kNonPositiveCapacity,
  kTrivialCapacity,     // everything fits, problem is trivial
  kSingletonInfeasible  // a single item alone exceeds the capacity
};

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> item;
  std::string message;
};

/// Reports every violated standing assumption; empty means valid.
std::vector<Violation> validate(const Instance& inst);

/// Throws InvalidInstanceError listing the violations unless `force` is set.
void require_valid(const Instance& inst, bool force = false);

FractionalSolution make_fractional(const Instance& inst, std::vector<double> x);
BinarySolution make_binary(const Instance& inst, std::vector<std::uint8_t> x);

}  // namespace ckp

#endif  // CKP_CORE_HPP_
