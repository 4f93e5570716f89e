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

#include "ckp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ckp {

double submodular_F(const Instance& inst,
                    std::span<const std::uint8_t> subset) {
  return eval_g_binary(inst, subset);
}

SeparationResult separate(const Instance& inst, std::span<const double> x) {
  if (x.size() != inst.size()) {
    throw UsageError("separate: vector has wrong dimension");
  }
  SeparationResult out;
  out.order.resize(x.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t i, std::size_t j) { return x[i] > x[j]; });

  out.pi.assign(x.size(), 0.0);
  const double kappa = inst.kappa();
  double mean = 0.0;
  double var = 0.0;
  double prev = 0.0;  // F(S_{j-1})
  for (std::size_t j : out.order) {
    mean += inst.item(j).a;
    var += inst.item(j).sigma2;
    const double cur = mean + kappa * std::sqrt(var);
    out.pi[j] = cur - prev;
    out.eta += out.pi[j] * x[j];
    prev = cur;
  }
  out.in_polytope = within_capacity(inst, out.eta);
  return out;
}

namespace {

// Golden-section search for the minimum of a unimodal f on [lo, hi].
// Returns {argmin, min, converged, iterations}.
struct Golden {
  double arg;
  double value;
  bool converged;
  int iterations;
};

template <typename F>
Golden golden_min(F&& f, double lo, double hi, double rel_tol, int max_iter) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  const double tol = rel_tol * std::max(1.0, std::abs(hi));
  int it = 0;
  while (hi - lo > tol && it < max_iter) {
    ++it;
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  // Endpoints are included so a minimizer sitting on the boundary is found.
  Golden best{x1, f1, hi - lo <= tol, it};
  if (f2 < best.value) best = {x2, f2, best.converged, it};
  for (double e : {lo, hi}) {
    const double fe = f(e);
    if (fe < best.value) best = {e, fe, best.converged, it};
  }
  return best;
}

// Lagrangian of the convex relaxation with sqrt(s) = min_u s/(2u) + u/2:
//   L(x, lambda, u) = lambda b + sum (c_j - lambda a_j) x_j
//                     - lambda kappa (sum sigma2_j x_j^2 / (2u) + u/2).
// For fixed (lambda, u) the maximizing x is separable and clamped.
class Dual {
 public:
  Dual(const Instance& inst, const ConvexOptions& opts)
      : inst_(inst), opts_(opts) {
    u_hi_ = std::sqrt(inst.total_variance()) + 1.0;
  }

  void maximizer(double lambda, double u, std::vector<double>& x) const {
    const double kappa = inst_.kappa();
    x.resize(inst_.size());
    for (std::size_t j = 0; j < inst_.size(); ++j) {
      const Item& it = inst_.item(j);
      const double d = it.c - lambda * it.a;
      const double curv = lambda * kappa * it.sigma2;
      if (curv > 0.0) {
        x[j] = std::clamp(d * u / curv, 0.0, 1.0);
      } else {
        x[j] = d > 0.0 ? 1.0 : 0.0;
      }
    }
  }

  double inner(double lambda, double u) const {
    const double kappa = inst_.kappa();
    double lin = 0.0;
    double quad = 0.0;
    for (std::size_t j = 0; j < inst_.size(); ++j) {
      const Item& it = inst_.item(j);
      const double d = it.c - lambda * it.a;
      const double curv = lambda * kappa * it.sigma2;
      double xj;
      if (curv > 0.0) {
        xj = std::clamp(d * u / curv, 0.0, 1.0);
      } else {
        xj = d > 0.0 ? 1.0 : 0.0;
      }
      lin += d * xj;
      quad += it.sigma2 * xj * xj;
    }
    return lin - lambda * kappa * (quad / (2.0 * u) + 0.5 * u);
  }

  // Best multiplier for the variance split at fixed lambda.
  Golden best_u(double lambda) const {
    if (lambda == 0.0 || inst_.kappa() == 0.0) {
      return {1.0, -inner(lambda, 1.0), true, 0};
    }
    return golden_min([&](double u) { return -inner(lambda, u); }, 1e-12,
                      u_hi_, opts_.rel_tol, opts_.max_iterations);
  }

 private:
  const Instance& inst_;
  const ConvexOptions& opts_;
  double u_hi_ = 1.0;
};

}  // namespace

ConvexBound convex_bound(const Instance& inst, const ConvexOptions& options) {
  Dual dual(inst, options);
  double lambda_max = 0.0;
  for (const Item& it : inst.items()) {
    lambda_max = std::max(lambda_max, it.c / it.a);
  }

  bool inner_ok = true;
  auto phi = [&](double lambda) {
    const Golden g = dual.best_u(lambda);
    inner_ok = inner_ok && g.converged;
    return lambda * inst.capacity() - g.value;
  };
  const Golden outer =
      golden_min(phi, 0.0, lambda_max, options.rel_tol, options.max_iterations);

  ConvexBound out;
  out.z_C = outer.value;
  out.lambda_star = outer.arg;
  out.iterations = outer.iterations;
  if (!outer.converged || !inner_ok) {
    throw BoundQualityError("convex_bound: dual search did not converge",
                            out.z_C);
  }

  // Primal recovery. The constraint is positively homogeneous, so scaling a
  // Lagrangian maximizer onto the boundary keeps it feasible. At a kink of
  // the dual the maximizer jumps; there the optimum is a convex combination
  // of the maximizers on either side, located by bisection on the load.
  const double b = inst.capacity();
  out.primal_value = -1.0;
  auto offer = [&](std::vector<double> x) {
    const double load = eval_g_convex(inst, x);
    const double scale = load > b ? b / load : 1.0;
    double value = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] *= scale;
      value += inst.item(j).c * x[j];
    }
    if (value > out.primal_value) {
      out.primal_value = value;
      out.primal_x = std::move(x);
    }
  };
  auto at = [&](double lambda) {
    std::vector<double> x;
    dual.maximizer(lambda, dual.best_u(lambda).arg, x);
    return x;
  };
  offer(at(out.lambda_star));
  for (double rel : {1e-6, 1e-9, 1e-12}) {
    const double h = rel * std::max(1.0, lambda_max);
    const std::vector<double> heavy = at(std::max(0.0, out.lambda_star - h));
    const std::vector<double> light = at(std::min(lambda_max, out.lambda_star + h));
    offer(heavy);
    offer(light);
    if (!(eval_g_convex(inst, heavy) > b && eval_g_convex(inst, light) <= b)) {
      continue;
    }
    std::vector<double> mix(heavy.size());
    auto blend = [&](double t) {
      for (std::size_t j = 0; j < mix.size(); ++j) {
        mix[j] = (1.0 - t) * light[j] + t * heavy[j];
      }
    };
    double lo = 0.0, hi = 1.0;  // load(lo) <= b < load(hi)
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      blend(mid);
      (eval_g_convex(inst, mix) <= b ? lo : hi) = mid;
    }
    blend(lo);
    offer(mix);
  }
  out.duality_gap = out.z_C - out.primal_value;
  return out;
}

}  // namespace ckp
