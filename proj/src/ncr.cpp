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

#include "ckp/ncr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace ckp {

namespace {

constexpr double kRatioTol = 1e-12;    // strictness in the crossing condition
constexpr double kMergeTol = 1e-12;    // relative merge width for crossings
constexpr double kThetaZeroTol = 1e-12;
constexpr double kThetaOneTol = 1e-9;
constexpr double kSnapTol = 1e-12;

// Free items of a (possibly anchored) problem, with the fixed-to-one items
// folded into offsets on the mean, the variance and the profit.
struct View {
  const Instance* inst = nullptr;
  std::vector<std::size_t> free;  // original item indices
  std::vector<double> r;          // a / c per free position
  std::vector<double> v;          // sigma2 / c per free position
  std::vector<double> base_x;     // full length; fixed-to-one items at 1
  double mean0 = 0.0;
  double var0 = 0.0;
  double profit0 = 0.0;

  const Item& item(std::size_t pos) const { return inst->item(free[pos]); }
  std::size_t size() const { return free.size(); }
};

View make_view(const Instance& inst, std::span<const Fix> fixing) {
  View view;
  view.inst = &inst;
  view.base_x.assign(inst.size(), 0.0);
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const Fix f = fixing.empty() ? Fix::kFree : fixing[j];
    const Item& it = inst.item(j);
    if (f == Fix::kOne) {
      view.base_x[j] = 1.0;
      view.mean0 += it.a;
      view.var0 += it.sigma2;
      view.profit0 += it.c;
    } else if (f == Fix::kFree) {
      view.free.push_back(j);
      view.r.push_back(it.a / it.c);
      view.v.push_back(it.sigma2 / it.c);
    }
  }
  return view;
}

View full_view(const Instance& inst) { return make_view(inst, {}); }

// tau(delta) over free positions.
std::vector<std::size_t> order_positions(const View& view, double delta) {
  const std::size_t m = view.size();
  std::vector<std::size_t> pos(m);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<double> key(m);
  if (delta > 0.0) {
    const double w = view.inst->kappa() / (2.0 * std::sqrt(delta));
    for (std::size_t i = 0; i < m; ++i) key[i] = view.r[i] + w * view.v[i];
  } else {
    for (std::size_t i = 0; i < m; ++i) key[i] = view.r[i];
  }
  const bool blocks = !(delta > 0.0);
  std::sort(pos.begin(), pos.end(), [&](std::size_t x, std::size_t y) {
    if (blocks) {
      const bool zx = view.item(x).sigma2 == 0.0;
      const bool zy = view.item(y).sigma2 == 0.0;
      if (zx != zy) return zx;
    }
    if (key[x] != key[y]) return key[x] < key[y];
    if (view.v[x] != view.v[y]) return view.v[x] > view.v[y];
    return view.free[x] < view.free[y];
  });
  return pos;
}

struct Fill {
  FractionalSolution sol;
  bool saturated = false;  // every free item fits; g < b at x = 1
};

// Smallest root of
//   a^2 t^2 - (2 a R + kappa^2 s) t + (R^2 - kappa^2 V) = 0,
// i.e. the unique t with  (b - R) + a t + kappa sqrt(V + s t) = b.
// Uses the cancellation-free form 2C / (B + sqrt(B^2 - 4AC)).
double boundary_theta(double a, double s, double kappa, double residual,
                      double var) {
  const double k2 = kappa * kappa;
  const double qa = a * a;
  const double qb = 2.0 * a * residual + k2 * s;
  const double qc = residual * residual - k2 * var;
  if (qc <= 0.0) return 0.0;
  // qb^2 - 4 qa qc expanded; every term is non-negative, so no cancellation.
  const double disc =
      k2 * (4.0 * a * residual * s + k2 * s * s + 4.0 * qa * var);
  return 2.0 * qc / (qb + std::sqrt(disc));
}

Fill fill(const View& view, std::span<const std::size_t> order) {
  const Instance& inst = *view.inst;
  const double b = inst.capacity();
  const double kappa = inst.kappa();
  std::vector<double> x = view.base_x;
  double mean = view.mean0;
  double var = view.var0;
  Fill out;
  bool reached = false;
  for (std::size_t pos : order) {
    const Item& it = view.item(pos);
    const double next_mean = mean + it.a;
    const double next_var = var + it.sigma2;
    if (next_mean + kappa * std::sqrt(next_var) >= b) {
      double theta = boundary_theta(it.a, it.sigma2, kappa, b - mean, var);
      if (theta > 1.0 + kThetaOneTol) {
        throw ConstructionError("boundary item value exceeds one");
      }
      // Snap to an endpoint only when that keeps g on the boundary; near a
      // zero-variance prefix a tiny theta still moves the sqrt term a lot.
      const auto g_at = [&](double t) {
        return mean + it.a * t + kappa * std::sqrt(var + it.sigma2 * t);
      };
      const auto on_boundary = [&](double t) {
        return std::abs(g_at(t) - b) <= kSnapTol * b;
      };
      if (theta <= kThetaZeroTol && on_boundary(0.0)) theta = 0.0;
      if (theta >= 1.0 - kThetaZeroTol && on_boundary(1.0)) theta = 1.0;
      theta = std::min(theta, 1.0);
      x[view.free[pos]] = theta;
      reached = true;
      break;
    }
    x[view.free[pos]] = 1.0;
    mean = next_mean;
    var = next_var;
  }
  out.saturated = !reached;
  out.sol = make_fractional(inst, std::move(x));
  return out;
}

bool strictly_less(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return y - x > kRatioTol * scale;
}

std::optional<double> crossing(double rk, double vk, double rl, double vl,
                               double kappa) {
  // canonical: vk <= vl
  if (vk > vl) {
    std::swap(rk, rl);
    std::swap(vk, vl);
  }
  if (!(kappa > 0.0)) return std::nullopt;
  if (!strictly_less(vk, vl) || !strictly_less(rl, rk)) return std::nullopt;
  const double root = kappa * (vl - vk) / (2.0 * (rk - rl));
  return root * root;
}

// Sorted crossing points with near-duplicates merged.
std::vector<double> crossing_set(const View& view) {
  const double kappa = view.inst->kappa();
  std::vector<double> qs;
  const std::size_t m = view.size();
  if (kappa > 0.0) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (auto q = crossing(view.r[i], view.v[i], view.r[j], view.v[j], kappa)) {
          qs.push_back(*q);
        }
      }
    }
  }
  std::sort(qs.begin(), qs.end());
  std::vector<double> merged;
  merged.reserve(qs.size());
  for (double q : qs) {
    if (merged.empty() || q - merged.back() > kMergeTol * merged.back()) {
      merged.push_back(q);
    }
  }
  return merged;
}

double variance_of(const View& view, const std::vector<std::size_t>& order) {
  return fill(view, order).sol.delta;
}

// Problem (12): greedy by descending sigma2/a, once with zero-variance items
// last and once with them first (the delta = 0 ordering), keep the larger.
double upper_budget(const View& view) {
  std::vector<std::size_t> pos(view.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  auto by_ratio = [&](std::size_t x, std::size_t y) {
    const double rx = view.item(x).sigma2 / view.item(x).a;
    const double ry = view.item(y).sigma2 / view.item(y).a;
    if (rx != ry) return rx > ry;
    return view.free[x] < view.free[y];
  };
  std::sort(pos.begin(), pos.end(), by_ratio);
  const double positive_first = variance_of(view, pos);
  std::stable_partition(pos.begin(), pos.end(), [&](std::size_t x) {
    return view.item(x).sigma2 == 0.0;
  });
  const double zero_first = variance_of(view, pos);
  return std::max(positive_first, zero_first);
}

// Problem (13): greedy by ascending sigma2/a until g reaches b.
double lower_budget(const View& view) {
  std::vector<std::size_t> pos(view.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::sort(pos.begin(), pos.end(), [&](std::size_t x, std::size_t y) {
    const double rx = view.item(x).sigma2 / view.item(x).a;
    const double ry = view.item(y).sigma2 / view.item(y).a;
    if (rx != ry) return rx < ry;
    return view.free[x] < view.free[y];
  });
  return variance_of(view, pos);
}

NcrResult solve_view(const View& view, const NcrOptions& options) {
  NcrResult result;
  DeltaCandidates& dc = result.deltas;

  const std::vector<double> qs = crossing_set(view);
  dc.delta_count = qs.size() + 2;
  dc.gamma = qs.empty() ? 1.0 : 0.5 * qs.front();
  dc.delta_L = lower_budget(view);
  dc.delta_U = upper_budget(view);

  const double lo = dc.delta_L * (1.0 - kMergeTol);
  const double hi = dc.delta_U * (1.0 + kMergeTol);
  std::vector<double>& cand = dc.candidates;
  if (dc.delta_L <= 0.0) cand.push_back(0.0);
  for (auto it = std::lower_bound(qs.begin(), qs.end(), lo);
       it != qs.end() && *it <= hi; ++it) {
    cand.push_back(*it);
  }
  cand.push_back(std::max(dc.delta_L, dc.gamma));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // tau is constant on [q_i, q_{i+1}); evaluate each candidate at an
  // interior point of its interval so that rounding in q cannot land on the
  // pre-crossing side.
  auto probe = [&](double d) -> double {
    if (d <= 0.0) return 0.0;
    auto it = std::upper_bound(qs.begin(), qs.end(), d * (1.0 + kMergeTol));
    if (it == qs.begin()) return dc.gamma;
    const double left = *(it - 1);
    if (it == qs.end()) return 2.0 * left;
    return std::sqrt(left * *it);
  };

  struct Eval {
    double objective = -1.0;
    FractionalSolution sol;
  };
  std::vector<Eval> evals(cand.size());
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto order = order_positions(view, probe(cand[i]));
      Fill f = fill(view, order);
      evals[i].objective = f.sol.objective;
      evals[i].sol = std::move(f.sol);
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                          : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, cand.size() / 64 + 1));
  if (threads == 1) {
    run(0, cand.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (cand.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(cand.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // Ties go to the smallest candidate.
  std::size_t best = 0;
  for (std::size_t i = 1; i < evals.size(); ++i) {
    if (evals[i].objective > evals[best].objective) best = i;
  }
  result.best_delta = cand[best];
  result.z = evals[best].objective;
  result.x = std::move(evals[best].sol);
  return result;
}

}  // namespace

double item_cost(const Instance& inst, std::size_t j, double delta) {
  const Item& it = inst.item(j);
  if (!(delta > 0.0)) return it.a;
  return it.a + inst.kappa() * it.sigma2 / (2.0 * std::sqrt(delta));
}

double profit_density(const Instance& inst, std::size_t j, double delta) {
  return inst.item(j).c / item_cost(inst, j, delta);
}

Ordering ordering(const Instance& inst, double delta) {
  if (delta < 0.0) throw DomainError("ordering: delta must be non-negative");
  const View view = full_view(inst);
  return Ordering{order_positions(view, delta), delta};
}

FractionalSolution build_x(const Instance& inst, double delta) {
  if (delta < 0.0) throw DomainError("build_x: delta must be non-negative");
  const View view = full_view(inst);
  Fill f = fill(view, order_positions(view, delta));
  if (f.saturated) {
    throw ConstructionError(
        "build_x: all items fit below the capacity; the instance is trivial");
  }
  return std::move(f.sol);
}

std::optional<ReversePoint> reverse_point(const Instance& inst, std::size_t k,
                                          std::size_t l) {
  if (k == l) throw UsageError("reverse_point: k and l must differ");
  const Item& ik = inst.item(k);
  const Item& il = inst.item(l);
  double vk = ik.sigma2 / ik.c;
  double vl = il.sigma2 / il.c;
  if (vk > vl) {
    std::swap(k, l);
    std::swap(vk, vl);
  }
  const Item& ck = inst.item(k);
  const Item& cl = inst.item(l);
  auto q = crossing(ck.a / ck.c, vk, cl.a / cl.c, vl, inst.kappa());
  if (!q) return std::nullopt;
  return ReversePoint{k, l, *q};
}

std::vector<ReversePoint> reverse_points(const Instance& inst) {
  std::vector<ReversePoint> out;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    for (std::size_t l = k + 1; l < inst.size(); ++l) {
      if (auto rp = reverse_point(inst, k, l)) out.push_back(*rp);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ReversePoint& x, const ReversePoint& y) {
              if (x.q != y.q) return x.q < y.q;
              if (x.k != y.k) return x.k < y.k;
              return x.l < y.l;
            });
  return out;
}

double delta_upper(const Instance& inst) {
  return upper_budget(full_view(inst));
}

double delta_lower(const Instance& inst) {
  return lower_budget(full_view(inst));
}

NcrResult solve_ncr(const Instance& inst, const NcrOptions& options) {
  const View view = full_view(inst);
  const double total = inst.total_mean() +
                       inst.kappa() * std::sqrt(inst.total_variance());
  if (!(total > inst.capacity())) {
    throw ConstructionError(
        "solve_ncr: all items fit below the capacity; the instance is trivial");
  }
  return solve_view(view, options);
}

std::optional<NcrResult> solve_ncr_anchored(const Instance& inst,
                                            std::span<const Fix> fixing,
                                            const NcrOptions& options) {
  if (fixing.size() != inst.size()) {
    throw UsageError("solve_ncr_anchored: fixing has wrong length");
  }
  const View view = make_view(inst, fixing);
  const double b = inst.capacity();
  const double kappa = inst.kappa();
  const double base_load = view.mean0 + kappa * std::sqrt(view.var0);
  if (!within_capacity(inst, base_load)) return std::nullopt;

  double free_mean = 0.0;
  double free_var = 0.0;
  for (std::size_t pos = 0; pos < view.size(); ++pos) {
    free_mean += view.item(pos).a;
    free_var += view.item(pos).sigma2;
  }
  const double full_load =
      view.mean0 + free_mean + kappa * std::sqrt(view.var0 + free_var);
  if (!(full_load > b) || base_load >= b) {
    // Either every free item fits or nothing more does; the relaxation is
    // integral.
    std::vector<double> x = view.base_x;
    if (!(full_load > b)) {
      for (std::size_t j : view.free) x[j] = 1.0;
    }
    NcrResult r;
    r.x = make_fractional(inst, std::move(x));
    r.z = r.x.objective;
    r.best_delta = r.x.delta;
    r.deltas.delta_L = r.deltas.delta_U = r.x.delta;
    r.deltas.candidates = {r.x.delta};
    r.deltas.delta_count = 0;
    return r;
  }
  return solve_view(view, options);
}

}  // namespace ckp
