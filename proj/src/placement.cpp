// Copyright 2026 The mvcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvcodes/placement.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "mvcodes/decoding.hpp"
#include "mvcodes/error.hpp"

namespace mvc {

std::uint64_t StoragePlan::total_tasks() const noexcept {
  return std::accumulate(tasks_per_worker.begin(), tasks_per_worker.end(), std::uint64_t{0});
}

namespace {

std::vector<std::size_t> minimal_axis_sizes(SchemeKind kind, std::span<const std::size_t> parts) {
  if (parts.size() < 3) fail(ErrorCode::kInvalidArgument, "need at least three split counts (m >= 2)");
  for (auto p : parts) {
    if (p == 0) fail(ErrorCode::kInvalidArgument, "split counts must be positive");
  }
  const std::size_t m = parts.size() - 1;
  std::vector<std::size_t> a;
  if (kind == SchemeKind::kMV1) {
    for (std::size_t i = 0; i < m; ++i) a.push_back(parts[i] * parts[i + 1]);
  } else {
    a.push_back(parts[0]);
    for (std::size_t i = 1; i < m; ++i) a.push_back(2 * parts[i] - 1);
    a.push_back(parts[m]);
  }
  return a;
}

std::uint64_t product(const std::vector<std::size_t>& v) {
  std::uint64_t r = 1;
  for (auto x : v) r *= x;
  return r;
}

// Blocks of M_i a holder of the given axis sets must store.
std::uint64_t blocks_for(SchemeKind kind, const std::vector<std::vector<Fe>>& axes, std::size_t i) {
  return kind == SchemeKind::kMV1 ? axes[i].size()
                                  : static_cast<std::uint64_t>(axes[i].size()) * axes[i + 1].size();
}

}  // namespace

StoragePlan plan_shared(const PrimeField& field, SchemeKind kind,
                        std::span<const std::size_t> parts, std::size_t workers,
                        std::uint64_t seed) {
  if (workers == 0) fail(ErrorCode::kInvalidArgument, "need at least one worker");
  StoragePlan plan;
  plan.kind = kind;
  plan.memory = MemoryMode::kShared;
  plan.workers = workers;
  plan.parts.assign(parts.begin(), parts.end());
  plan.axis_sizes = minimal_axis_sizes(kind, parts);
  plan.recovery_threshold = product(plan.axis_sizes);

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Fe>> axes;
  for (auto n : plan.axis_sizes) axes.push_back(distinct_points(field, n, rng));
  const std::size_t m = parts.size() - 1;
  for (std::size_t i = 0; i < m; ++i) plan.storage_threshold.push_back(blocks_for(kind, axes, i));
  plan.worker_axes.push_back(std::move(axes));

  const std::uint64_t total = plan.recovery_threshold;
  for (std::size_t w = 0; w < workers; ++w) {
    plan.tasks_per_worker.push_back(total / workers + (w < total % workers ? 1 : 0));
  }
  return plan;
}

StoragePlan plan_dedicated(const PrimeField& field, SchemeKind kind,
                           std::span<const std::size_t> parts, std::size_t workers,
                           std::span<const Rational> fractions, std::uint64_t seed) {
  if (workers == 0) fail(ErrorCode::kInvalidArgument, "need at least one worker");
  StoragePlan plan;
  plan.kind = kind;
  plan.memory = MemoryMode::kDedicated;
  plan.workers = workers;
  plan.parts.assign(parts.begin(), parts.end());
  plan.axis_sizes = minimal_axis_sizes(kind, parts);
  plan.recovery_threshold = product(plan.axis_sizes);
  const std::size_t v = plan.axis_sizes.size();
  if (fractions.size() != v) {
    fail(ErrorCode::kInvalidArgument, std::string(to_string(kind)) + " needs " +
                                          std::to_string(v) + " storage fractions, got " +
                                          std::to_string(fractions.size()));
  }
  Rational coverage = Rational(workers);
  for (const auto& s : fractions) {
    if (s <= 0 || s > 1) {
      fail(ErrorCode::kInvalidArgument, "storage fraction " + format_rational(s) + " outside (0, 1]");
    }
    coverage *= s;
  }
  if (coverage < 1) {
    fail(ErrorCode::kInfeasiblePlan,
         "infeasible storage plan: N * prod s_i = " + format_rational(coverage) +
             " but recovery needs N * prod s_i >= 1 (R_th = " +
             std::to_string(plan.recovery_threshold) + " evaluations)");
  }
  std::vector<std::size_t> per_worker(v);
  for (std::size_t k = 0; k < v; ++k) {
    const Rational share = fractions[k] * plan.axis_sizes[k];
    if (denominator(share) != 1) {
      fail(ErrorCode::kNonIntegralAssignment,
           "s_" + std::to_string(k) + " * " + std::to_string(plan.axis_sizes[k]) + " = " +
               format_rational(share) + " is not an integer");
    }
    per_worker[k] = static_cast<std::size_t>(numerator(share));
  }
  plan.fractions.assign(fractions.begin(), fractions.end());

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Fe>> pools;
  for (std::size_t k = 0; k < v; ++k) pools.push_back(distinct_points(field, workers * per_worker[k], rng));
  plan.storage_threshold.assign(parts.size() - 1, 0);
  for (std::size_t w = 0; w < workers; ++w) {
    std::vector<std::vector<Fe>> axes(v);
    for (std::size_t k = 0; k < v; ++k) {
      auto first = pools[k].begin() + static_cast<std::ptrdiff_t>(w * per_worker[k]);
      axes[k].assign(first, first + static_cast<std::ptrdiff_t>(per_worker[k]));
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) plan.storage_threshold[i] += blocks_for(kind, axes, i);
    plan.tasks_per_worker.push_back(product(per_worker));
    plan.worker_axes.push_back(std::move(axes));
  }
  return plan;
}

std::vector<WorkerAssignment> enumerate_tasks(const StoragePlan& plan) {
  std::vector<WorkerAssignment> out(plan.workers);
  for (std::size_t w = 0; w < plan.workers; ++w) out[w].worker = w;
  auto walk = [&](const std::vector<std::vector<Fe>>& axes, auto&& sink) {
    EvaluationGrid grid{plan.kind, axes};
    const std::size_t n = grid.point_count();
    for (std::size_t t = 0; t < n; ++t) sink(t, grid.point(t));
  };
  if (plan.memory == MemoryMode::kShared) {
    walk(plan.worker_axes.at(0),
         [&](std::size_t t, EvalPoint p) { out[t % plan.workers].tasks.push_back(std::move(p)); });
  } else {
    for (std::size_t w = 0; w < plan.workers; ++w) {
      walk(plan.worker_axes.at(w),
           [&](std::size_t, EvalPoint p) { out[w].tasks.push_back(std::move(p)); });
    }
  }
  return out;
}

std::string format_plan(const StoragePlan& plan) {
  std::ostringstream out;
  out << "scheme " << to_string(plan.kind) << '\n';
  out << "memory " << to_string(plan.memory) << '\n';
  out << "workers " << plan.workers << '\n';
  out << "parts";
  for (auto p : plan.parts) out << ' ' << p;
  out << '\n';
  if (!plan.fractions.empty()) {
    out << "fractions";
    for (const auto& s : plan.fractions) out << ' ' << format_rational(s);
    out << '\n';
  }
  out << "axis_sizes";
  for (auto a : plan.axis_sizes) out << ' ' << a;
  out << '\n';
  out << "recovery_threshold " << plan.recovery_threshold << '\n';
  out << "total_tasks " << plan.total_tasks() << '\n';
  out << "storage_threshold";
  for (auto s : plan.storage_threshold) out << ' ' << s;
  out << '\n';
  for (std::size_t w = 0; w < plan.worker_axes.size(); ++w) {
    out << (plan.memory == MemoryMode::kShared ? "pool" : "worker " + std::to_string(w))
        << " tasks " << (plan.memory == MemoryMode::kShared ? plan.total_tasks() : plan.tasks_per_worker[w])
        << '\n';
    for (std::size_t k = 0; k < plan.worker_axes[w].size(); ++k) {
      out << "  x" << k << ':';
      for (Fe x : plan.worker_axes[w][k]) out << ' ' << x.v;
      out << '\n';
    }
  }
  if (plan.memory == MemoryMode::kShared) {
    out << "tasks_per_worker";
    for (auto t : plan.tasks_per_worker) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

}  // namespace mvc
