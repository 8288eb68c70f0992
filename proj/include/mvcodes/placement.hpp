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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvcodes/analysis.hpp"
#include "mvcodes/encoding.hpp"
#include "mvcodes/field.hpp"

namespace mvc {

/// Which evaluation coordinates each worker holds coded blocks for.
///
/// Shared memory: one global grid (worker_axes has a single entry) whose
/// points are dealt round-robin to the workers. Dedicated memory: worker w
/// owns its own Cartesian sub-grid worker_axes[w], and along every axis the
/// sub-grids of different workers are disjoint.
struct StoragePlan {
  SchemeKind kind = SchemeKind::kMV1;
  MemoryMode memory = MemoryMode::kShared;
  std::size_t workers = 1;
  std::vector<std::size_t> parts;
  std::vector<Rational> fractions;       // dedicated only
  std::vector<std::size_t> axis_sizes;   // minimal grid sizes a_k
  std::vector<std::vector<std::vector<Fe>>> worker_axes;
  std::vector<std::uint64_t> storage_threshold;  // coded blocks stored per matrix
  std::uint64_t recovery_threshold = 0;
  std::vector<std::uint64_t> tasks_per_worker;

  std::uint64_t total_tasks() const noexcept;
};

struct WorkerAssignment {
  std::size_t worker = 0;
  std::vector<EvalPoint> tasks;  // in execution order
};

StoragePlan plan_shared(const PrimeField& field, SchemeKind kind,
                        std::span<const std::size_t> parts,
                        std::size_t workers = 1, std::uint64_t seed = 1);

// Errors: kInvalidArgument (fraction count or range), kInfeasiblePlan
// (N prod s_i < 1), kNonIntegralAssignment (s_k a_k not an integer).
StoragePlan plan_dedicated(const PrimeField& field, SchemeKind kind,
                           std::span<const std::size_t> parts, std::size_t workers,
                           std::span<const Rational> fractions,
                           std::uint64_t seed = 1);

// Each worker's queue is the lexicographic walk of its grid (dedicated) or
// its round-robin share of the global grid (shared).
std::vector<WorkerAssignment> enumerate_tasks(const StoragePlan& plan);

// Human-readable report: header, S_th table, per-worker axis sets.
std::string format_plan(const StoragePlan& plan);

}  // namespace mvc
