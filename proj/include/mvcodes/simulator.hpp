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
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mvcodes/chain.hpp"
#include "mvcodes/placement.hpp"

namespace mvc {

// Per-task service time. Shifted exponential: shift + Exp(rate).
struct LatencyModel {
  enum class Family { kShiftedExponential, kDeterministic };

  Family family = Family::kShiftedExponential;
  double shift = 1.0;
  double rate = 1.0;
  double task_time = 1.0;  // deterministic only

  static LatencyModel shifted_exponential(double shift, double rate);
  static LatencyModel deterministic(double task_time);

  void validate() const;  // kInvalidArgument
  // Always strictly positive.
  double sample(std::mt19937_64& rng) const;
};

struct SimOutcome {
  double recovery_time = 0.0;
  std::uint64_t tasks_used = 0;             // results received up to recovery
  std::uint64_t tasks_completed_total = 0;  // every queued task, run to the end
  std::uint64_t tasks_wasted = 0;           // completed after recovery
  std::uint64_t extra_tasks_for_decodability = 0;  // tasks_used - R_th
  std::vector<std::uint64_t> per_worker_completed;  // up to recovery
  FieldMatrix decoded;
  bool matches_oracle = false;
};

/// Event-driven run of one plan. Workers start at t = 0 and work through
/// their queues back to back; every arrival is fed to an incremental
/// decoder, and recovery happens at the first arrival that makes the
/// interpolation system full rank. Throws kNeverDecodable if all tasks finish
/// without reaching full rank, kInvalidArgument if chain and plan disagree.
SimOutcome simulate(const StoragePlan& plan, const BlockChain& chain,
                    const LatencyModel& model, std::uint64_t seed);

// Time at which the R-th result arrives when each of `workers` workers
// processes an unbounded queue under `model`. Used for the univariate
// reference curve, where no coding is executed.
double order_statistic_time(std::uint64_t results_needed, std::size_t workers,
                            const LatencyModel& model, std::uint64_t seed);

struct SweepRun {
  std::size_t plan_id = 0;
  SchemeKind kind = SchemeKind::kMV1;
  MemoryMode memory = MemoryMode::kShared;
  std::size_t workers = 0;
  std::uint64_t seed = 0;
  std::optional<SimOutcome> outcome;  // empty when never decodable
};

struct SweepSummary {
  std::string plan_id;
  std::string scheme;
  std::string memory;
  std::size_t workers = 0;
  std::size_t runs = 0;
  std::size_t failures = 0;
  double mean_recovery_time = 0.0;
  double p50_recovery_time = 0.0;
  double p90_recovery_time = 0.0;
  double mean_tasks_wasted = 0.0;
  double mean_extra_for_decodability = 0.0;
};

struct SweepResult {
  std::vector<SweepRun> runs;
  std::vector<SweepSummary> summary;
};

// With include_uv_reference, one extra summary row per distinct worker count
// gives the univariate order-statistic times for the chain's split counts.
SweepResult sweep(std::span<const StoragePlan> plans, const BlockChain& chain,
                  const LatencyModel& model, std::span<const std::uint64_t> seeds,
                  bool include_uv_reference = false);

// plan_id,scheme,memory,N,seed,recovery_time,tasks_total,tasks_wasted,extra_for_decodability
void write_runs_csv(std::ostream& out, std::span<const SweepRun> runs);
void write_summary_csv(std::ostream& out, std::span<const SweepSummary> rows);

}  // namespace mvc
