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

#include "mvcodes/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <queue>
#include <tuple>

#include "mvcodes/decoding.hpp"
#include "mvcodes/encoding.hpp"
#include "mvcodes/error.hpp"

namespace mvc {

LatencyModel LatencyModel::shifted_exponential(double shift, double rate) {
  LatencyModel m;
  m.family = Family::kShiftedExponential;
  m.shift = shift;
  m.rate = rate;
  m.validate();
  return m;
}

LatencyModel LatencyModel::deterministic(double task_time) {
  LatencyModel m;
  m.family = Family::kDeterministic;
  m.task_time = task_time;
  m.validate();
  return m;
}

void LatencyModel::validate() const {
  if (family == Family::kDeterministic) {
    if (!(task_time > 0.0) || !std::isfinite(task_time)) {
      fail(ErrorCode::kInvalidArgument, "deterministic task time must be positive");
    }
    return;
  }
  if (!(shift >= 0.0) || !std::isfinite(shift)) {
    fail(ErrorCode::kInvalidArgument, "latency shift must be >= 0");
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    fail(ErrorCode::kInvalidArgument, "latency rate must be > 0");
  }
}

double LatencyModel::sample(std::mt19937_64& rng) const {
  if (family == Family::kDeterministic) return task_time;
  // u in (0, 1) so -log(u) > 0 even with a zero shift
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  return shift - std::log(u) / rate;
}

namespace {

std::mt19937_64 worker_rng(std::uint64_t seed, std::size_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker), static_cast<std::uint32_t>(worker >> 32)};
  return std::mt19937_64(seq);
}

struct Arrival {
  double time;
  std::size_t worker;
  std::size_t index;

  bool operator<(const Arrival& o) const {
    return std::tie(time, worker, index) < std::tie(o.time, o.worker, o.index);
  }
};

}  // namespace

SimOutcome simulate(const StoragePlan& plan, const BlockChain& chain,
                    const LatencyModel& model, std::uint64_t seed) {
  model.validate();
  const auto& scheme = chain.scheme();
  if (!std::equal(plan.parts.begin(), plan.parts.end(), scheme.parts().begin(), scheme.parts().end())) {
    fail(ErrorCode::kInvalidArgument, "chain split counts do not match the storage plan");
  }
  const auto queues = enumerate_tasks(plan);

  std::vector<Arrival> arrivals;
  for (const auto& q : queues) {
    auto rng = worker_rng(seed, q.worker);
    double t = 0.0;
    for (std::size_t k = 0; k < q.tasks.size(); ++k) {
      t += model.sample(rng);
      arrivals.push_back({t, q.worker, k});
    }
  }
  std::sort(arrivals.begin(), arrivals.end());

  SimOutcome out;
  out.tasks_completed_total = arrivals.size();
  out.per_worker_completed.assign(plan.workers, 0);
  GeneralDecoder decoder(chain.field(), plan.kind, scheme);
  for (const auto& a : arrivals) {
    const EvalPoint& point = queues[a.worker].tasks[a.index];
    const FieldMatrix result = worker_compute(chain.field(), encode_task(chain, plan.kind, point));
    decoder.add(point, result);
    ++out.tasks_used;
    ++out.per_worker_completed[a.worker];
    if (decoder.decodable()) {
      out.recovery_time = a.time;
      break;
    }
  }
  if (!decoder.decodable()) {
    fail(ErrorCode::kNeverDecodable,
         "all " + std::to_string(arrivals.size()) + " tasks finished but the system has rank " +
             std::to_string(decoder.rank()) + " < " + std::to_string(decoder.unknowns()));
  }
  out.tasks_wasted = out.tasks_completed_total - out.tasks_used;
  out.extra_tasks_for_decodability = out.tasks_used - plan.recovery_threshold;
  out.decoded = assemble_result(decoder.decode());
  std::vector<FieldMatrix> mats;
  for (std::size_t i = 0; i < chain.m(); ++i) mats.push_back(chain.matrix(i));
  out.matches_oracle = out.decoded == oracle_chain_multiply(chain.field(), mats);
  return out;
}

double order_statistic_time(std::uint64_t results_needed, std::size_t workers,
                            const LatencyModel& model, std::uint64_t seed) {
  model.validate();
  if (workers == 0 || results_needed == 0) {
    fail(ErrorCode::kInvalidArgument, "need at least one worker and one result");
  }
  std::vector<std::mt19937_64> rngs;
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> next;
  for (std::size_t w = 0; w < workers; ++w) {
    rngs.push_back(worker_rng(seed, w));
    next.push({model.sample(rngs[w]), w});
  }
  double t = 0.0;
  for (std::uint64_t r = 0; r < results_needed; ++r) {
    auto [time, w] = next.top();
    next.pop();
    t = time;
    next.push({time + model.sample(rngs[w]), w});
  }
  return t;
}

namespace {

double percentile(std::vector<double> v, double q) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  // nearest rank
  std::size_t rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
  rank = std::clamp<std::size_t>(rank, 1, v.size());
  return v[rank - 1];
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return std::nan("");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::string fmt(double x) {
  if (std::isnan(x)) return "na";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SweepResult sweep(std::span<const StoragePlan> plans, const BlockChain& chain,
                  const LatencyModel& model, std::span<const std::uint64_t> seeds,
                  bool include_uv_reference) {
  SweepResult res;
  for (std::size_t id = 0; id < plans.size(); ++id) {
    const auto& plan = plans[id];
    std::vector<double> times, wasted, extra;
    SweepSummary sum;
    sum.plan_id = std::to_string(id);
    sum.scheme = to_string(plan.kind);
    sum.memory = to_string(plan.memory);
    sum.workers = plan.workers;
    for (auto seed : seeds) {
      SweepRun run{id, plan.kind, plan.memory, plan.workers, seed, std::nullopt};
      try {
        run.outcome = simulate(plan, chain, model, seed);
        times.push_back(run.outcome->recovery_time);
        wasted.push_back(static_cast<double>(run.outcome->tasks_wasted));
        extra.push_back(static_cast<double>(run.outcome->extra_tasks_for_decodability));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNeverDecodable) throw;
        ++sum.failures;
      }
      ++sum.runs;
      res.runs.push_back(std::move(run));
    }
    sum.mean_recovery_time = mean(times);
    sum.p50_recovery_time = percentile(times, 0.5);
    sum.p90_recovery_time = percentile(times, 0.9);
    sum.mean_tasks_wasted = mean(wasted);
    sum.mean_extra_for_decodability = mean(extra);
    res.summary.push_back(std::move(sum));
  }
  if (include_uv_reference) {
    const auto uv = uv_metrics(chain.scheme().parts());
    const auto needed = uv.recovery_threshold.convert_to<std::uint64_t>();
    std::map<std::size_t, bool> worker_counts;
    for (const auto& p : plans) worker_counts[p.workers] = true;
    for (const auto& [n, _] : worker_counts) {
      std::vector<double> times;
      for (auto seed : seeds) times.push_back(order_statistic_time(needed, n, model, seed));
      SweepSummary sum;
      sum.plan_id = "uv";
      sum.scheme = "UV";
      sum.memory = "na";
      sum.workers = n;
      sum.runs = seeds.size();
      sum.mean_recovery_time = mean(times);
      sum.p50_recovery_time = percentile(times, 0.5);
      sum.p90_recovery_time = percentile(times, 0.9);
      sum.mean_tasks_wasted = std::nan("");
      sum.mean_extra_for_decodability = 0.0;
      res.summary.push_back(std::move(sum));
    }
  }
  return res;
}

void write_runs_csv(std::ostream& out, std::span<const SweepRun> runs) {
  out << "plan_id,scheme,memory,N,seed,recovery_time,tasks_total,tasks_wasted,extra_for_decodability\n";
  for (const auto& r : runs) {
    out << r.plan_id << ',' << to_string(r.kind) << ',' << to_string(r.memory) << ','
        << r.workers << ',' << r.seed << ',';
    if (r.outcome) {
      out << fmt(r.outcome->recovery_time) << ',' << r.outcome->tasks_completed_total << ','
          << r.outcome->tasks_wasted << ',' << r.outcome->extra_tasks_for_decodability << '\n';
    } else {
      out << "never,na,na,na\n";
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const SweepSummary> rows) {
  out << "plan_id,scheme,memory,N,runs,failures,mean_recovery_time,p50_recovery_time,"
         "p90_recovery_time,mean_tasks_wasted,mean_extra_for_decodability\n";
  for (const auto& r : rows) {
    out << r.plan_id << ',' << r.scheme << ',' << r.memory << ',' << r.workers << ',' << r.runs
        << ',' << r.failures << ',' << fmt(r.mean_recovery_time) << ','
        << fmt(r.p50_recovery_time) << ',' << fmt(r.p90_recovery_time) << ','
        << fmt(r.mean_tasks_wasted) << ',' << fmt(r.mean_extra_for_decodability) << '\n';
  }
}

}  // namespace mvc
