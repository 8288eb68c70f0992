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


#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "mvcodes/analysis.hpp"
#include "mvcodes/placement.hpp"
#include "test_util.hpp"

namespace mvc {
namespace {

std::vector<Rational> fractions(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_fraction(s));
  return out;
}

TEST(PlacementTest, SharedMv1) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  auto plan = plan_shared(f, SchemeKind::kMV1, parts, 3, 1);
  EXPECT_EQ(plan.storage_threshold, (std::vector<std::uint64_t>{4, 4}));
  EXPECT_EQ(plan.recovery_threshold, 16u);
  EXPECT_EQ(plan.total_tasks(), 16u);
  EXPECT_EQ(plan.tasks_per_worker, (std::vector<std::uint64_t>{6, 5, 5}));
}

TEST(PlacementTest, SharedMv2) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2, 2};
  auto plan = plan_shared(f, SchemeKind::kMV2, parts, 1, 1);
  EXPECT_EQ(plan.storage_threshold, (std::vector<std::uint64_t>{6, 9, 6}));
  EXPECT_EQ(plan.total_tasks(), 36u);
  EXPECT_EQ(plan.total_tasks(), plan.recovery_threshold);
}

TEST(PlacementTest, SharedMatchesAnalysis) {
  PrimeField f;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (const auto& parts : testing::all_parts(m, 3)) {
      for (auto kind : {SchemeKind::kMV1, SchemeKind::kMV2}) {
        auto plan = plan_shared(f, kind, parts, 2, 1);
        auto mt = metrics(kind == SchemeKind::kMV1 ? SchemeLabel::kMV1 : SchemeLabel::kMV2,
                          parts, MemoryMode::kShared);
        ASSERT_EQ(Rational(plan.recovery_threshold), Rational(mt.recovery_threshold));
        ASSERT_EQ(plan.total_tasks(), plan.recovery_threshold);
        for (std::size_t i = 0; i < m; ++i) {
          ASSERT_EQ(Rational(plan.storage_threshold[i]), mt.storage_threshold[i]);
        }
      }
    }
  }
}

TEST(PlacementTest, DedicatedMv1HalfStorage) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  auto plan = plan_dedicated(f, SchemeKind::kMV1, parts, 4, fractions({"1/2", "1/2"}), 1);
  EXPECT_EQ(plan.tasks_per_worker, (std::vector<std::uint64_t>(4, 4)));
  EXPECT_EQ(plan.storage_threshold, (std::vector<std::uint64_t>{8, 8}));
  EXPECT_EQ(plan.total_tasks(), 16u);
}

TEST(PlacementTest, DedicatedMv2) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  auto plan =
      plan_dedicated(f, SchemeKind::kMV2, parts, 4, fractions({"1/2", "1", "1/2"}), 1);
  EXPECT_EQ(plan.tasks_per_worker, (std::vector<std::uint64_t>(4, 3)));
  // N s_i a_i s_{i+1} a_{i+1} = 4 * 1 * 3
  EXPECT_EQ(plan.storage_threshold, (std::vector<std::uint64_t>{12, 12}));
}

TEST(PlacementTest, DedicatedAxesAreDisjoint) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 3, 2};
  auto plan = plan_dedicated(f, SchemeKind::kMV1, parts, 6, fractions({"1/2", "1/3"}), 5);
  for (std::size_t k = 0; k < plan.axis_sizes.size(); ++k) {
    std::set<Fe> seen;
    std::size_t total = 0;
    for (const auto& axes : plan.worker_axes) {
      total += axes[k].size();
      seen.insert(axes[k].begin(), axes[k].end());
    }
    EXPECT_EQ(seen.size(), total);
  }
}

TEST(PlacementTest, DedicatedErrors) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  EXPECT_MVC_ERROR(plan_dedicated(f, SchemeKind::kMV1, parts, 2, fractions({"1/2", "1/2"})),
                   ErrorCode::kInfeasiblePlan);
  EXPECT_MVC_ERROR(plan_dedicated(f, SchemeKind::kMV1, parts, 9, fractions({"1/3", "1/3"})),
                   ErrorCode::kNonIntegralAssignment);
  EXPECT_MVC_ERROR(plan_dedicated(f, SchemeKind::kMV1, parts, 4, fractions({"1/2"})),
                   ErrorCode::kInvalidArgument);
  EXPECT_MVC_ERROR(plan_dedicated(f, SchemeKind::kMV1, parts, 4, fractions({"3/2", "1/2"})),
                   ErrorCode::kInvalidArgument);
  EXPECT_MVC_ERROR(plan_shared(f, SchemeKind::kMV1, parts, 0), ErrorCode::kInvalidArgument);
  // Equal MV2 partitions never give integral shares: gcd(p, 2p - 1) = 1.
  EXPECT_MVC_ERROR(
      plan_dedicated(f, SchemeKind::kMV2, parts, 8, fractions({"1/2", "1/2", "1/2"})),
      ErrorCode::kNonIntegralAssignment);
}

TEST(PlacementTest, TaskEnumeration) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  auto shared = plan_shared(f, SchemeKind::kMV2, parts, 5, 3);
  auto tasks = enumerate_tasks(shared);
  std::set<EvalPoint> all;
  for (std::size_t w = 0; w < tasks.size(); ++w) {
    EXPECT_EQ(tasks[w].tasks.size(), shared.tasks_per_worker[w]);
    all.insert(tasks[w].tasks.begin(), tasks[w].tasks.end());
  }
  EXPECT_EQ(all.size(), 12u);
  auto ded = plan_dedicated(f, SchemeKind::kMV1, parts, 4, fractions({"1", "1/2"}), 3);
  auto dtasks = enumerate_tasks(ded);
  ASSERT_EQ(dtasks.size(), 4u);
  for (const auto& t : dtasks) EXPECT_EQ(t.tasks.size(), 8u);
}

TEST(PlacementTest, ReportListsEverything) {
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  auto report = format_plan(plan_dedicated(f, SchemeKind::kMV1, parts, 4,
                                           fractions({"1/2", "1/2"}), 1));
  EXPECT_NE(report.find("storage_threshold 8 8"), std::string::npos) << report;
  EXPECT_NE(report.find("recovery_threshold 16"), std::string::npos);
  EXPECT_NE(report.find("worker 3 tasks 4"), std::string::npos);
  EXPECT_NE(report.find("fractions 1/2 1/2"), std::string::npos);
}

}  // namespace
}  // namespace mvc
