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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mvcodes/analysis.hpp"
#include "mvcodes/chain.hpp"
#include "mvcodes/decoding.hpp"
#include "mvcodes/encoding.hpp"
#include "mvcodes/error.hpp"
#include "mvcodes/field.hpp"
#include "mvcodes/placement.hpp"
#include "mvcodes/simulator.hpp"

namespace {

using namespace mvc;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<std::vector<std::size_t>> all_parts(std::size_t m, std::size_t max_part) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(m + 1, 1);
  while (true) {
    out.push_back(p);
    std::size_t k = 0;
    while (k <= m && p[k] == max_part) p[k++] = 1;
    if (k > m) break;
    ++p[k];
  }
  return out;
}

std::vector<std::vector<std::size_t>> criterion1_cases() {
  std::vector<std::vector<std::size_t>> cases;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (auto& p : all_parts(m, 3)) cases.push_back(p);
  }
  return cases;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

SchemeLabel label(SchemeKind k) { return k == SchemeKind::kMV1 ? SchemeLabel::kMV1 : SchemeLabel::kMV2; }

Rational rpow(Rational b, std::size_t e) {
  Rational r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= b;
  return r;
}

// 1. End-to-end exactness.
Verdict criterion1() {
  Verdict v;
  PrimeField f;
  std::size_t runs = 0;
  for (const auto& parts : criterion1_cases()) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      // block sides 1..4
      auto scheme = PartitionScheme::with_block_side(parts, 1 + (seed + runs) % 4);
      auto chain = random_chain(f, scheme, seed * 1000003 + runs);
      for (auto kind : {SchemeKind::kMV1, SchemeKind::kMV2}) {
        auto r = roundtrip(chain, kind, seed);
        ++runs;
        v.require(r.exact, std::string(to_string(kind)) + " p=(" + join(parts) + ") seed " +
                               std::to_string(seed) + " differs from the oracle");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(runs) + " roundtrips exact";
  return v;
}

// 2. Recovery thresholds: formula vs monomial support, plus anchors.
Verdict criterion2() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& parts : criterion1_cases()) {
    auto scheme = PartitionScheme::with_block_side(parts, 1);
    for (auto kind : {SchemeKind::kMV1, SchemeKind::kMV2}) {
      auto formula = metrics(label(kind), parts, MemoryMode::kShared).recovery_threshold;
      auto support = monomial_support(kind, scheme).size();
      v.require(formula == BigInt(support), std::string(to_string(kind)) + " p=(" + join(parts) +
                                                ") support " + std::to_string(support));
      ++checked;
    }
  }
  const std::vector<std::tuple<std::vector<std::size_t>, SchemeLabel, int>> anchors{
      {{2, 2, 2}, SchemeLabel::kUV, 9},      {{2, 2, 2}, SchemeLabel::kMV1, 16},
      {{2, 2, 2}, SchemeLabel::kMV2, 12},    {{2, 2, 2, 2}, SchemeLabel::kUV, 19},
      {{2, 2, 2, 2}, SchemeLabel::kMV1, 64}, {{2, 2, 2, 2}, SchemeLabel::kMV2, 36}};
  for (const auto& [parts, s, want] : anchors) {
    auto got = metrics(s, parts, MemoryMode::kShared).recovery_threshold;
    v.require(got == want, std::string(to_string(s)) + " p=(" + join(parts) + ") gives " +
                               got.str() + ", expected " + std::to_string(want));
  }
  if (v.pass) v.detail = std::to_string(checked) + " support counts and 6 anchors match";
  return v;
}

// 3. Equal-partition overhead identities.
Verdict criterion3() {
  Verdict v;
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t p = 2; p <= 10; ++p) {
      std::vector<std::size_t> parts(m + 1, p);
      Rational rp(1, p);
      auto tag = " m=" + std::to_string(m) + " p=" + std::to_string(p);
      v.require(uv_metrics(parts).delta == rp * rp - rpow(rp, m + 1), "UV" + tag);
      v.require(mv1_metrics(parts, MemoryMode::kShared).delta == rpow(Rational(p), m - 1) - 1,
                "MV1" + tag);
      v.require(mv2_metrics(parts, MemoryMode::kShared).delta == rpow(2 - rp, m - 1) - 1,
                "MV2" + tag);
    }
  }
  if (v.pass) v.detail = "135 exact identities hold";
  return v;
}

// Integer k-th root of n if n is a perfect k-th power.
std::optional<std::uint64_t> exact_root(std::uint64_t n, std::size_t k) {
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::uint64_t pw = 1;
    for (std::size_t t = 0; t < k; ++t) pw *= r;
    if (pw == n) return r;
    if (pw > n) break;
  }
  return std::nullopt;
}

// 4. Storage thresholds, analysis and placement.
Verdict criterion4() {
  Verdict v;
  PrimeField f;
  std::size_t analysis_checks = 0, placement_checks = 0;
  for (const auto& parts : criterion1_cases()) {
    const std::size_t m = parts.size() - 1;
    std::vector<std::size_t> a(m + 1);
    a[0] = parts[0];
    a[m] = parts[m];
    for (std::size_t i = 1; i < m; ++i) a[i] = 2 * parts[i] - 1;
    const auto tag = " p=(" + join(parts) + ")";

    auto s1 = mv1_metrics(parts, MemoryMode::kShared);
    auto s2 = mv2_metrics(parts, MemoryMode::kShared);
    auto pl1 = plan_shared(f, SchemeKind::kMV1, parts, 1, 1);
    auto pl2 = plan_shared(f, SchemeKind::kMV2, parts, 1, 1);
    for (std::size_t i = 0; i < m; ++i) {
      v.require(s1.storage_threshold[i] == Rational(parts[i] * parts[i + 1]), "MV1 shared" + tag);
      v.require(s2.storage_threshold[i] == Rational(a[i] * a[i + 1]), "MV2 shared" + tag);
      v.require(Rational(pl1.storage_threshold[i]) == s1.storage_threshold[i],
                "MV1 shared plan" + tag);
      v.require(Rational(pl2.storage_threshold[i]) == s2.storage_threshold[i],
                "MV2 shared plan" + tag);
      analysis_checks += 2;
      placement_checks += 2;
    }

    for (std::uint64_t n = 1; n <= 8; ++n) {
      for (auto kind : {SchemeKind::kMV1, SchemeKind::kMV2}) {
        const std::size_t count = kind == SchemeKind::kMV1 ? m : m + 1;
        auto root = exact_root(n, count);
        if (!root) continue;  // symmetric s = N^{-1/count} is irrational
        std::vector<Rational> s(count, Rational(1, *root));
        auto mt = metrics(label(kind), parts, MemoryMode::kDedicated, n, s);
        std::optional<StoragePlan> plan;
        try {
          plan = plan_dedicated(f, kind, parts, n, s, 1);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kNonIntegralAssignment) throw;
        }
        for (std::size_t i = 0; i < m; ++i) {
          Rational want = kind == SchemeKind::kMV1
                              ? Rational(n) * s[i] * parts[i] * parts[i + 1]
                              : Rational(n) * s[i] * a[i] * s[i + 1] * a[i + 1];
          v.require(mt.storage_threshold[i] == want, std::string(to_string(kind)) +
                                                         " dedicated N=" + std::to_string(n) + tag);
          ++analysis_checks;
          if (plan) {
            v.require(Rational(plan->storage_threshold[i]) == want,
                      std::string(to_string(kind)) + " dedicated plan N=" + std::to_string(n) +
                          tag);
            ++placement_checks;
          }
        }
      }
    }
  }
  v.require(placement_checks > 0, "no integral dedicated plan was exercised");
  if (v.pass) {
    v.detail = std::to_string(analysis_checks) + " formula checks, " +
               std::to_string(placement_checks) + " placement counts";
  }
  return v;
}

// Parses the CSV written by the analyze command.
struct CsvRow {
  std::string scheme, memory;
  std::size_t m = 0, p = 0;
  std::string n;
  double value = 0.0;
};

std::vector<CsvRow> figure_csv(Figure which, const FigureRanges& r) {
  std::ostringstream os;
  write_figure_csv(os, figure_data(which, r));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    rows.push_back({f[0], f[1], std::stoul(f[2]), std::stoul(f[3]), f[4], std::stod(f[6])});
  }
  return rows;
}

using Curve = std::map<std::size_t, double>;  // x -> value

Curve curve(const std::vector<CsvRow>& rows, const std::string& scheme, const std::string& memory,
            std::size_t m, bool by_n) {
  Curve c;
  for (const auto& r : rows) {
    if (r.scheme == scheme && r.memory == memory && r.m == m) {
      c[by_n ? std::stoul(r.n) : r.p] = r.value;
    }
  }
  return c;
}

bool increasing(const Curve& c, bool strict) {
  double prev = -1e300;
  for (const auto& [x, y] : c) {
    if (strict ? y <= prev : y < prev) return false;
    prev = y;
  }
  return true;
}

bool decreasing(const Curve& c) {
  double prev = 1e300;
  for (const auto& [x, y] : c) {
    if (y >= prev) return false;
    prev = y;
  }
  return true;
}

// 5. Figure data.
Verdict criterion5() {
  Verdict v;
  FigureRanges ranges;  // m in {5, 10}, p in 2..50, N in 1..50, fixed N = p = 5
  auto fig2 = figure_csv(Figure::kComputationVsP, ranges);
  auto fig3 = figure_csv(Figure::kStorageVsP, ranges);
  auto fig4 = figure_csv(Figure::kStorageVsN, ranges);
  auto table = figure_csv(Figure::kTable, ranges);
  v.require(!table.empty(), "table 1 is empty");
  std::ostringstream notes;

  for (std::size_t m : {5u, 10u}) {
    const auto ms = " m=" + std::to_string(m);
    auto uv = curve(fig2, "UV", "na", m, false);
    auto mv1 = curve(fig2, "MV1", "na", m, false);
    auto mv2 = curve(fig2, "MV2", "na", m, false);
    v.require(uv.size() == 49 && mv1.size() == 49 && mv2.size() == 49, "fig2 rows missing" + ms);
    // UV ~ p^-2, independent of m
    v.require(decreasing(uv), "fig2 UV not decreasing" + ms);
    const double scaled = uv[50] / 100.0 * 2500.0;
    v.require(std::abs(scaled - 1.0) < 0.05, "fig2 UV delta * p^2 not ~1" + ms);
    // MV1 grows with p
    v.require(increasing(mv1, true), "fig2 MV1 not increasing" + ms);
    // MV2 rises towards 2^{m-1} - 1 and flattens
    const double limit = 100.0 * (std::pow(2.0, static_cast<double>(m - 1)) - 1.0);
    v.require(increasing(mv2, true), "fig2 MV2 not increasing" + ms);
    v.require(mv2[50] < limit, "fig2 MV2 exceeds its limit" + ms);
    const double slope = (mv2[50] - mv2[49]) / mv2[50];
    v.require(slope < 0.01, "fig2 MV2 not flat at p=50" + ms);
    notes << " MV2 m=" << m << " at p=50 is " << 100.0 * (1.0 - mv2[50] / limit)
          << "% below limit;";

    // Figure 3, N = 5: MV curves converge to constants below UV.
    auto uv3 = curve(fig3, "UV", "na", m, false);
    v.require(increasing(uv3, true), "fig3 UV not increasing" + ms);
    struct Expect { const char* scheme; const char* memory; double limit; };
    const double n5 = 5.0;
    const double mm = static_cast<double>(m);
    const std::vector<Expect> limits{
        {"MV1", "shared", 0.0},
        {"MV1", "dedicated", 100.0 * (std::pow(n5, 1.0 - 1.0 / mm) - 1.0)},
        {"MV2", "shared", 300.0},
        {"MV2", "dedicated", 100.0 * (4.0 * std::pow(n5, 1.0 - 2.0 / (mm + 1.0)) - 1.0)}};
    for (const auto& e : limits) {
      auto c = curve(fig3, e.scheme, e.memory, m, false);
      const auto tag = std::string(" fig3 ") + e.scheme + "-" + e.memory + ms;
      v.require(c.size() == 49, "rows missing" + tag);
      v.require(increasing(c, false), "not monotone" + tag);
      const double err = e.limit == 0.0 ? std::abs(c[50]) : std::abs(c[50] - e.limit) / e.limit;
      v.require(err < 0.05, "not within 5% of its limit at p=50" + tag);
      for (const auto& [p, y] : c) v.require(y < uv3[p], "not below UV" + tag);
    }

    // Figure 4, p = 5: dedicated grows with N, every MV curve below UV at N = 50.
    auto uv4 = curve(fig4, "UV", "na", m, true);
    for (const char* s : {"MV1", "MV2"}) {
      for (const char* mem : {"shared", "dedicated"}) {
        auto c = curve(fig4, s, mem, m, true);
        const auto tag = std::string(" fig4 ") + s + "-" + mem + ms;
        v.require(c.size() == 50, "rows missing" + tag);
        v.require(increasing(c, false), "not monotone" + tag);
        v.require(c[50] < uv4[50], "not below UV at N=50" + tag);
      }
    }
  }
  // MV1 grows with m.
  auto mv1_5 = curve(fig2, "MV1", "na", 5, false);
  auto mv1_10 = curve(fig2, "MV1", "na", 10, false);
  for (const auto& [p, y] : mv1_5) v.require(mv1_10[p] > y, "fig2 MV1 not growing with m");
  if (v.pass) v.detail = "monotonicity, limits and orderings hold;" + notes.str();
  return v;
}

// 6. Minimality of the MV2 grid and decodability of random points.
Verdict criterion6() {
  Verdict v;
  PrimeField f;
  auto scheme = PartitionScheme::with_block_side({2, 2, 2}, 2);
  auto chain = random_chain(f, scheme, 2024);
  std::vector<FieldMatrix> mats{chain.matrix(0), chain.matrix(1)};
  const auto oracle = oracle_chain_multiply(f, mats);
  auto grid = make_grid(f, SchemeKind::kMV2, scheme, 7);
  auto points = grid.points();
  auto evals = evaluate_on_grid(chain, SchemeKind::kMV2, grid.axes);
  v.require(points.size() == 12, "minimal grid is not 12 points");
  {
    auto full = decode_general(f, points, evals, SchemeKind::kMV2, scheme);
    v.require(assemble_result(full) == oracle, "full minimal grid does not decode");
  }
  std::size_t broken = 0;
  for (std::size_t drop = 0; drop < points.size(); ++drop) {
    auto p = points;
    auto e = evals;
    p.erase(p.begin() + static_cast<std::ptrdiff_t>(drop));
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
    try {
      auto r = decode_general(f, p, e, SchemeKind::kMV2, scheme);
      if (assemble_result(r) != oracle) ++broken;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kSingularSystem) ++broken;
      else throw;
    }
  }
  v.require(broken == points.size(),
            "only " + std::to_string(broken) + " of 12 deletions broke decoding");

  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    auto c = random_chain(f, scheme, seed + 100);
    std::vector<FieldMatrix> cm{c.matrix(0), c.matrix(1)};
    std::vector<EvalPoint> pts;
    std::vector<FieldMatrix> ev;
    for (int k = 0; k < 12; ++k) {
      EvalPoint p;
      for (int a = 0; a < 3; ++a) p.coords.push_back(random_element(f, rng));
      ev.push_back(worker_compute(f, encode_task(c, SchemeKind::kMV2, p)));
      pts.push_back(std::move(p));
    }
    try {
      auto r = decode_general(f, pts, ev, SchemeKind::kMV2, scheme);
      if (assemble_result(r) == oracle_chain_multiply(f, cm)) ++successes;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kSingularSystem) throw;
    }
  }
  v.require(successes >= 19, "random points decoded in only " + std::to_string(successes) + "/20");
  if (v.pass) {
    v.detail = "12/12 deletions break decoding; random points decode " +
               std::to_string(successes) + "/20";
  }
  return v;
}

// 7. Simulator determinism and correctness.
Verdict criterion7() {
  Verdict v;
  PrimeField f;
  std::vector<std::size_t> parts{2, 2, 2};
  auto chain = random_chain(f, PartitionScheme::with_block_side(parts, 2), 77);
  const std::vector<Rational> s1{Rational(1), Rational(1, 2)};
  const std::vector<Rational> s2{Rational(1), Rational(1), Rational(1, 2)};
  std::vector<StoragePlan> plans{plan_shared(f, SchemeKind::kMV1, parts, 4, 1),
                                 plan_shared(f, SchemeKind::kMV2, parts, 4, 1),
                                 plan_dedicated(f, SchemeKind::kMV1, parts, 4, s1, 1),
                                 plan_dedicated(f, SchemeKind::kMV2, parts, 4, s2, 1)};
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
  auto model = LatencyModel::shifted_exponential(1.0, 1.0);
  auto render = [&](const SweepResult& r) {
    std::ostringstream os;
    write_runs_csv(os, r.runs);
    write_summary_csv(os, r.summary);
    return os.str();
  };
  auto first = sweep(plans, chain, model, seeds, true);
  auto second = sweep(plans, chain, model, seeds, true);
  v.require(render(first) == render(second), "CSV output differs between identical runs");

  std::size_t decoded = 0;
  for (const auto& run : first.runs) {
    if (!run.outcome) continue;
    ++decoded;
    v.require(run.outcome->matches_oracle, "a simulated decode differs from the oracle");
    if (run.memory == MemoryMode::kShared) {
      v.require(run.outcome->extra_tasks_for_decodability == 0, "shared plan needed extra tasks");
    }
  }
  v.require(decoded == first.runs.size(), "some runs never decoded");

  // Deterministic latency: ceil(R_th / N) rounds of t.
  for (auto kind : {SchemeKind::kMV1, SchemeKind::kMV2}) {
    for (std::size_t n : {1u, 3u, 4u, 7u, 16u}) {
      auto plan = plan_shared(f, kind, parts, n, 1);
      const double t = 0.75;
      auto out = simulate(plan, chain, LatencyModel::deterministic(t), 1);
      const auto rounds = (plan.recovery_threshold + n - 1) / n;
      v.require(out.recovery_time == t * static_cast<double>(rounds),
                std::string(to_string(kind)) + " deterministic N=" + std::to_string(n));
      v.require(out.tasks_used == plan.recovery_threshold, "deterministic run used extra tasks");
    }
  }
  if (v.pass) {
    v.detail = "byte-identical CSVs; " + std::to_string(decoded) +
               " simulated decodes match the oracle; queue arithmetic exact";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"end-to-end exactness", criterion1},
      {"recovery thresholds", criterion2},
      {"overhead identities", criterion3},
      {"storage thresholds", criterion4},
      {"figure data", criterion5},
      {"minimality and decodability", criterion6},
      {"simulator determinism and correctness", criterion7}};
  bool all = true;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::printf("[%s] criterion %d (%s): %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", index, name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
