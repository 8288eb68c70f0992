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

#include "mvcodes/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "mvcodes/error.hpp"

namespace mvc {

const char* to_string(SchemeLabel s) noexcept {
  switch (s) {
    case SchemeLabel::kUV: return "UV";
    case SchemeLabel::kMV1: return "MV1";
    case SchemeLabel::kMV2: return "MV2";
  }
  return "?";
}

const char* to_string(MemoryMode m) noexcept {
  return m == MemoryMode::kShared ? "shared" : "dedicated";
}

MemoryMode parse_memory_mode(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "shared" || t == "s") return MemoryMode::kShared;
  if (t == "dedicated" || t == "d") return MemoryMode::kDedicated;
  fail(ErrorCode::kInvalidArgument, "unknown memory mode '" + text + "' (expected shared or dedicated)");
}

Rational parse_fraction(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::kInvalidArgument, "cannot parse fraction '" + text + "'");
  };
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits(num) || !digits(den)) return bad();
    BigInt d(den);
    if (d == 0) return bad();
    return Rational(BigInt(num), d);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits(whole) || !digits(frac)) return bad();
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rational(BigInt(whole) * scale + BigInt(frac), scale);
  }
  if (!digits(text)) return bad();
  return Rational(BigInt(text));
}

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

namespace {

void check_parts(std::span<const std::size_t> parts) {
  if (parts.size() < 3) {
    fail(ErrorCode::kInvalidArgument, "need at least three split counts (m >= 2)");
  }
  for (auto p : parts) {
    if (p == 0) fail(ErrorCode::kInvalidArgument, "split counts must be positive");
  }
}

BigInt product(std::span<const std::size_t> v) {
  BigInt r = 1;
  for (auto x : v) r *= x;
  return r;
}

void finish(SchemeMetrics& out, std::span<const std::size_t> parts) {
  out.partition_level = product(parts);
  out.delta = Rational(out.recovery_threshold, out.partition_level) - 1;
  out.delta_s.clear();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    out.delta_s.push_back(out.storage_threshold[i] /
                              Rational(BigInt(parts[i]) * parts[i + 1]) - 1);
  }
}

void check_dedicated(std::span<const Rational> s, std::size_t want, std::uint64_t workers) {
  if (workers == 0) fail(ErrorCode::kInvalidArgument, "need at least one worker");
  if (s.size() != want) {
    fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(want) +
                                          " storage fractions, got " + std::to_string(s.size()));
  }
  Rational prod = workers;
  for (const auto& x : s) {
    if (x <= 0 || x > 1) {
      fail(ErrorCode::kInvalidArgument, "storage fraction " + format_rational(x) +
                                            " outside (0, 1]");
    }
    prod *= x;
  }
  if (prod < 1) {
    fail(ErrorCode::kInfeasiblePlan,
         "infeasible storage plan: N * prod s_i = " + format_rational(prod) +
             " but recovery needs N * prod s_i >= 1");
  }
}

}  // namespace

SchemeMetrics uv_metrics(std::span<const std::size_t> parts) {
  check_parts(parts);
  SchemeMetrics out;
  out.scheme = SchemeLabel::kUV;
  out.recovery_threshold = product(parts) + product(parts.subspan(1, parts.size() - 2)) - 1;
  out.storage_threshold.assign(parts.size() - 1, Rational(out.recovery_threshold));
  finish(out, parts);
  return out;
}

SchemeMetrics mv1_metrics(std::span<const std::size_t> parts, MemoryMode memory,
                          std::uint64_t workers, std::span<const Rational> fractions) {
  check_parts(parts);
  const std::size_t m = parts.size() - 1;
  SchemeMetrics out;
  out.scheme = SchemeLabel::kMV1;
  out.memory = memory;
  out.recovery_threshold = 1;
  for (std::size_t i = 0; i < m; ++i) out.recovery_threshold *= BigInt(parts[i]) * parts[i + 1];
  if (memory == MemoryMode::kDedicated) check_dedicated(fractions, m, workers);
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = Rational(BigInt(parts[i]) * parts[i + 1]);
    if (memory == MemoryMode::kDedicated) s *= Rational(workers) * fractions[i];
    out.storage_threshold.push_back(s);
  }
  finish(out, parts);
  return out;
}

SchemeMetrics mv2_metrics(std::span<const std::size_t> parts, MemoryMode memory,
                          std::uint64_t workers, std::span<const Rational> fractions) {
  check_parts(parts);
  const std::size_t m = parts.size() - 1;
  SchemeMetrics out;
  out.scheme = SchemeLabel::kMV2;
  out.memory = memory;
  std::vector<BigInt> axis(m + 1);
  axis[0] = parts[0];
  axis[m] = parts[m];
  for (std::size_t i = 1; i < m; ++i) axis[i] = 2 * BigInt(parts[i]) - 1;
  out.recovery_threshold = 1;
  for (const auto& a : axis) out.recovery_threshold *= a;
  if (memory == MemoryMode::kDedicated) check_dedicated(fractions, m + 1, workers);
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = Rational(axis[i] * axis[i + 1]);
    if (memory == MemoryMode::kDedicated) {
      s *= Rational(workers) * fractions[i] * fractions[i + 1];
    }
    out.storage_threshold.push_back(s);
  }
  finish(out, parts);
  return out;
}

SchemeMetrics metrics(SchemeLabel scheme, std::span<const std::size_t> parts,
                      MemoryMode memory, std::uint64_t workers,
                      std::span<const Rational> fractions) {
  switch (scheme) {
    case SchemeLabel::kUV: return uv_metrics(parts);
    case SchemeLabel::kMV1: return mv1_metrics(parts, memory, workers, fractions);
    case SchemeLabel::kMV2: return mv2_metrics(parts, memory, workers, fractions);
  }
  fail(ErrorCode::kInvalidArgument, "unknown scheme");
}

std::string format_metrics(const SchemeMetrics& mt) {
  std::ostringstream out;
  out << "scheme=" << to_string(mt.scheme) << '\n';
  if (mt.memory) out << "memory=" << to_string(*mt.memory) << '\n';
  out << "recovery_threshold=" << mt.recovery_threshold << '\n';
  out << "partition_level=" << mt.partition_level << '\n';
  out << "delta=" << format_rational(mt.delta) << '\n';
  for (std::size_t i = 0; i < mt.storage_threshold.size(); ++i) {
    out << "storage_threshold[" << i << "]=" << format_rational(mt.storage_threshold[i]) << '\n';
  }
  for (std::size_t i = 0; i < mt.delta_s.size(); ++i) {
    out << "delta_s[" << i << "]=" << format_rational(mt.delta_s[i]) << '\n';
  }
  return out.str();
}

std::vector<double> dedicated_storage_overhead(SchemeLabel scheme,
                                               std::span<const std::size_t> parts,
                                               double workers,
                                               std::span<const double> fractions) {
  check_parts(parts);
  const std::size_t m = parts.size() - 1;
  std::vector<double> out;
  if (scheme == SchemeLabel::kUV) {
    const auto uv = uv_metrics(parts);
    for (const auto& d : uv.delta_s) out.push_back(d.convert_to<double>());
    return out;
  }
  if (scheme == SchemeLabel::kMV1) {
    if (fractions.size() != m) fail(ErrorCode::kInvalidArgument, "MV1 needs m fractions");
    for (std::size_t i = 0; i < m; ++i) out.push_back(workers * fractions[i] - 1.0);
    return out;
  }
  if (fractions.size() != m + 1) fail(ErrorCode::kInvalidArgument, "MV2 needs m + 1 fractions");
  std::vector<double> axis(m + 1);
  axis[0] = static_cast<double>(parts[0]);
  axis[m] = static_cast<double>(parts[m]);
  for (std::size_t i = 1; i < m; ++i) axis[i] = 2.0 * static_cast<double>(parts[i]) - 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double stored = workers * fractions[i] * axis[i] * fractions[i + 1] * axis[i + 1];
    out.push_back(stored / (static_cast<double>(parts[i]) * static_cast<double>(parts[i + 1])) - 1.0);
  }
  return out;
}

namespace {

double max_of(const std::vector<Rational>& v) {
  return std::max_element(v.begin(), v.end())->convert_to<double>();
}

double symmetric_dedicated(SchemeLabel scheme, std::span<const std::size_t> parts,
                           std::uint64_t workers) {
  const std::size_t m = parts.size() - 1;
  const std::size_t count = scheme == SchemeLabel::kMV1 ? m : m + 1;
  const double n = static_cast<double>(workers);
  const std::vector<double> s(count, std::pow(n, -1.0 / static_cast<double>(count)));
  const auto d = dedicated_storage_overhead(scheme, parts, n, s);
  return *std::max_element(d.begin(), d.end());
}

std::vector<std::size_t> p_range(const FigureRanges& r, std::vector<std::size_t> fallback) {
  return r.p_values.empty() ? fallback : r.p_values;
}

std::vector<std::size_t> iota_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

// delta_s rows for one scheme/memory pair at a given (m, p, N)
CurvePoint storage_point(SchemeLabel scheme, std::optional<MemoryMode> memory,
                         std::size_t m, std::size_t p, std::optional<std::uint64_t> workers) {
  const std::vector<std::size_t> parts(m + 1, p);
  CurvePoint pt{scheme, memory, m, p, workers, "delta_s", 0.0};
  double value = 0.0;
  if (scheme == SchemeLabel::kUV) {
    value = max_of(uv_metrics(parts).delta_s);
  } else if (memory == MemoryMode::kShared) {
    value = max_of(metrics(scheme, parts, MemoryMode::kShared).delta_s);
  } else {
    value = symmetric_dedicated(scheme, parts, *workers);
  }
  pt.value_percent = 100.0 * value;
  return pt;
}

}  // namespace

std::vector<CurvePoint> figure_data(Figure which, const FigureRanges& ranges) {
  std::vector<CurvePoint> rows;
  constexpr SchemeLabel kSchemes[] = {SchemeLabel::kUV, SchemeLabel::kMV1, SchemeLabel::kMV2};
  constexpr MemoryMode kModes[] = {MemoryMode::kShared, MemoryMode::kDedicated};
  std::vector<std::size_t> ms = ranges.m_values;
  std::sort(ms.begin(), ms.end());
  if (ms.empty()) fail(ErrorCode::kInvalidArgument, "no chain lengths requested");
  for (auto m : ms) {
    if (m < 2) fail(ErrorCode::kInvalidArgument, "chain length must be at least 2");
  }

  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  switch (which) {
    case Figure::kComputationVsP: {
      const auto ps = sorted(p_range(ranges, iota_range(2, 50)));
      for (auto s : kSchemes) {
        for (auto m : ms) {
          for (auto p : ps) {
            const std::vector<std::size_t> parts(m + 1, p);
            const auto mt = metrics(s, parts, MemoryMode::kShared);
            rows.push_back({s, std::nullopt, m, p, std::nullopt, "delta",
                            100.0 * mt.delta.convert_to<double>()});
          }
        }
      }
      break;
    }
    case Figure::kStorageVsP:
    case Figure::kStorageVsN: {
      const bool vs_p = which == Figure::kStorageVsP;
      const auto ps = vs_p ? sorted(p_range(ranges, iota_range(2, 50)))
                           : std::vector<std::size_t>{ranges.fixed_parts};
      std::vector<std::uint64_t> ns;
      if (vs_p) {
        ns = {ranges.fixed_workers};
      } else if (ranges.n_values.empty()) {
        for (std::uint64_t n = 1; n <= 50; ++n) ns.push_back(n);
      } else {
        ns = sorted(ranges.n_values);
      }
      for (auto n : ns) {
        if (n == 0) fail(ErrorCode::kInvalidArgument, "worker count must be positive");
      }
      for (auto s : kSchemes) {
        if (s == SchemeLabel::kUV) {
          for (auto m : ms)
            for (auto p : ps)
              for (auto n : ns) rows.push_back(storage_point(s, std::nullopt, m, p, n));
          continue;
        }
        for (auto mode : kModes) {
          for (auto m : ms)
            for (auto p : ps)
              for (auto n : ns) rows.push_back(storage_point(s, mode, m, p, n));
        }
      }
      break;
    }
    case Figure::kTable: {
      const auto ps = sorted(p_range(ranges, {2, 5, 10, 50}));
      const auto ns = ranges.n_values.empty() ? std::vector<std::uint64_t>{5, 50}
                                              : sorted(ranges.n_values);
      for (auto s : kSchemes) {
        for (auto m : ms) {
          for (auto p : ps) {
            const std::vector<std::size_t> parts(m + 1, p);
            rows.push_back({s, std::nullopt, m, p, std::nullopt, "delta",
                            100.0 * metrics(s, parts, MemoryMode::kShared).delta.convert_to<double>()});
          }
        }
        for (auto mode : kModes) {
          for (auto m : ms) {
            for (auto p : ps) {
              if (mode == MemoryMode::kShared) {
                auto pt = storage_point(s, mode, m, p, std::nullopt);
                rows.push_back(pt);
              } else {
                for (auto n : ns) {
                  // UV storage does not depend on the memory model
                  auto pt = s == SchemeLabel::kUV ? storage_point(s, std::nullopt, m, p, n)
                                                  : storage_point(s, mode, m, p, n);
                  pt.memory = mode;
                  rows.push_back(pt);
                }
              }
            }
          }
        }
      }
      break;
    }
  }
  return rows;
}

void write_figure_csv(std::ostream& out, std::span<const CurvePoint> rows) {
  out << "scheme,memory,m,p,N,metric,value_percent\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g", r.value_percent);
    out << to_string(r.scheme) << ',' << (r.memory ? to_string(*r.memory) : "na") << ','
        << r.m << ',' << r.p << ',';
    if (r.workers) {
      out << *r.workers;
    } else {
      out << "na";
    }
    out << ',' << r.metric << ',' << buf << '\n';
  }
}

}  // namespace mvc
