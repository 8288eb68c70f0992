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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mvcodes/chain.hpp"

namespace mvc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class SchemeLabel { kUV, kMV1, kMV2 };
enum class MemoryMode { kShared, kDedicated };

const char* to_string(SchemeLabel s) noexcept;
const char* to_string(MemoryMode m) noexcept;
MemoryMode parse_memory_mode(const std::string& text);

// "3", "1/2" or "0.25" (finite decimals only). Throws kInvalidArgument.
Rational parse_fraction(const std::string& text);
std::string format_rational(const Rational& r);

/// Closed-form cost figures of one coding scheme. delta and delta_s are
/// overheads relative to a single server: delta + 1 = R_th / K and
/// delta_s[i] + 1 = S_th[i] / (p_i p_{i+1}).
struct SchemeMetrics {
  SchemeLabel scheme = SchemeLabel::kUV;
  std::optional<MemoryMode> memory;
  BigInt recovery_threshold;
  BigInt partition_level;
  std::vector<Rational> storage_threshold;  // per matrix, may be fractional
  Rational delta;
  std::vector<Rational> delta_s;
};

// R_th = prod_{j=0}^{m} p_j + prod_{j=1}^{m-1} p_j - 1, S_th,i = R_th.
SchemeMetrics uv_metrics(std::span<const std::size_t> parts);

// R_th = prod_i p_i p_{i+1}. Shared: S_th,i = p_i p_{i+1}. Dedicated with N
// workers and fractions s_0..s_{m-1}: S_th,i = N s_i p_i p_{i+1}, feasible iff
// N prod s_i >= 1 (kInfeasiblePlan otherwise).
SchemeMetrics mv1_metrics(std::span<const std::size_t> parts, MemoryMode memory,
                          std::uint64_t workers = 1,
                          std::span<const Rational> fractions = {});

// R_th = p_0 p_m prod_{0<i<m} (2 p_i - 1), with axis sizes a = (p_0,
// 2p_1 - 1, ..., 2p_{m-1} - 1, p_m). Shared: S_th,i = a_i a_{i+1}. Dedicated
// with fractions s_0..s_m: S_th,i = N s_i a_i s_{i+1} a_{i+1}.
SchemeMetrics mv2_metrics(std::span<const std::size_t> parts, MemoryMode memory,
                          std::uint64_t workers = 1,
                          std::span<const Rational> fractions = {});

SchemeMetrics metrics(SchemeLabel scheme, std::span<const std::size_t> parts,
                      MemoryMode memory, std::uint64_t workers = 1,
                      std::span<const Rational> fractions = {});

std::string format_metrics(const SchemeMetrics& metrics);

// Real-valued dedicated storage overheads for fractions that need not be
// rational (the symmetric choice N^{-1/m} or N^{-1/(m+1)}).
std::vector<double> dedicated_storage_overhead(SchemeLabel scheme,
                                               std::span<const std::size_t> parts,
                                               double workers,
                                               std::span<const double> fractions);

enum class Figure { kComputationVsP, kStorageVsP, kStorageVsN, kTable };

struct FigureRanges {
  std::vector<std::size_t> m_values{5, 10};
  std::vector<std::size_t> p_values;   // empty: per-figure default
  std::vector<std::uint64_t> n_values; // empty: per-figure default
  std::uint64_t fixed_workers = 5;     // storage vs p
  std::size_t fixed_parts = 5;         // storage vs N
};

struct CurvePoint {
  SchemeLabel scheme = SchemeLabel::kUV;
  std::optional<MemoryMode> memory;
  std::size_t m = 0;
  std::size_t p = 0;
  std::optional<std::uint64_t> workers;
  std::string metric;  // "delta" or "delta_s"
  double value_percent = 0.0;
};

// Equal partitions p_i = p throughout. delta_s reports the largest per-matrix
// storage overhead. Integrality of per-worker storage is not enforced here.
std::vector<CurvePoint> figure_data(Figure which, const FigureRanges& ranges);

// Header: scheme,memory,m,p,N,metric,value_percent
void write_figure_csv(std::ostream& out, std::span<const CurvePoint> rows);

}  // namespace mvc
