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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mvcodes/chain.hpp"
#include "mvcodes/field.hpp"

namespace mvc {

// MV1 gives every matrix its own variable x_i (m variables). MV2 lets
// adjacent matrices share one, so matrix i uses (x_i, x_{i+1}) and there are
// m + 1 variables.
enum class SchemeKind { kMV1, kMV2 };

const char* to_string(SchemeKind kind) noexcept;
// Accepts "mv1" / "mv2" (case-insensitive). Throws kInvalidArgument.
SchemeKind parse_scheme_kind(const std::string& text);

std::size_t variable_count(SchemeKind kind, std::size_t m) noexcept;

// Per-variable degree of the product polynomial:
//   MV1: p_i p_{i+1} - 1
//   MV2: p_0 - 1, 2 p_i - 2 (0 < i < m), p_m - 1
std::vector<std::size_t> degree_bounds(SchemeKind kind,
                                       const PartitionScheme& scheme);

struct EvalPoint {
  std::vector<Fe> coords;

  friend auto operator<=>(const EvalPoint&, const EvalPoint&) = default;
};

struct CodedTask {
  SchemeKind kind = SchemeKind::kMV1;
  EvalPoint point;
  std::vector<FieldMatrix> coded_blocks;
};

// sum_{b, b'} M_i^{(b, b')} x^{p_{i+1} b + b'}
FieldMatrix encode_mv1_block(const BlockChain& chain, std::size_t i, Fe x);
// sum_{b, b'} M_i^{(b, b')} x_i^{p_i - 1 - b} x_{i+1}^{b'}
FieldMatrix encode_mv2_block(const BlockChain& chain, std::size_t i, Fe xi,
                             Fe xi1);

CodedTask encode_task(const BlockChain& chain, SchemeKind kind,
                      const EvalPoint& point);

// Product of the task's coded blocks, the work one worker does per subtask.
FieldMatrix worker_compute(const PrimeField& field, const CodedTask& task);

/// Worker outputs for every point of a Cartesian grid, in row-major order
/// (last axis fastest). Coded blocks are encoded once per axis coordinate and
/// partial chain products are reused across neighbouring points, but each
/// output equals worker_compute(encode_task(chain, kind, point)).
std::vector<FieldMatrix> evaluate_on_grid(
    const BlockChain& chain, SchemeKind kind,
    std::span<const std::vector<Fe>> axes);

// Coded-task text format:
//   mvtask 1
//   scheme <mv1|mv2>
//   m <m>
//   point <c_0> ... <c_{v-1}>
// followed by m matrices in the fixture format.
void write_task(std::ostream& out, const CodedTask& task);
std::string format_task(const CodedTask& task);
CodedTask read_task(const PrimeField& field, std::istream& in);
CodedTask parse_task(const PrimeField& field, const std::string& text);

}  // namespace mvc
