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

#include "mvcodes/encoding.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "mvcodes/error.hpp"

namespace mvc {

const char* to_string(SchemeKind kind) noexcept {
  return kind == SchemeKind::kMV1 ? "mv1" : "mv2";
}

SchemeKind parse_scheme_kind(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t == "mv1") return SchemeKind::kMV1;
  if (t == "mv2") return SchemeKind::kMV2;
  fail(ErrorCode::kInvalidArgument, "unknown scheme '" + text + "' (expected mv1 or mv2)");
}

std::size_t variable_count(SchemeKind kind, std::size_t m) noexcept {
  return kind == SchemeKind::kMV1 ? m : m + 1;
}

std::vector<std::size_t> degree_bounds(SchemeKind kind,
                                       const PartitionScheme& scheme) {
  const std::size_t m = scheme.m();
  std::vector<std::size_t> deg;
  if (kind == SchemeKind::kMV1) {
    for (std::size_t i = 0; i < m; ++i) deg.push_back(scheme.part(i) * scheme.part(i + 1) - 1);
  } else {
    deg.push_back(scheme.part(0) - 1);
    for (std::size_t i = 1; i < m; ++i) deg.push_back(2 * scheme.part(i) - 2);
    deg.push_back(scheme.part(m) - 1);
  }
  return deg;
}

FieldMatrix encode_mv1_block(const BlockChain& chain, std::size_t i, Fe x) {
  if (i >= chain.m()) fail(ErrorCode::kIndexOutOfRange, "matrix index out of range");
  const PrimeField& f = chain.field();
  auto blocks = chain.blocks(i);
  // Block k = b p_{i+1} + b' carries exponent k, so Horner runs over the
  // row-major block list back to front.
  FieldMatrix acc = blocks.back();
  for (std::size_t k = blocks.size() - 1; k-- > 0;) {
    acc = scaled(f, x, acc);
    acc = mat_add(f, acc, blocks[k]);
  }
  return acc;
}

FieldMatrix encode_mv2_block(const BlockChain& chain, std::size_t i, Fe xi,
                             Fe xi1) {
  if (i >= chain.m()) fail(ErrorCode::kIndexOutOfRange, "matrix index out of range");
  const PrimeField& f = chain.field();
  const std::size_t rows = chain.scheme().part(i);
  const std::size_t cols = chain.scheme().part(i + 1);
  // Outer Horner in x_i: block row 0 has the top exponent p_i - 1.
  FieldMatrix acc;
  for (std::size_t b = 0; b < rows; ++b) {
    FieldMatrix inner = chain.block(i, b, cols - 1);
    for (std::size_t c = cols - 1; c-- > 0;) {
      inner = scaled(f, xi1, inner);
      inner = mat_add(f, inner, chain.block(i, b, c));
    }
    acc = (b == 0) ? std::move(inner) : mat_add(f, scaled(f, xi, acc), inner);
  }
  return acc;
}

CodedTask encode_task(const BlockChain& chain, SchemeKind kind,
                      const EvalPoint& point) {
  const std::size_t m = chain.m();
  const std::size_t want = variable_count(kind, m);
  if (point.coords.size() != want) {
    fail(ErrorCode::kPointArityMismatch,
         std::string(to_string(kind)) + " with m = " + std::to_string(m) +
             " needs " + std::to_string(want) + " coordinates, got " +
             std::to_string(point.coords.size()));
  }
  CodedTask task{kind, point, {}};
  task.coded_blocks.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    task.coded_blocks.push_back(
        kind == SchemeKind::kMV1
            ? encode_mv1_block(chain, i, point.coords[i])
            : encode_mv2_block(chain, i, point.coords[i], point.coords[i + 1]));
  }
  return task;
}

FieldMatrix worker_compute(const PrimeField& field, const CodedTask& task) {
  if (task.coded_blocks.empty()) fail(ErrorCode::kChainShapeMismatch, "task has no blocks");
  FieldMatrix acc = task.coded_blocks.front();
  for (std::size_t i = 1; i < task.coded_blocks.size(); ++i) {
    if (acc.cols() != task.coded_blocks[i].rows()) {
      fail(ErrorCode::kChainShapeMismatch,
           "coded block " + std::to_string(i) + " does not chain");
    }
    acc = mat_mul(field, acc, task.coded_blocks[i]);
  }
  return acc;
}

std::vector<FieldMatrix> evaluate_on_grid(const BlockChain& chain,
                                          SchemeKind kind,
                                          std::span<const std::vector<Fe>> axes) {
  const std::size_t m = chain.m();
  const std::size_t v = variable_count(kind, m);
  if (axes.size() != v) {
    fail(ErrorCode::kPointArityMismatch, "grid has " + std::to_string(axes.size()) +
                                             " axes, scheme needs " + std::to_string(v));
  }
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  if (total == 0) return {};

  const bool mv1 = kind == SchemeKind::kMV1;
  // coded[i] indexed by j_i (MV1) or j_i * |X_{i+1}| + j_{i+1} (MV2)
  std::vector<std::vector<FieldMatrix>> coded(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (mv1) {
      for (Fe x : axes[i]) coded[i].push_back(encode_mv1_block(chain, i, x));
    } else {
      for (Fe x : axes[i]) {
        for (Fe y : axes[i + 1]) coded[i].push_back(encode_mv2_block(chain, i, x, y));
      }
    }
  }
  auto coded_at = [&](std::size_t i, const std::vector<std::size_t>& j) -> const FieldMatrix& {
    return mv1 ? coded[i][j[i]] : coded[i][j[i] * axes[i + 1].size() + j[i + 1]];
  };

  const PrimeField& f = chain.field();
  std::vector<FieldMatrix> out;
  out.reserve(total);
  std::vector<std::size_t> j(v, 0);
  std::vector<FieldMatrix> prefix(m);
  std::size_t first_stale = 0;  // lowest block whose prefix must be rebuilt
  for (std::size_t n = 0; n < total; ++n) {
    for (std::size_t i = first_stale; i < m; ++i) {
      prefix[i] = (i == 0) ? coded_at(0, j) : mat_mul(f, prefix[i - 1], coded_at(i, j));
    }
    out.push_back(prefix[m - 1]);
    // advance the odometer; c is the lowest axis that changed
    std::size_t c = v;
    while (c-- > 0) {
      if (++j[c] < axes[c].size()) break;
      j[c] = 0;
    }
    if (c == static_cast<std::size_t>(-1)) break;
    first_stale = mv1 ? c : (c == 0 ? 0 : c - 1);
  }
  return out;
}

void write_task(std::ostream& out, const CodedTask& task) {
  out << "mvtask 1\n";
  out << "scheme " << to_string(task.kind) << '\n';
  out << "m " << task.coded_blocks.size() << '\n';
  out << "point";
  for (Fe c : task.point.coords) out << ' ' << c.v;
  out << '\n';
  for (const auto& b : task.coded_blocks) write_matrix(out, b);
}

std::string format_task(const CodedTask& task) {
  std::ostringstream out;
  write_task(out, task);
  return out.str();
}

namespace {

void expect_word(std::istream& in, const std::string& word) {
  std::string tok;
  if (!(in >> tok) || tok != word) {
    fail(ErrorCode::kParse, "coded task: expected '" + word + "', got '" + tok + "'");
  }
}

}  // namespace

CodedTask read_task(const PrimeField& field, std::istream& in) {
  expect_word(in, "mvtask");
  std::string version;
  in >> version;
  if (version != "1") fail(ErrorCode::kParse, "coded task: unsupported version '" + version + "'");
  expect_word(in, "scheme");
  std::string kind_text;
  in >> kind_text;
  CodedTask task;
  try {
    task.kind = parse_scheme_kind(kind_text);
  } catch (const Error& e) {
    fail(ErrorCode::kParse, e.what());
  }
  expect_word(in, "m");
  std::size_t m = 0;
  if (!(in >> m) || m == 0) fail(ErrorCode::kParse, "coded task: bad chain length");
  expect_word(in, "point");
  const std::size_t v = variable_count(task.kind, m);
  for (std::size_t k = 0; k < v; ++k) {
    std::uint64_t c = 0;
    if (!(in >> c)) fail(ErrorCode::kParse, "coded task: truncated point");
    if (c >= field.modulus()) fail(ErrorCode::kParse, "coded task: coordinate outside the field");
    task.point.coords.push_back(Fe{c});
  }
  for (std::size_t i = 0; i < m; ++i) task.coded_blocks.push_back(read_matrix(field, in));
  return task;
}

CodedTask parse_task(const PrimeField& field, const std::string& text) {
  std::istringstream in(text);
  return read_task(field, in);
}

}  // namespace mvc
