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

#include "mvcodes/chain.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "mvcodes/error.hpp"

namespace mvc {

PartitionScheme::PartitionScheme(std::vector<std::size_t> dims,
                                 std::vector<std::size_t> parts)
    : dims_(std::move(dims)), parts_(std::move(parts)) {
  if (parts_.size() < 3) {
    fail(ErrorCode::kInvalidArgument,
         "partition scheme needs m >= 2, i.e. at least 3 split counts");
  }
  if (dims_.size() != parts_.size()) {
    fail(ErrorCode::kInvalidArgument,
         "got " + std::to_string(dims_.size()) + " dimensions for " +
             std::to_string(parts_.size()) + " split counts");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0 || dims_[i] == 0) {
      fail(ErrorCode::kInvalidArgument, "dimensions and split counts must be positive");
    }
    if (dims_[i] % parts_[i] != 0) {
      fail(ErrorCode::kIndivisibleDimension,
           "p_" + std::to_string(i) + " = " + std::to_string(parts_[i]) +
               " does not divide r_" + std::to_string(i) + " = " +
               std::to_string(dims_[i]));
    }
  }
}

PartitionScheme PartitionScheme::with_block_side(std::vector<std::size_t> parts,
                                                 std::size_t side) {
  std::vector<std::size_t> dims(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) dims[i] = parts[i] * side;
  return PartitionScheme(std::move(dims), std::move(parts));
}

std::uint64_t PartitionScheme::partition_level() const noexcept {
  std::uint64_t k = 1;
  for (auto p : parts_) k *= p;
  return k;
}

BlockChain::BlockChain(PrimeField field, PartitionScheme scheme,
                       std::vector<std::vector<FieldMatrix>> blocks)
    : field_(field), scheme_(std::move(scheme)), blocks_(std::move(blocks)) {
  if (blocks_.size() != scheme_.m()) {
    fail(ErrorCode::kChainShapeMismatch, "block chain has wrong number of matrices");
  }
  for (std::size_t i = 0; i < scheme_.m(); ++i) {
    const std::size_t want = scheme_.part(i) * scheme_.part(i + 1);
    if (blocks_[i].size() != want) {
      fail(ErrorCode::kChainShapeMismatch,
           "matrix " + std::to_string(i) + " has " +
               std::to_string(blocks_[i].size()) + " blocks, expected " +
               std::to_string(want));
    }
    for (const auto& b : blocks_[i]) {
      if (b.rows() != scheme_.block_dim(i) || b.cols() != scheme_.block_dim(i + 1)) {
        fail(ErrorCode::kChainShapeMismatch,
             "block of matrix " + std::to_string(i) + " has wrong shape");
      }
    }
  }
}

const FieldMatrix& BlockChain::block(std::size_t i, std::size_t row,
                                     std::size_t col) const {
  if (i >= m() || row >= scheme_.part(i) || col >= scheme_.part(i + 1)) {
    fail(ErrorCode::kIndexOutOfRange, "block index out of range");
  }
  return blocks_[i][row * scheme_.part(i + 1) + col];
}

FieldMatrix BlockChain::matrix(std::size_t i) const {
  if (i >= m()) fail(ErrorCode::kIndexOutOfRange, "matrix index out of range");
  const std::size_t br = scheme_.block_dim(i);
  const std::size_t bc = scheme_.block_dim(i + 1);
  FieldMatrix out(scheme_.dim(i), scheme_.dim(i + 1));
  for (std::size_t a = 0; a < scheme_.part(i); ++a) {
    for (std::size_t b = 0; b < scheme_.part(i + 1); ++b) {
      const FieldMatrix& blk = block(i, a, b);
      for (std::size_t r = 0; r < br; ++r) {
        for (std::size_t c = 0; c < bc; ++c) out(a * br + r, b * bc + c) = blk(r, c);
      }
    }
  }
  return out;
}

BlockChain partition(const PrimeField& field,
                     std::span<const FieldMatrix> matrices,
                     std::span<const std::size_t> parts) {
  const std::size_t m = matrices.size();
  if (parts.size() != m + 1) {
    fail(ErrorCode::kInvalidArgument,
         std::to_string(m) + " matrices need " + std::to_string(m + 1) +
             " split counts, got " + std::to_string(parts.size()));
  }
  if (m == 0) fail(ErrorCode::kInvalidArgument, "empty chain");
  std::vector<std::size_t> dims(m + 1);
  dims[0] = matrices[0].rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (matrices[i].rows() != dims[i]) {
      fail(ErrorCode::kChainShapeMismatch,
           "matrix " + std::to_string(i) + " has " +
               std::to_string(matrices[i].rows()) + " rows, previous has " +
               std::to_string(dims[i]) + " columns");
    }
    dims[i + 1] = matrices[i].cols();
  }
  PartitionScheme scheme(dims, {parts.begin(), parts.end()});

  std::vector<std::vector<FieldMatrix>> blocks(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t br = scheme.block_dim(i);
    const std::size_t bc = scheme.block_dim(i + 1);
    for (std::size_t a = 0; a < scheme.part(i); ++a) {
      for (std::size_t b = 0; b < scheme.part(i + 1); ++b) {
        FieldMatrix blk(br, bc);
        for (std::size_t r = 0; r < br; ++r) {
          for (std::size_t c = 0; c < bc; ++c) blk(r, c) = matrices[i](a * br + r, b * bc + c);
        }
        blocks[i].push_back(std::move(blk));
      }
    }
  }
  return BlockChain(field, std::move(scheme), std::move(blocks));
}

FieldMatrix block_chain_product(const BlockChain& chain,
                                std::span<const std::size_t> indices) {
  const std::size_t m = chain.m();
  if (indices.size() != m + 1) {
    fail(ErrorCode::kIndexOutOfRange, "block chain product needs m + 1 indices");
  }
  FieldMatrix acc = chain.block(0, indices[0], indices[1]);
  for (std::size_t i = 1; i < m; ++i) {
    acc = mat_mul(chain.field(), acc, chain.block(i, indices[i], indices[i + 1]));
  }
  return acc;
}

FieldMatrix oracle_chain_multiply(const PrimeField& field,
                                  std::span<const FieldMatrix> matrices) {
  if (matrices.empty()) fail(ErrorCode::kInvalidArgument, "empty chain");
  FieldMatrix acc = matrices[0];
  for (std::size_t i = 1; i < matrices.size(); ++i) {
    if (acc.cols() != matrices[i].rows()) {
      fail(ErrorCode::kChainShapeMismatch,
           "matrix " + std::to_string(i) + " does not chain with its predecessor");
    }
    acc = mat_mul(field, acc, matrices[i]);
  }
  return acc;
}

FieldMatrix assemble_result(const ChainResult& result) {
  const auto& s = result.scheme;
  const std::size_t m = s.m();
  const std::size_t br = s.block_dim(0);
  const std::size_t bc = s.block_dim(m);
  FieldMatrix out(s.dim(0), s.dim(m));
  for (std::size_t a = 0; a < s.part(0); ++a) {
    for (std::size_t b = 0; b < s.part(m); ++b) {
      const auto& blk = result.at(a, b);
      if (!blk) {
        fail(ErrorCode::kMissingBlock, "result block (" + std::to_string(a) +
                                           "," + std::to_string(b) + ") missing");
      }
      if (blk->rows() != br || blk->cols() != bc) {
        fail(ErrorCode::kShapeMismatch, "result block has wrong shape");
      }
      for (std::size_t r = 0; r < br; ++r) {
        for (std::size_t c = 0; c < bc; ++c) out(a * br + r, b * bc + c) = (*blk)(r, c);
      }
    }
  }
  return out;
}

ChainResult blockwise_product(const BlockChain& chain) {
  const auto& s = chain.scheme();
  const std::size_t m = s.m();
  ChainResult result(s);
  std::vector<std::size_t> idx(m + 1, 0);
  for (std::size_t n0 = 0; n0 < s.part(0); ++n0) {
    for (std::size_t nm = 0; nm < s.part(m); ++nm) {
      FieldMatrix sum(s.block_dim(0), s.block_dim(m));
      idx.assign(m + 1, 0);
      idx[0] = n0;
      idx[m] = nm;
      // odometer over n_1..n_{m-1}
      while (true) {
        sum = mat_add(chain.field(), sum, block_chain_product(chain, idx));
        std::size_t k = 1;
        while (k < m && ++idx[k] == s.part(k)) idx[k++] = 0;
        if (k == m) break;
      }
      result.at(n0, nm) = std::move(sum);
    }
  }
  return result;
}

Fe random_element(const PrimeField& field, std::mt19937_64& rng) {
  // modulus <= 2^64 - 59, so the bias of a plain reduction is negligible
  return field.from_uint(rng());
}

FieldMatrix random_matrix(const PrimeField& field, std::size_t rows,
                          std::size_t cols, std::mt19937_64& rng) {
  FieldMatrix out(rows, cols);
  for (auto& e : out.entries()) e = random_element(field, rng);
  return out;
}

BlockChain random_chain(const PrimeField& field, const PartitionScheme& scheme,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FieldMatrix> mats;
  for (std::size_t i = 0; i < scheme.m(); ++i) {
    mats.push_back(random_matrix(field, scheme.dim(i), scheme.dim(i + 1), rng));
  }
  return partition(field, mats, scheme.parts());
}

namespace {

Fe parse_entry(const PrimeField& field, const std::string& tok) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '-') {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last) fail(ErrorCode::kParse, "bad matrix entry '" + tok + "'");
    return field.from_int(v);
  }
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last) fail(ErrorCode::kParse, "bad matrix entry '" + tok + "'");
  return field.from_uint(v);
}

std::size_t parse_dim(const std::string& tok) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail(ErrorCode::kParse, "bad matrix dimension '" + tok + "'");
  }
  return v;
}

}  // namespace

FieldMatrix read_matrix(const PrimeField& field, std::istream& in) {
  std::string tok;
  if (!(in >> tok)) fail(ErrorCode::kParse, "missing matrix header");
  const std::size_t rows = parse_dim(tok);
  if (!(in >> tok)) fail(ErrorCode::kParse, "missing column count");
  const std::size_t cols = parse_dim(tok);
  std::vector<Fe> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (!(in >> tok)) {
      fail(ErrorCode::kParse, "matrix ended after " + std::to_string(i) + " of " +
                                  std::to_string(rows * cols) + " entries");
    }
    entries.push_back(parse_entry(field, tok));
  }
  return FieldMatrix(rows, cols, std::move(entries));
}

FieldMatrix parse_matrix(const PrimeField& field, const std::string& text) {
  std::istringstream in(text);
  FieldMatrix m = read_matrix(field, in);
  std::string extra;
  if (in >> extra) fail(ErrorCode::kParse, "trailing data after matrix: '" + extra + "'");
  return m;
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c).v;
    }
    out << '\n';
  }
}

std::string format_matrix(const FieldMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace mvc
