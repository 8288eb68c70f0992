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

#include "mvcodes/field.hpp"

namespace mvc {

/// Split counts (p_0..p_m) together with the matrix dimensions (r_0..r_m).
/// Matrix i is r_i x r_{i+1} and is cut into p_i block rows and p_{i+1}
/// block columns.
class PartitionScheme {
 public:
  // Throws kInvalidArgument (m < 2, zero entries, size mismatch) or
  // kIndivisibleDimension (p_i does not divide r_i).
  PartitionScheme(std::vector<std::size_t> dims, std::vector<std::size_t> parts);

  // Square blocks of the given side: r_i = side * p_i.
  static PartitionScheme with_block_side(std::vector<std::size_t> parts,
                                         std::size_t side);

  std::size_t m() const noexcept { return parts_.size() - 1; }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::span<const std::size_t> parts() const noexcept { return parts_; }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  std::size_t part(std::size_t i) const { return parts_.at(i); }
  std::size_t block_dim(std::size_t i) const { return dims_.at(i) / parts_.at(i); }

  // K = prod p_i
  std::uint64_t partition_level() const noexcept;

  friend bool operator==(const PartitionScheme&, const PartitionScheme&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> parts_;
};

/// The m input matrices cut into blocks. blocks(i) is row-major over
/// (b_i, b_{i+1}): entry b_i * p_{i+1} + b_{i+1}.
class BlockChain {
 public:
  BlockChain(PrimeField field, PartitionScheme scheme,
             std::vector<std::vector<FieldMatrix>> blocks);

  const PrimeField& field() const noexcept { return field_; }
  const PartitionScheme& scheme() const noexcept { return scheme_; }
  std::size_t m() const noexcept { return scheme_.m(); }

  std::span<const FieldMatrix> blocks(std::size_t i) const { return blocks_.at(i); }
  const FieldMatrix& block(std::size_t i, std::size_t row, std::size_t col) const;

  // Reassembles matrix i from its tiles.
  FieldMatrix matrix(std::size_t i) const;

 private:
  PrimeField field_;
  PartitionScheme scheme_;
  std::vector<std::vector<FieldMatrix>> blocks_;
};

/// The p_0 x p_m grid of result blocks, row-major over (n_0, n_m).
struct ChainResult {
  PartitionScheme scheme;
  std::vector<std::optional<FieldMatrix>> blocks;

  explicit ChainResult(PartitionScheme s)
      : scheme(std::move(s)), blocks(scheme.part(0) * scheme.part(scheme.m())) {}

  std::optional<FieldMatrix>& at(std::size_t n0, std::size_t nm) {
    return blocks.at(n0 * scheme.part(scheme.m()) + nm);
  }
  const std::optional<FieldMatrix>& at(std::size_t n0, std::size_t nm) const {
    return blocks.at(n0 * scheme.part(scheme.m()) + nm);
  }
};

BlockChain partition(const PrimeField& field,
                     std::span<const FieldMatrix> matrices,
                     std::span<const std::size_t> parts);

// M_0^{n_0,n_1} M_1^{n_1,n_2} ... M_{m-1}^{n_{m-1},n_m}; indices holds
// (n_0, ..., n_m).
FieldMatrix block_chain_product(const BlockChain& chain,
                                std::span<const std::size_t> indices);

// Plain left-to-right product of the whole matrices.
FieldMatrix oracle_chain_multiply(const PrimeField& field,
                                  std::span<const FieldMatrix> matrices);

FieldMatrix assemble_result(const ChainResult& result);

// Result blocks straight from the block decomposition: block (n_0, n_m) is
// the sum over the middle indices of block_chain_product.
ChainResult blockwise_product(const BlockChain& chain);

FieldMatrix random_matrix(const PrimeField& field, std::size_t rows,
                          std::size_t cols, std::mt19937_64& rng);
Fe random_element(const PrimeField& field, std::mt19937_64& rng);

BlockChain random_chain(const PrimeField& field, const PartitionScheme& scheme,
                        std::uint64_t seed);

// Text fixture format: "rows cols" then rows*cols integers, row-major.
// Values are reduced into the field on read; anything else is kParse.
FieldMatrix read_matrix(const PrimeField& field, std::istream& in);
FieldMatrix parse_matrix(const PrimeField& field, const std::string& text);
void write_matrix(std::ostream& out, const FieldMatrix& m);
std::string format_matrix(const FieldMatrix& m);

}  // namespace mvc
