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

#include <random>
#include <sstream>
#include <vector>

#include "mvcodes/chain.hpp"
#include "test_util.hpp"

namespace mvc {
namespace {

using testing::fixture_matrix;
using testing::kMersenne31;
using testing::schoolbook;

TEST(PartitionSchemeTest, Validation) {
  EXPECT_MVC_ERROR(PartitionScheme({4, 4}, {2, 2}), ErrorCode::kInvalidArgument);
  EXPECT_MVC_ERROR(PartitionScheme({4, 4, 4}, {2, 0, 2}), ErrorCode::kInvalidArgument);
  EXPECT_MVC_ERROR(PartitionScheme({4, 4, 4}, {2, 2}), ErrorCode::kInvalidArgument);
  EXPECT_MVC_ERROR(PartitionScheme({4, 5, 4}, {2, 2, 2}), ErrorCode::kIndivisibleDimension);
  PartitionScheme s({4, 6, 2}, {2, 3, 1});
  EXPECT_EQ(s.m(), 2u);
  EXPECT_EQ(s.block_dim(1), 2u);
  EXPECT_EQ(s.partition_level(), 6u);
  EXPECT_EQ(PartitionScheme::with_block_side({1, 2, 3}, 2).dim(2), 6u);
}

TEST(ChainTest, PartitionThenReassemble) {
  PrimeField f;
  std::mt19937_64 rng(3);
  std::vector<std::size_t> dims{4, 6, 2, 6};
  std::vector<FieldMatrix> mats;
  for (std::size_t i = 0; i < 3; ++i) mats.push_back(random_matrix(f, dims[i], dims[i + 1], rng));
  std::vector<std::size_t> parts{2, 3, 1, 2};
  auto chain = partition(f, mats, parts);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(chain.matrix(i), mats[i]);
  // Block (b, b') of matrix 0 covers rows 2b.. and columns 2b'..
  EXPECT_EQ(chain.block(0, 1, 2)(1, 1), mats[0](3, 5));
  EXPECT_MVC_ERROR(chain.block(0, 2, 0), ErrorCode::kIndexOutOfRange);
}

TEST(ChainTest, PartitionRejectsBadShapes) {
  PrimeField f;
  std::vector<FieldMatrix> mats{FieldMatrix(4, 4), FieldMatrix(3, 4)};
  std::vector<std::size_t> parts{2, 2, 2};
  EXPECT_MVC_ERROR(partition(f, mats, parts), ErrorCode::kChainShapeMismatch);
  std::vector<FieldMatrix> ok{FieldMatrix(4, 4), FieldMatrix(4, 4)};
  std::vector<std::size_t> bad{2, 3, 2};
  EXPECT_MVC_ERROR(partition(f, ok, bad), ErrorCode::kIndivisibleDimension);
  std::vector<std::size_t> short_parts{2, 2};
  EXPECT_MVC_ERROR(partition(f, ok, short_parts), ErrorCode::kInvalidArgument);
}

TEST(ChainTest, OracleMatchesFrozenReference) {
  PrimeField f;
  std::vector<FieldMatrix> mats;
  for (std::size_t k = 0; k < 3; ++k) mats.push_back(fixture_matrix(k, 4, 4));
  FieldMatrix expected(4, 4, {Fe{337176}, Fe{350844}, Fe{364512}, Fe{378180}, Fe{727020},
                              Fe{756480}, Fe{785940}, Fe{815400}, Fe{1116864}, Fe{1162116},
                              Fe{1207368}, Fe{1252620}, Fe{1506708}, Fe{1567752},
                              Fe{1628796}, Fe{1689840}});
  EXPECT_EQ(oracle_chain_multiply(f, mats), expected);
}

TEST(ChainTest, OracleIsAssociative) {
  PrimeField f;
  std::mt19937_64 rng(9);
  std::vector<std::size_t> dims{6, 4, 4, 2, 6};
  std::vector<FieldMatrix> mats;
  for (std::size_t i = 0; i < 4; ++i) mats.push_back(random_matrix(f, dims[i], dims[i + 1], rng));
  auto q = f.modulus();
  auto right = schoolbook(q, mats[0], schoolbook(q, mats[1], schoolbook(q, mats[2], mats[3])));
  EXPECT_EQ(oracle_chain_multiply(f, mats), right);
  EXPECT_MVC_ERROR(oracle_chain_multiply(f, std::vector<FieldMatrix>{}),
                   ErrorCode::kInvalidArgument);
}

TEST(ChainTest, BlockChainProductIsRestrictedProduct) {
  PrimeField f;
  auto scheme = PartitionScheme::with_block_side({2, 2, 2, 2}, 2);
  auto chain = random_chain(f, scheme, 4);
  std::vector<std::size_t> idx{1, 0, 1, 0};
  auto expected = schoolbook(f.modulus(), chain.block(0, 1, 0),
                             schoolbook(f.modulus(), chain.block(1, 0, 1), chain.block(2, 1, 0)));
  EXPECT_EQ(block_chain_product(chain, idx), expected);
  std::vector<std::size_t> short_idx{1, 0};
  EXPECT_MVC_ERROR(block_chain_product(chain, short_idx), ErrorCode::kIndexOutOfRange);
}

TEST(ChainTest, BlockDecompositionIdentityExhaustive) {
  PrimeField f;
  std::uint64_t seed = 0;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (const auto& parts : testing::all_parts(m, 3)) {
      auto scheme = PartitionScheme::with_block_side(parts, 1 + seed % 2);
      auto chain = random_chain(f, scheme, ++seed);
      std::vector<FieldMatrix> mats;
      for (std::size_t i = 0; i < m; ++i) mats.push_back(chain.matrix(i));
      ASSERT_EQ(assemble_result(blockwise_product(chain)), oracle_chain_multiply(f, mats))
          << "m=" << m << " seed=" << seed;
    }
  }
}

TEST(ChainTest, AssembleNeedsEveryBlock) {
  PrimeField f;
  auto chain = random_chain(f, PartitionScheme::with_block_side({2, 1, 2}, 2), 1);
  auto result = blockwise_product(chain);
  result.at(1, 1).reset();
  EXPECT_MVC_ERROR(assemble_result(result), ErrorCode::kMissingBlock);
}

TEST(ChainTest, RandomChainIsSeeded) {
  PrimeField f;
  auto s = PartitionScheme::with_block_side({2, 3, 2}, 2);
  EXPECT_EQ(random_chain(f, s, 7).matrix(1), random_chain(f, s, 7).matrix(1));
  EXPECT_NE(random_chain(f, s, 7).matrix(1), random_chain(f, s, 8).matrix(1));
}

TEST(MatrixIoTest, RoundTripAndErrors) {
  PrimeField f(101);
  auto m = parse_matrix(f, "2 3\n1 2 3\n-1 205 0\n");
  EXPECT_EQ(m(1, 0).v, 100u);
  EXPECT_EQ(m(1, 1).v, 3u);
  EXPECT_EQ(parse_matrix(f, format_matrix(m)), m);
  EXPECT_MVC_ERROR(parse_matrix(f, "2 2\n1 2 3\n"), ErrorCode::kParse);
  EXPECT_MVC_ERROR(parse_matrix(f, "2 2\n1 x 3 4\n"), ErrorCode::kParse);
  EXPECT_MVC_ERROR(parse_matrix(f, ""), ErrorCode::kParse);
}

}  // namespace
}  // namespace mvc
