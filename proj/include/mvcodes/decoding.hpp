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
#include <map>
#include <span>
#include <vector>

#include "mvcodes/chain.hpp"
#include "mvcodes/encoding.hpp"
#include "mvcodes/field.hpp"

namespace mvc {

// How many coordinates an MV2 interior axis gets. kDegreePlusOne is the
// minimal 2 p_i - 1; kOddPlusTwo uses 2 p_i + 1 and therefore oversamples.
enum class AxisConvention { kDegreePlusOne, kOddPlusTwo };

struct EvaluationGrid {
  SchemeKind kind = SchemeKind::kMV1;
  std::vector<std::vector<Fe>> axes;

  std::size_t point_count() const noexcept;
  // Row-major (last axis fastest).
  EvalPoint point(std::size_t flat_index) const;
  std::vector<EvalPoint> points() const;
  // Throws kDuplicatePoint if an axis repeats a coordinate.
  void validate() const;
};

std::vector<std::size_t> grid_axis_sizes(
    SchemeKind kind, const PartitionScheme& scheme,
    AxisConvention convention = AxisConvention::kDegreePlusOne);

// `count` distinct nonzero field elements drawn from rng. Throws
// kInvalidArgument if the field is too small.
std::vector<Fe> distinct_points(const PrimeField& field, std::size_t count,
                                std::mt19937_64& rng);

EvaluationGrid make_grid(const PrimeField& field, SchemeKind kind,
                         const PartitionScheme& scheme, std::uint64_t seed,
                         AxisConvention convention = AxisConvention::kDegreePlusOne);

/// Dense coefficients of a multivariate matrix polynomial, row-major over
/// exponent tuples with 0 <= e_i <= bounds[i].
class CoefficientTensor {
 public:
  CoefficientTensor(std::vector<std::size_t> bounds, std::vector<FieldMatrix> coeffs);

  std::span<const std::size_t> bounds() const noexcept { return bounds_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::size_t flat_index(std::span<const std::size_t> exponents) const;
  const FieldMatrix& at(std::span<const std::size_t> exponents) const {
    return coeffs_[flat_index(exponents)];
  }
  std::span<const FieldMatrix> coefficients() const noexcept { return coeffs_; }

  // Drops exponents beyond `bounds`; throws kDegreeMismatch if the tensor is
  // smaller than `bounds` or a dropped coefficient is nonzero.
  CoefficientTensor trimmed(std::span<const std::size_t> bounds) const;

 private:
  std::vector<std::size_t> bounds_;
  std::vector<FieldMatrix> coeffs_;
};

/// Tensor-product interpolation: one Newton solve per fibre along each axis
/// in turn. evaluations are in grid row-major order.
CoefficientTensor interpolate_grid(const PrimeField& field,
                                   const EvaluationGrid& grid,
                                   std::span<const FieldMatrix> evaluations);
CoefficientTensor interpolate_grid(const PrimeField& field,
                                   const EvaluationGrid& grid,
                                   const std::map<EvalPoint, FieldMatrix>& evaluations);

// Result block (n_0, n_m) is the sum over n_1..n_{m-1} of the coefficient at
// exponents (p_{i+1} n_i + n_{i+1})_i.
ChainResult extract_mv1(const PrimeField& field, const CoefficientTensor& tensor,
                        const PartitionScheme& scheme);
// Result block (n_0, n_m) is the single coefficient at
// (p_0 - 1 - n_0, p_1 - 1, ..., p_{m-1} - 1, n_m).
ChainResult extract_mv2(const CoefficientTensor& tensor,
                        const PartitionScheme& scheme);
ChainResult extract(const PrimeField& field, SchemeKind kind,
                    const CoefficientTensor& tensor, const PartitionScheme& scheme);

/// MV2 shortcut that computes only the p_0 p_m coefficients it needs, each as
/// a weighted sum of all grid evaluations with weights from the per-axis
/// inverse Vandermonde rows. Needs a grid with exactly the minimal axis sizes.
ChainResult decode_mv2_targeted(const PrimeField& field, const EvaluationGrid& grid,
                                std::span<const FieldMatrix> evaluations,
                                const PartitionScheme& scheme);

// Exponent tuples that occur when the product polynomial is expanded term by
// term, sorted lexicographically.
std::vector<std::vector<std::size_t>> monomial_support(SchemeKind kind,
                                                       const PartitionScheme& scheme);

/// Decoder for arbitrary point sets: each result adds one row of the
/// generalized Vandermonde system over the monomial support.
class GeneralDecoder {
 public:
  GeneralDecoder(const PrimeField& field, SchemeKind kind, PartitionScheme scheme);

  // Returns true if the point raised the rank.
  bool add(const EvalPoint& point, const FieldMatrix& evaluation);

  std::size_t unknowns() const noexcept { return support_.size(); }
  std::size_t rank() const noexcept { return solver_.rank(); }
  bool decodable() const noexcept { return solver_.full_rank(); }

  CoefficientTensor coefficients() const;  // kSingularSystem if not decodable
  ChainResult decode() const;

 private:
  PrimeField field_;
  SchemeKind kind_;
  PartitionScheme scheme_;
  std::vector<std::size_t> bounds_;
  std::vector<std::vector<std::size_t>> support_;
  IncrementalSolver solver_;
};

ChainResult decode_general(const PrimeField& field,
                           std::span<const EvalPoint> points,
                           std::span<const FieldMatrix> evaluations,
                           SchemeKind kind, const PartitionScheme& scheme);

/// Encode on a fresh grid, compute every worker product, interpolate,
/// extract, reassemble and compare with the uncoded product.
struct RoundtripReport {
  SchemeKind kind = SchemeKind::kMV1;
  std::uint64_t recovery_threshold = 0;  // minimal grid size
  std::uint64_t evaluations = 0;         // grid size actually used
  std::uint64_t partition_level = 0;
  FieldMatrix decoded;
  FieldMatrix expected;
  bool exact = false;
};

RoundtripReport roundtrip(const BlockChain& chain, SchemeKind kind,
                          std::uint64_t grid_seed,
                          AxisConvention convention = AxisConvention::kDegreePlusOne);

}  // namespace mvc
