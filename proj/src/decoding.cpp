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

#include "mvcodes/decoding.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "mvcodes/error.hpp"

namespace mvc {

std::size_t EvaluationGrid::point_count() const noexcept {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  return n;
}

EvalPoint EvaluationGrid::point(std::size_t flat_index) const {
  if (flat_index >= point_count()) fail(ErrorCode::kIndexOutOfRange, "grid index out of range");
  EvalPoint p;
  p.coords.resize(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    p.coords[k] = axes[k][flat_index % axes[k].size()];
    flat_index /= axes[k].size();
  }
  return p;
}

std::vector<EvalPoint> EvaluationGrid::points() const {
  std::vector<EvalPoint> out;
  const std::size_t n = point_count();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(point(i));
  return out;
}

void EvaluationGrid::validate() const {
  for (std::size_t k = 0; k < axes.size(); ++k) {
    std::set<Fe> seen;
    for (Fe x : axes[k]) {
      if (!seen.insert(x).second) {
        fail(ErrorCode::kDuplicatePoint, "axis " + std::to_string(k) +
                                             " repeats coordinate " + std::to_string(x.v));
      }
    }
  }
}

std::vector<std::size_t> grid_axis_sizes(SchemeKind kind, const PartitionScheme& scheme,
                                         AxisConvention convention) {
  auto sizes = degree_bounds(kind, scheme);
  for (auto& s : sizes) ++s;
  if (kind == SchemeKind::kMV2 && convention == AxisConvention::kOddPlusTwo) {
    for (std::size_t i = 1; i < scheme.m(); ++i) sizes[i] += 2;
  }
  return sizes;
}

std::vector<Fe> distinct_points(const PrimeField& field, std::size_t count,
                                std::mt19937_64& rng) {
  if (count >= field.modulus()) {
    fail(ErrorCode::kInvalidArgument,
         "field of size " + std::to_string(field.modulus()) + " cannot supply " +
             std::to_string(count) + " distinct nonzero points");
  }
  std::set<Fe> seen;
  std::vector<Fe> out;
  out.reserve(count);
  const std::uint64_t q = field.modulus();
  while (out.size() < count) {
    Fe x{rng() % (q - 1) + 1};
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

EvaluationGrid make_grid(const PrimeField& field, SchemeKind kind,
                         const PartitionScheme& scheme, std::uint64_t seed,
                         AxisConvention convention) {
  std::mt19937_64 rng(seed);
  EvaluationGrid grid{kind, {}};
  for (std::size_t n : grid_axis_sizes(kind, scheme, convention)) {
    grid.axes.push_back(distinct_points(field, n, rng));
  }
  return grid;
}

CoefficientTensor::CoefficientTensor(std::vector<std::size_t> bounds,
                                     std::vector<FieldMatrix> coeffs)
    : bounds_(std::move(bounds)), coeffs_(std::move(coeffs)) {
  std::size_t n = 1;
  for (auto b : bounds_) n *= b + 1;
  if (coeffs_.size() != n) {
    fail(ErrorCode::kShapeMismatch, "coefficient tensor needs " + std::to_string(n) +
                                        " entries, got " + std::to_string(coeffs_.size()));
  }
}

std::size_t CoefficientTensor::flat_index(std::span<const std::size_t> exponents) const {
  if (exponents.size() != bounds_.size()) {
    fail(ErrorCode::kDegreeMismatch, "exponent tuple has wrong arity");
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k < bounds_.size(); ++k) {
    if (exponents[k] > bounds_[k]) fail(ErrorCode::kIndexOutOfRange, "exponent beyond tensor bound");
    idx = idx * (bounds_[k] + 1) + exponents[k];
  }
  return idx;
}

CoefficientTensor CoefficientTensor::trimmed(std::span<const std::size_t> bounds) const {
  if (bounds.size() != bounds_.size()) {
    fail(ErrorCode::kDegreeMismatch, "tensor has " + std::to_string(bounds_.size()) +
                                         " variables, expected " + std::to_string(bounds.size()));
  }
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    if (bounds_[k] < bounds[k]) {
      fail(ErrorCode::kDegreeMismatch, "tensor degree " + std::to_string(bounds_[k]) +
                                           " in variable " + std::to_string(k) +
                                           " is below the required " + std::to_string(bounds[k]));
    }
  }
  std::vector<FieldMatrix> kept;
  std::vector<std::size_t> e(bounds_.size(), 0);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    bool inside = true;
    for (std::size_t k = 0; k < e.size(); ++k) inside = inside && e[k] <= bounds[k];
    if (inside) {
      kept.push_back(coeffs_[n]);
    } else {
      for (Fe x : coeffs_[n].entries()) {
        if (x.v != 0) {
          fail(ErrorCode::kDegreeMismatch, "nonzero coefficient beyond the expected degree");
        }
      }
    }
    for (std::size_t k = e.size(); k-- > 0;) {
      if (++e[k] <= bounds_[k]) break;
      e[k] = 0;
    }
  }
  return CoefficientTensor({bounds.begin(), bounds.end()}, std::move(kept));
}

CoefficientTensor interpolate_grid(const PrimeField& field, const EvaluationGrid& grid,
                                   std::span<const FieldMatrix> evaluations) {
  grid.validate();
  const std::size_t total = grid.point_count();
  if (total == 0) fail(ErrorCode::kInvalidArgument, "empty evaluation grid");
  if (evaluations.size() != total) {
    fail(ErrorCode::kMissingEvaluation, "grid has " + std::to_string(total) +
                                            " points but " +
                                            std::to_string(evaluations.size()) +
                                            " evaluations were supplied");
  }
  const std::size_t rows = evaluations[0].rows();
  const std::size_t cols = evaluations[0].cols();
  const std::size_t width = rows * cols;
  std::vector<Fe> data;
  data.reserve(total * width);
  for (const auto& e : evaluations) {
    if (e.rows() != rows || e.cols() != cols) fail(ErrorCode::kShapeMismatch, "evaluation shapes differ");
    data.insert(data.end(), e.entries().begin(), e.entries().end());
  }

  const std::size_t v = grid.axes.size();
  std::vector<Fe> fibre;
  for (std::size_t a = 0; a < v; ++a) {
    const std::size_t n = grid.axes[a].size();
    if (n == 1) continue;  // constant along this axis
    NewtonInterpolator interp(field, grid.axes[a]);
    std::size_t stride = 1;
    for (std::size_t k = a + 1; k < v; ++k) stride *= grid.axes[k].size();
    const std::size_t outer = total / (stride * n);
    fibre.resize(n * width);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t s = 0; s < stride; ++s) {
        const std::size_t base = o * n * stride + s;
        for (std::size_t t = 0; t < n; ++t) {
          std::copy_n(data.begin() + (base + t * stride) * width, width,
                      fibre.begin() + t * width);
        }
        interp.solve_in_place(fibre, width);
        for (std::size_t t = 0; t < n; ++t) {
          std::copy_n(fibre.begin() + t * width, width,
                      data.begin() + (base + t * stride) * width);
        }
      }
    }
  }

  std::vector<std::size_t> bounds;
  for (const auto& ax : grid.axes) bounds.push_back(ax.size() - 1);
  std::vector<FieldMatrix> coeffs;
  coeffs.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    coeffs.emplace_back(rows, cols, std::vector<Fe>(data.begin() + n * width,
                                                    data.begin() + (n + 1) * width));
  }
  return CoefficientTensor(std::move(bounds), std::move(coeffs));
}

CoefficientTensor interpolate_grid(const PrimeField& field, const EvaluationGrid& grid,
                                   const std::map<EvalPoint, FieldMatrix>& evaluations) {
  std::vector<FieldMatrix> ordered;
  const std::size_t total = grid.point_count();
  ordered.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    auto it = evaluations.find(grid.point(n));
    if (it == evaluations.end()) {
      fail(ErrorCode::kMissingEvaluation, "no evaluation for grid point " + std::to_string(n));
    }
    ordered.push_back(it->second);
  }
  return interpolate_grid(field, grid, ordered);
}

namespace {

// Throws kDegreeMismatch unless the tensor covers `want` exactly after
// trimming provably-zero excess.
CoefficientTensor fit_bounds(const CoefficientTensor& tensor,
                             const std::vector<std::size_t>& want) {
  if (std::equal(want.begin(), want.end(), tensor.bounds().begin(), tensor.bounds().end())) {
    return tensor;
  }
  return tensor.trimmed(want);
}

}  // namespace

ChainResult extract_mv1(const PrimeField& field, const CoefficientTensor& tensor,
                        const PartitionScheme& scheme) {
  const auto want = degree_bounds(SchemeKind::kMV1, scheme);
  const CoefficientTensor t = fit_bounds(tensor, want);
  const std::size_t m = scheme.m();
  ChainResult result(scheme);
  std::vector<std::size_t> n(m + 1, 0);
  std::vector<std::size_t> e(m);
  for (std::size_t n0 = 0; n0 < scheme.part(0); ++n0) {
    for (std::size_t nm = 0; nm < scheme.part(m); ++nm) {
      n.assign(m + 1, 0);
      n[0] = n0;
      n[m] = nm;
      std::optional<FieldMatrix> sum;
      while (true) {
        for (std::size_t i = 0; i < m; ++i) e[i] = scheme.part(i + 1) * n[i] + n[i + 1];
        const FieldMatrix& c = t.at(e);
        sum = sum ? mat_add(field, *sum, c) : c;
        std::size_t k = 1;
        while (k < m && ++n[k] == scheme.part(k)) n[k++] = 0;
        if (k == m) break;
      }
      result.at(n0, nm) = std::move(sum);
    }
  }
  return result;
}

ChainResult extract_mv2(const CoefficientTensor& tensor, const PartitionScheme& scheme) {
  const auto want = degree_bounds(SchemeKind::kMV2, scheme);
  const CoefficientTensor t = fit_bounds(tensor, want);
  const std::size_t m = scheme.m();
  ChainResult result(scheme);
  std::vector<std::size_t> e(m + 1);
  for (std::size_t i = 1; i < m; ++i) e[i] = scheme.part(i) - 1;
  for (std::size_t n0 = 0; n0 < scheme.part(0); ++n0) {
    for (std::size_t nm = 0; nm < scheme.part(m); ++nm) {
      e[0] = scheme.part(0) - 1 - n0;
      e[m] = nm;
      result.at(n0, nm) = t.at(e);
    }
  }
  return result;
}

ChainResult extract(const PrimeField& field, SchemeKind kind,
                    const CoefficientTensor& tensor, const PartitionScheme& scheme) {
  return kind == SchemeKind::kMV1 ? extract_mv1(field, tensor, scheme)
                                  : extract_mv2(tensor, scheme);
}

ChainResult decode_mv2_targeted(const PrimeField& field, const EvaluationGrid& grid,
                                std::span<const FieldMatrix> evaluations,
                                const PartitionScheme& scheme) {
  grid.validate();
  const auto sizes = grid_axis_sizes(SchemeKind::kMV2, scheme);
  const std::size_t m = scheme.m();
  if (grid.kind != SchemeKind::kMV2 || grid.axes.size() != m + 1) {
    fail(ErrorCode::kDegreeMismatch, "targeted decode needs an MV2 grid");
  }
  for (std::size_t k = 0; k <= m; ++k) {
    if (grid.axes[k].size() != sizes[k]) {
      fail(ErrorCode::kDegreeMismatch, "targeted decode needs the minimal grid");
    }
  }
  const std::size_t total = grid.point_count();
  if (evaluations.size() != total) {
    fail(ErrorCode::kMissingEvaluation, "evaluation count does not match the grid");
  }
  // lagrange[k][e * n + j]: coefficient of x^e in the Lagrange basis
  // polynomial of node j on axis k.
  std::vector<std::vector<Fe>> lagrange(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    const std::size_t n = sizes[k];
    std::vector<Fe> data(n * n, Fe{0});
    for (std::size_t j = 0; j < n; ++j) data[j * n + j] = Fe{1};
    NewtonInterpolator(field, grid.axes[k]).solve_in_place(data, n);
    lagrange[k] = std::move(data);
  }
  ChainResult result(scheme);
  std::vector<std::size_t> e(m + 1);
  for (std::size_t i = 1; i < m; ++i) e[i] = scheme.part(i) - 1;
  std::vector<std::size_t> j(m + 1);
  for (std::size_t n0 = 0; n0 < scheme.part(0); ++n0) {
    for (std::size_t nm = 0; nm < scheme.part(m); ++nm) {
      e[0] = scheme.part(0) - 1 - n0;
      e[m] = nm;
      FieldMatrix acc(scheme.block_dim(0), scheme.block_dim(m));
      j.assign(m + 1, 0);
      for (std::size_t idx = 0; idx < total; ++idx) {
        Fe w{1};
        for (std::size_t k = 0; k <= m && w.v != 0; ++k) {
          w = field.mul(w, lagrange[k][e[k] * sizes[k] + j[k]]);
        }
        if (w.v != 0) axpy(field, acc, w, evaluations[idx]);
        for (std::size_t k = m + 1; k-- > 0;) {
          if (++j[k] < sizes[k]) break;
          j[k] = 0;
        }
      }
      result.at(n0, nm) = std::move(acc);
    }
  }
  return result;
}

std::vector<std::vector<std::size_t>> monomial_support(SchemeKind kind,
                                                       const PartitionScheme& scheme) {
  const std::size_t m = scheme.m();
  const std::size_t v = variable_count(kind, m);
  // one block choice (row, col) per matrix; odometer over all of them
  std::vector<std::size_t> row(m, 0), col(m, 0);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> e(v);
  while (true) {
    if (kind == SchemeKind::kMV1) {
      for (std::size_t i = 0; i < m; ++i) e[i] = scheme.part(i + 1) * row[i] + col[i];
    } else {
      e[0] = scheme.part(0) - 1 - row[0];
      for (std::size_t i = 1; i < m; ++i) e[i] = col[i - 1] + scheme.part(i) - 1 - row[i];
      e[m] = col[m - 1];
    }
    seen.insert(e);
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++col[i] < scheme.part(i + 1)) break;
      col[i] = 0;
      if (++row[i] < scheme.part(i)) break;
      row[i] = 0;
    }
    if (i == m) break;
  }
  return {seen.begin(), seen.end()};
}

GeneralDecoder::GeneralDecoder(const PrimeField& field, SchemeKind kind,
                               PartitionScheme scheme)
    : field_(field),
      kind_(kind),
      scheme_(std::move(scheme)),
      bounds_(degree_bounds(kind, scheme_)),
      support_(monomial_support(kind, scheme_)),
      solver_(field, support_.size(),
              scheme_.block_dim(0) * scheme_.block_dim(scheme_.m())) {}

bool GeneralDecoder::add(const EvalPoint& point, const FieldMatrix& evaluation) {
  const std::size_t v = bounds_.size();
  if (point.coords.size() != v) {
    fail(ErrorCode::kPointArityMismatch, "point has " + std::to_string(point.coords.size()) +
                                             " coordinates, scheme needs " + std::to_string(v));
  }
  if (evaluation.rows() != scheme_.block_dim(0) ||
      evaluation.cols() != scheme_.block_dim(scheme_.m())) {
    fail(ErrorCode::kShapeMismatch, "evaluation has the wrong block shape");
  }
  std::vector<std::vector<Fe>> powers(v);
  for (std::size_t k = 0; k < v; ++k) {
    powers[k].resize(bounds_[k] + 1);
    powers[k][0] = Fe{1};
    for (std::size_t d = 1; d <= bounds_[k]; ++d) {
      powers[k][d] = field_.mul(powers[k][d - 1], point.coords[k]);
    }
  }
  std::vector<Fe> row(support_.size());
  for (std::size_t s = 0; s < support_.size(); ++s) {
    Fe x{1};
    for (std::size_t k = 0; k < v; ++k) x = field_.mul(x, powers[k][support_[s][k]]);
    row[s] = x;
  }
  return solver_.add_row(row, evaluation.entries());
}

CoefficientTensor GeneralDecoder::coefficients() const {
  const auto solution = solver_.solve();
  std::size_t total = 1;
  for (auto b : bounds_) total *= b + 1;
  const std::size_t rows = scheme_.block_dim(0);
  const std::size_t cols = scheme_.block_dim(scheme_.m());
  std::vector<FieldMatrix> coeffs(total, FieldMatrix(rows, cols));
  CoefficientTensor shape(bounds_, coeffs);
  for (std::size_t s = 0; s < support_.size(); ++s) {
    coeffs[shape.flat_index(support_[s])] = FieldMatrix(rows, cols, solution[s]);
  }
  return CoefficientTensor(bounds_, std::move(coeffs));
}

ChainResult GeneralDecoder::decode() const {
  return extract(field_, kind_, coefficients(), scheme_);
}

ChainResult decode_general(const PrimeField& field, std::span<const EvalPoint> points,
                           std::span<const FieldMatrix> evaluations, SchemeKind kind,
                           const PartitionScheme& scheme) {
  if (points.size() != evaluations.size()) {
    fail(ErrorCode::kShapeMismatch, std::to_string(points.size()) + " points but " +
                                        std::to_string(evaluations.size()) + " evaluations");
  }
  GeneralDecoder dec(field, kind, scheme);
  for (std::size_t i = 0; i < points.size() && !dec.decodable(); ++i) {
    dec.add(points[i], evaluations[i]);
  }
  if (!dec.decodable()) {
    fail(ErrorCode::kSingularSystem,
         "interpolation system has rank " + std::to_string(dec.rank()) + " < " +
             std::to_string(dec.unknowns()) + " monomials; more evaluations are needed");
  }
  return dec.decode();
}

RoundtripReport roundtrip(const BlockChain& chain, SchemeKind kind,
                          std::uint64_t grid_seed, AxisConvention convention) {
  const auto& scheme = chain.scheme();
  const EvaluationGrid grid = make_grid(chain.field(), kind, scheme, grid_seed, convention);
  const auto evaluations = evaluate_on_grid(chain, kind, grid.axes);
  const auto tensor = interpolate_grid(chain.field(), grid, evaluations);
  RoundtripReport rep;
  rep.kind = kind;
  rep.recovery_threshold = 1;
  for (auto n : grid_axis_sizes(kind, scheme)) rep.recovery_threshold *= n;
  rep.evaluations = grid.point_count();
  rep.partition_level = scheme.partition_level();
  rep.decoded = assemble_result(extract(chain.field(), kind, tensor, scheme));
  std::vector<FieldMatrix> mats;
  for (std::size_t i = 0; i < chain.m(); ++i) mats.push_back(chain.matrix(i));
  rep.expected = oracle_chain_multiply(chain.field(), mats);
  rep.exact = rep.decoded == rep.expected;
  return rep;
}

}  // namespace mvc
