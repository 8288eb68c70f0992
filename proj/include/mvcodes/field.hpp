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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mvc {

// Canonical residue in [0, q). The modulus lives in PrimeField, not here.
__extension__ using u128 = unsigned __int128;

struct Fe {
  std::uint64_t v = 0;

  friend constexpr auto operator<=>(Fe, Fe) = default;
};

bool is_prime(std::uint64_t n) noexcept;

class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = (std::uint64_t{1} << 31) - 1;

  // Throws kNotPrime unless modulus is prime.
  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const noexcept { return q_; }

  Fe zero() const noexcept { return Fe{0}; }
  Fe one() const noexcept { return Fe{1}; }
  Fe from_uint(std::uint64_t x) const noexcept { return Fe{x % q_}; }
  Fe from_int(std::int64_t x) const noexcept;

  Fe add(Fe a, Fe b) const noexcept {
    std::uint64_t s = a.v + b.v;
    // a.v, b.v < q < 2^64 can still overflow when q > 2^63.
    if (s < a.v || s >= q_) s -= q_;
    return Fe{s};
  }
  Fe sub(Fe a, Fe b) const noexcept {
    return Fe{a.v >= b.v ? a.v - b.v : a.v + (q_ - b.v)};
  }
  Fe neg(Fe a) const noexcept { return Fe{a.v == 0 ? 0 : q_ - a.v}; }
  Fe mul(Fe a, Fe b) const noexcept { return Fe{mul_raw(a.v, b.v)}; }
  Fe pow(Fe base, std::uint64_t exp) const noexcept;
  // Throws kZeroInverse on a == 0.
  Fe inv(Fe a) const;

  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const noexcept {
    if (narrow_) return (a * b) % q_;
    return static_cast<std::uint64_t>(
        (static_cast<u128>(a) * b) % q_);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  std::uint64_t q_;
  bool narrow_;  // q < 2^32, so products fit in 64 bits
};

/// Dense row-major matrix over a prime field. The matrix does not know its
/// field; every arithmetic routine takes the PrimeField explicitly.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Throws kShapeMismatch if entries.size() != rows * cols.
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Fe> entries);

  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Fe& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Fe operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Fe> entries() noexcept { return entries_; }
  std::span<const Fe> entries() const noexcept { return entries_; }

  bool same_shape(const FieldMatrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> entries_;
};

FieldMatrix mat_mul(const PrimeField& f, const FieldMatrix& a,
                    const FieldMatrix& b);
FieldMatrix mat_add(const PrimeField& f, const FieldMatrix& a,
                    const FieldMatrix& b);
FieldMatrix scaled(const PrimeField& f, Fe s, const FieldMatrix& a);
// y += s * x
void axpy(const PrimeField& f, FieldMatrix& y, Fe s, const FieldMatrix& x);

/// Newton-form interpolation on a fixed set of distinct nodes. The inverse
/// node differences are computed once so the same solver can be applied to
/// many right-hand sides (one per fibre of a tensor sweep).
class NewtonInterpolator {
 public:
  // Throws kDuplicatePoint if two nodes coincide.
  NewtonInterpolator(const PrimeField& f, std::vector<Fe> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Fe> nodes() const noexcept { return nodes_; }

  // data holds size() consecutive vectors of `width` entries, the values at
  // each node; on return it holds the monomial coefficients c_0 .. c_{n-1}
  // in the same layout.
  void solve_in_place(std::span<Fe> data, std::size_t width) const;

 private:
  PrimeField field_;
  std::vector<Fe> nodes_;
  // inv_diff_[k][j] = 1 / (x_j - x_{j-k}) for j >= k
  std::vector<std::vector<Fe>> inv_diff_;
};

/// Coefficients c_0..c_d of the unique matrix polynomial of degree <= d with
/// P(points[j]) == values[j]. O(d^2) matrix operations.
std::vector<FieldMatrix> solve_vandermonde(const PrimeField& f,
                                           std::span<const Fe> points,
                                           std::span<const FieldMatrix> values);

std::size_t rank(const PrimeField& f, FieldMatrix m);

/// Row-by-row Gaussian elimination for a square system A X = B where the
/// rows of A arrive one at a time. Dependent rows are discarded, so rank()
/// is always the rank of everything offered so far.
class IncrementalSolver {
 public:
  IncrementalSolver(const PrimeField& f, std::size_t unknowns,
                    std::size_t rhs_width);

  // Returns true if the row was linearly independent of those kept so far.
  bool add_row(std::span<const Fe> row, std::span<const Fe> rhs);

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full_rank() const noexcept { return rows_.size() == unknowns_; }

  // Solution rows X[0..unknowns), each of rhs_width entries. Throws
  // kSingularSystem when not full rank.
  std::vector<std::vector<Fe>> solve() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Fe> coeffs;
    std::vector<Fe> rhs;
  };

  PrimeField field_;
  std::size_t unknowns_;
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_owner_;  // column -> row index or npos
};

}  // namespace mvc
