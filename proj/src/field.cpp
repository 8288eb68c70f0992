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

#include "mvcodes/field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mvcodes/error.hpp"

namespace mvc {

namespace {


std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod64(r, a, n);
    a = mulmod64(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 3.3e24.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus)
    : q_(modulus), narrow_(modulus < (std::uint64_t{1} << 32)) {
  if (!is_prime(modulus)) {
    fail(ErrorCode::kNotPrime,
         "field modulus " + std::to_string(modulus) + " is not prime");
  }
}

Fe PrimeField::from_int(std::int64_t x) const noexcept {
  if (x >= 0) return from_uint(static_cast<std::uint64_t>(x));
  // -(x+1) avoids overflow at INT64_MIN
  std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
  return neg(from_uint(mag));
}

Fe PrimeField::pow(Fe base, std::uint64_t exp) const noexcept {
  Fe r = one();
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

Fe PrimeField::inv(Fe a) const {
  if (a.v == 0) fail(ErrorCode::kZeroInverse, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols,
                         std::vector<Fe> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    fail(ErrorCode::kShapeMismatch,
         "matrix entry count " + std::to_string(entries_.size()) +
             " does not match " + std::to_string(rows) + "x" +
             std::to_string(cols));
  }
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fe{1};
  return m;
}

FieldMatrix mat_mul(const PrimeField& f, const FieldMatrix& a,
                    const FieldMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::kDimensionMismatch,
         "mat_mul: " + std::to_string(a.rows()) + "x" +
             std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
             "x" + std::to_string(b.cols()));
  }
  const std::uint64_t q = f.modulus();
  const bool narrow = q < (std::uint64_t{1} << 32);
  FieldMatrix c(a.rows(), b.cols());
  std::vector<u128> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k).v;
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] += static_cast<u128>(aik) * b(k, j).v;
      }
      // Products are below 2^64 for a narrow modulus, so a u128 accumulator
      // never overflows; otherwise reduce after every term.
      if (!narrow) {
        for (auto& v : acc) v %= q;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      c(i, j) = Fe{static_cast<std::uint64_t>(acc[j] % q)};
    }
  }
  return c;
}

FieldMatrix mat_add(const PrimeField& f, const FieldMatrix& a,
                    const FieldMatrix& b) {
  if (!a.same_shape(b)) fail(ErrorCode::kShapeMismatch, "mat_add: shape mismatch");
  FieldMatrix c = a;
  auto ce = c.entries();
  auto be = b.entries();
  for (std::size_t i = 0; i < ce.size(); ++i) ce[i] = f.add(ce[i], be[i]);
  return c;
}

FieldMatrix scaled(const PrimeField& f, Fe s, const FieldMatrix& a) {
  FieldMatrix c = a;
  for (auto& e : c.entries()) e = f.mul(s, e);
  return c;
}

void axpy(const PrimeField& f, FieldMatrix& y, Fe s, const FieldMatrix& x) {
  if (!y.same_shape(x)) fail(ErrorCode::kShapeMismatch, "axpy: shape mismatch");
  auto ye = y.entries();
  auto xe = x.entries();
  for (std::size_t i = 0; i < ye.size(); ++i) {
    ye[i] = f.add(ye[i], f.mul(s, xe[i]));
  }
}

NewtonInterpolator::NewtonInterpolator(const PrimeField& f,
                                       std::vector<Fe> nodes)
    : field_(f), nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  inv_diff_.resize(n);
  for (std::size_t k = 1; k < n; ++k) {
    inv_diff_[k].resize(n);
    for (std::size_t j = k; j < n; ++j) {
      Fe d = field_.sub(nodes_[j], nodes_[j - k]);
      if (d.v == 0) {
        fail(ErrorCode::kDuplicatePoint,
             "interpolation node " + std::to_string(nodes_[j].v) +
                 " repeated");
      }
      inv_diff_[k][j] = field_.inv(d);
    }
  }
}

void NewtonInterpolator::solve_in_place(std::span<Fe> data,
                                        std::size_t width) const {
  const std::size_t n = nodes_.size();
  if (data.size() != n * width) {
    fail(ErrorCode::kShapeMismatch, "interpolation data size mismatch");
  }
  const PrimeField& f = field_;
  auto at = [&](std::size_t j) { return data.subspan(j * width, width); };

  // Divided differences: c_j <- (c_j - c_{j-1}) / (x_j - x_{j-k}).
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = n - 1; j >= k; --j) {
      auto cj = at(j);
      auto cp = at(j - 1);
      const Fe s = inv_diff_[k][j];
      for (std::size_t e = 0; e < width; ++e) {
        cj[e] = f.mul(f.sub(cj[e], cp[e]), s);
      }
    }
  }
  if (n <= 1) return;

  // Newton form to monomial form by Horner: P <- P * (x - x_k) + c_k,
  // starting from P = c_{n-1}.
  std::vector<Fe> poly(n * width, Fe{0});
  auto pa = [&](std::size_t t) {
    return std::span<Fe>(poly).subspan(t * width, width);
  };
  std::copy(at(n - 1).begin(), at(n - 1).end(), pa(0).begin());
  std::size_t deg = 0;
  for (std::size_t k = n - 1; k-- > 0;) {
    const Fe xk = nodes_[k];
    for (std::size_t t = deg + 1; t >= 1; --t) {
      auto dst = pa(t);
      auto lower = pa(t - 1);
      for (std::size_t e = 0; e < width; ++e) {
        dst[e] = f.sub(lower[e], f.mul(xk, dst[e]));
      }
    }
    auto c0 = pa(0);
    auto ck = at(k);
    for (std::size_t e = 0; e < width; ++e) {
      c0[e] = f.sub(ck[e], f.mul(xk, c0[e]));
    }
    ++deg;
  }
  std::copy(poly.begin(), poly.end(), data.begin());
}

std::vector<FieldMatrix> solve_vandermonde(const PrimeField& f,
                                           std::span<const Fe> points,
                                           std::span<const FieldMatrix> values) {
  if (points.size() != values.size()) {
    fail(ErrorCode::kShapeMismatch, "solve_vandermonde: " +
                                        std::to_string(points.size()) +
                                        " points but " +
                                        std::to_string(values.size()) + " values");
  }
  if (points.empty()) return {};
  const std::size_t rows = values[0].rows();
  const std::size_t cols = values[0].cols();
  for (const auto& v : values) {
    if (v.rows() != rows || v.cols() != cols) {
      fail(ErrorCode::kShapeMismatch, "solve_vandermonde: value shapes differ");
    }
  }
  NewtonInterpolator interp(f, {points.begin(), points.end()});
  const std::size_t width = rows * cols;
  std::vector<Fe> data;
  data.reserve(points.size() * width);
  for (const auto& v : values) {
    data.insert(data.end(), v.entries().begin(), v.entries().end());
  }
  interp.solve_in_place(data, width);
  std::vector<FieldMatrix> out;
  out.reserve(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    out.emplace_back(rows, cols,
                     std::vector<Fe>(data.begin() + j * width,
                                     data.begin() + (j + 1) * width));
  }
  return out;
}

std::size_t rank(const PrimeField& f, FieldMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Fe inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).v == 0) continue;
      const Fe factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    ++r;
  }
  return r;
}

IncrementalSolver::IncrementalSolver(const PrimeField& f, std::size_t unknowns,
                                     std::size_t rhs_width)
    : field_(f),
      unknowns_(unknowns),
      width_(rhs_width),
      pivot_owner_(unknowns, static_cast<std::size_t>(-1)) {
  rows_.reserve(unknowns);
}

bool IncrementalSolver::add_row(std::span<const Fe> row,
                                std::span<const Fe> rhs) {
  if (row.size() != unknowns_ || rhs.size() != width_) {
    fail(ErrorCode::kShapeMismatch, "IncrementalSolver: row shape mismatch");
  }
  if (full_rank()) return false;
  const PrimeField& f = field_;
  std::vector<Fe> v(row.begin(), row.end());
  std::vector<Fe> b(rhs.begin(), rhs.end());
  // Stored rows are zero on the pivots of earlier rows, so one pass in
  // insertion order clears every existing pivot column of v.
  for (const Row& r : rows_) {
    const Fe s = v[r.pivot];
    if (s.v == 0) continue;
    for (std::size_t c = 0; c < unknowns_; ++c) {
      if (r.coeffs[c].v != 0) v[c] = f.sub(v[c], f.mul(s, r.coeffs[c]));
    }
    for (std::size_t e = 0; e < width_; ++e) {
      b[e] = f.sub(b[e], f.mul(s, r.rhs[e]));
    }
  }
  std::size_t pivot = 0;
  while (pivot < unknowns_ && v[pivot].v == 0) ++pivot;
  if (pivot == unknowns_) return false;
  const Fe inv = f.inv(v[pivot]);
  for (auto& x : v) x = f.mul(x, inv);
  for (auto& x : b) x = f.mul(x, inv);
  pivot_owner_[pivot] = rows_.size();
  rows_.push_back(Row{pivot, std::move(v), std::move(b)});
  return true;
}

std::vector<std::vector<Fe>> IncrementalSolver::solve() const {
  if (!full_rank()) {
    fail(ErrorCode::kSingularSystem,
         "system rank " + std::to_string(rank()) + " < " +
             std::to_string(unknowns_) + " unknowns");
  }
  const PrimeField& f = field_;
  std::vector<std::vector<Fe>> x(unknowns_);
  // Row j has a unit at its pivot and zeros on pivots of rows before it, so
  // its remaining support lies on pivots of later rows.
  for (std::size_t j = rows_.size(); j-- > 0;) {
    const Row& r = rows_[j];
    std::vector<Fe> val = r.rhs;
    for (std::size_t c = 0; c < unknowns_; ++c) {
      if (c == r.pivot || r.coeffs[c].v == 0) continue;
      const auto& xc = x[c];
      for (std::size_t e = 0; e < width_; ++e) {
        val[e] = f.sub(val[e], f.mul(r.coeffs[c], xc[e]));
      }
    }
    x[r.pivot] = std::move(val);
  }
  return x;
}

}  // namespace mvc
