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
#include <vector>

#include "mvcodes/field.hpp"
#include "test_util.hpp"

namespace mvc {
namespace {

using testing::kMersenne31;
using testing::schoolbook;

TEST(PrimeFieldTest, PrimalityCheck) {
  for (std::uint64_t p : std::initializer_list<std::uint64_t>{2ULL, 3ULL, 7ULL, 101ULL, kMersenne31, 2305843009213693951ULL,
                          18446744073709551557ULL}) {
    EXPECT_TRUE(is_prime(p)) << p;
  }
  for (std::uint64_t n : {0ULL, 1ULL, 4ULL, 561ULL, 3215031751ULL, 18446744073709551615ULL}) {
    EXPECT_FALSE(is_prime(n)) << n;
  }
}

TEST(PrimeFieldTest, RejectsComposite) {
  EXPECT_MVC_ERROR(PrimeField(8), ErrorCode::kNotPrime);
  EXPECT_MVC_ERROR(PrimeField(1), ErrorCode::kNotPrime);
  EXPECT_EQ(PrimeField().modulus(), kMersenne31);
}

TEST(PrimeFieldTest, InverseOfThreeModSeven) {
  PrimeField f(7);
  EXPECT_EQ(f.inv(Fe{3}).v, 5u);
  EXPECT_MVC_ERROR(f.inv(Fe{0}), ErrorCode::kZeroInverse);
}

TEST(PrimeFieldTest, SignedConversion) {
  PrimeField f(101);
  EXPECT_EQ(f.from_int(-1).v, 100u);
  EXPECT_EQ(f.from_int(-202).v, 0u);
  EXPECT_EQ(f.from_uint(205).v, 3u);
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  PrimeField f(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 2000; ++t) {
    Fe a = f.from_uint(rng()), b = f.from_uint(rng()), c = f.from_uint(rng());
    EXPECT_EQ(f.add(a, b), f.add(b, a));
    EXPECT_EQ(f.mul(a, b), f.mul(b, a));
    EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.sub(f.add(a, b), b), a);
    EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
    if (a != f.zero()) {
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      EXPECT_EQ(f.pow(a, f.modulus() - 1), f.one());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Moduli, FieldAxioms,
                         ::testing::Values(7ULL, 101ULL, kMersenne31, 4294967311ULL,
                                           2305843009213693951ULL,
                                           18446744073709551557ULL));

TEST(FieldMatrixTest, ShapeChecks) {
  EXPECT_MVC_ERROR(FieldMatrix(2, 2, std::vector<Fe>(3)), ErrorCode::kShapeMismatch);
  PrimeField f(101);
  EXPECT_MVC_ERROR(mat_mul(f, FieldMatrix(2, 3), FieldMatrix(2, 3)),
                   ErrorCode::kDimensionMismatch);
  EXPECT_MVC_ERROR(mat_add(f, FieldMatrix(2, 3), FieldMatrix(3, 2)),
                   ErrorCode::kShapeMismatch);
}

TEST(FieldMatrixTest, MultiplyMatchesSchoolbook) {
  for (std::uint64_t q : std::initializer_list<std::uint64_t>{101ULL, kMersenne31, 18446744073709551557ULL}) {
    PrimeField f(q);
    std::mt19937_64 rng(q);
    for (int t = 0; t < 20; ++t) {
      FieldMatrix a(3, 4), b(4, 2);
      for (auto& e : a.entries()) e = f.from_uint(rng());
      for (auto& e : b.entries()) e = f.from_uint(rng());
      EXPECT_EQ(mat_mul(f, a, b), schoolbook(q, a, b));
    }
    // Long inner dimension exercises the accumulator reduction.
    FieldMatrix a(2, 300), b(300, 2);
    for (auto& e : a.entries()) e = Fe{q - 1};
    for (auto& e : b.entries()) e = Fe{q - 1};
    EXPECT_EQ(mat_mul(f, a, b), schoolbook(q, a, b));
  }
}

TEST(FieldMatrixTest, IdentityAndAxpy) {
  PrimeField f(101);
  FieldMatrix a(2, 2, {Fe{1}, Fe{2}, Fe{3}, Fe{4}});
  EXPECT_EQ(mat_mul(f, a, FieldMatrix::identity(2)), a);
  FieldMatrix y = a;
  axpy(f, y, Fe{100}, a);
  EXPECT_EQ(y, FieldMatrix(2, 2));
  EXPECT_EQ(scaled(f, Fe{2}, a), mat_add(f, a, a));
}

FieldMatrix scalar(std::uint64_t v) { return FieldMatrix(1, 1, {Fe{v}}); }

TEST(VandermondeTest, TwoPointExample) {
  PrimeField f(101);
  std::vector<Fe> pts{Fe{1}, Fe{2}};
  std::vector<FieldMatrix> vals{scalar(3), scalar(5)};
  auto c = solve_vandermonde(f, pts, vals);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], scalar(1));
  EXPECT_EQ(c[1], scalar(2));
}

std::vector<FieldMatrix> evaluate(const PrimeField& f, const std::vector<FieldMatrix>& coeffs,
                                  const std::vector<Fe>& pts) {
  std::vector<FieldMatrix> out;
  for (Fe x : pts) {
    FieldMatrix acc(coeffs[0].rows(), coeffs[0].cols());
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = mat_add(f, scaled(f, x, acc), coeffs[k]);
    }
    out.push_back(acc);
  }
  return out;
}

TEST(VandermondeTest, RecoversPlantedPolynomials) {
  for (std::size_t degree : {0u, 1u, 4u, 16u}) {
    PrimeField f;
    std::mt19937_64 rng(degree + 11);
    std::vector<FieldMatrix> coeffs;
    for (std::size_t k = 0; k <= degree; ++k) coeffs.push_back(random_matrix(f, 2, 3, rng));
    std::vector<Fe> pts;
    for (std::size_t k = 0; k <= degree; ++k) pts.push_back(f.from_uint(rng() | 1));
    EXPECT_EQ(solve_vandermonde(f, pts, evaluate(f, coeffs, pts)), coeffs) << degree;
  }
}

TEST(VandermondeTest, DuplicateNodesRejected) {
  PrimeField f(101);
  std::vector<Fe> pts{Fe{4}, Fe{9}, Fe{4}};
  std::vector<FieldMatrix> vals{scalar(1), scalar(2), scalar(3)};
  EXPECT_MVC_ERROR(solve_vandermonde(f, pts, vals), ErrorCode::kDuplicatePoint);
  EXPECT_MVC_ERROR(solve_vandermonde(f, std::vector<Fe>{Fe{1}}, vals), ErrorCode::kShapeMismatch);
}

TEST(RankTest, VandermondeIsFullRank) {
  PrimeField f;
  std::mt19937_64 rng(5);
  const std::size_t n = 12;
  FieldMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Fe x = f.from_uint(rng());
    Fe p = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p = f.mul(p, x);
    }
  }
  EXPECT_EQ(rank(f, v), n);
  for (std::size_t j = 0; j < n; ++j) v(n - 1, j) = v(0, j);
  EXPECT_EQ(rank(f, v), n - 1);
  EXPECT_EQ(rank(f, FieldMatrix(3, 5)), 0u);
}

TEST(IncrementalSolverTest, SolvesAndTracksRank) {
  PrimeField f(101);
  IncrementalSolver s(f, 2, 1);
  std::vector<Fe> r1{Fe{1}, Fe{1}}, r2{Fe{2}, Fe{2}}, r3{Fe{1}, Fe{100}};
  std::vector<Fe> b1{Fe{5}}, b2{Fe{10}}, b3{Fe{1}};
  EXPECT_TRUE(s.add_row(r1, b1));
  EXPECT_FALSE(s.add_row(r2, b2));
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_MVC_ERROR(s.solve(), ErrorCode::kSingularSystem);
  EXPECT_TRUE(s.add_row(r3, b3));
  ASSERT_TRUE(s.full_rank());
  auto x = s.solve();
  // x + y = 5, x - y = 1
  EXPECT_EQ(x[0][0].v, 3u);
  EXPECT_EQ(x[1][0].v, 2u);
  EXPECT_FALSE(s.add_row(r3, b3));
}

TEST(IncrementalSolverTest, MatchesPlantedSolution) {
  PrimeField f;
  std::mt19937_64 rng(17);
  const std::size_t n = 20, w = 3;
  std::vector<std::vector<Fe>> x(n, std::vector<Fe>(w));
  for (auto& row : x) for (auto& e : row) e = f.from_uint(rng());
  IncrementalSolver s(f, n, w);
  while (!s.full_rank()) {
    std::vector<Fe> row(n);
    for (auto& e : row) e = rng() % 3 == 0 ? f.from_uint(rng()) : f.zero();
    std::vector<Fe> rhs(w, f.zero());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < w; ++c) rhs[c] = f.add(rhs[c], f.mul(row[j], x[j][c]));
    }
    s.add_row(row, rhs);
  }
  EXPECT_EQ(s.solve(), x);
}

}  // namespace
}  // namespace mvc
