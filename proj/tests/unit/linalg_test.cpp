#include <algkit/errors.hpp>
#include <algkit/linalg.hpp>
#include <algkit/matrix.hpp>
#include <algkit/rational.hpp>

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "test_support.hpp"

namespace algkit {
namespace {

using testing::random_matrix;
using testing::random_sparse_matrix;

TEST(Rational, CanonicalFormAfterArithmetic) {
  Rational a(2, 4);
  a.canonicalize();
  EXPECT_EQ(a.get_num(), 1);
  EXPECT_EQ(a.get_den(), 2);
  const Rational sum = Rational(1, 3) + Rational(1, 6);
  EXPECT_EQ(sum, Rational(1, 2));
  EXPECT_EQ(sum.get_den(), 2);
}

TEST(Rational, PrintAndParse) {
  EXPECT_EQ(to_pq_string(Rational(3)), "3/1");
  EXPECT_EQ(to_pq_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(to_pq_string(Rational(0)), "0/1");
  EXPECT_EQ(to_short_string(Rational(3)), "3");
  EXPECT_EQ(to_short_string(Rational(-2, 3)), "-2/3");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rref, Identity) {
  const auto r = rref(RationalMatrix::identity(3));
  EXPECT_EQ(r.matrix, RationalMatrix::identity(3));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, Zero) {
  const auto r = rref(RationalMatrix::zero(2, 4));
  EXPECT_EQ(r.matrix, RationalMatrix::zero(2, 4));
  EXPECT_TRUE(r.pivot_columns.empty());
}

TEST(Rref, HandElimination) {
  // [[2,4],[1,2]]: R1 /= 2 -> [1,2]; R2 -= R1 -> [0,0].
  const auto r = rref(RationalMatrix{{2, 4}, {1, 2}});
  EXPECT_EQ(r.matrix, (RationalMatrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.rank(), 1u);
}

TEST(Rref, FractionalPivots) {
  const auto r = rref(RationalMatrix{{3, 1}, {1, 2}});
  EXPECT_EQ(r.matrix, RationalMatrix::identity(2));
  EXPECT_EQ(rank(RationalMatrix{{Rational(1, 3), Rational(2, 3)}, {1, 2}}), 1u);
}

TEST(Kernel, IdentityHasTrivialKernel) {
  const Subspace k = kernel_basis(RationalMatrix::identity(4));
  EXPECT_EQ(k.dim(), 0u);
  EXPECT_EQ(k.ambient_dim(), 4u);
}

TEST(Kernel, ZeroMatrixKernelIsEverything) {
  const Subspace k = kernel_basis(RationalMatrix::zero(3, 5));
  EXPECT_EQ(k.dim(), 5u);
  EXPECT_EQ(k, Subspace::full(5));
}

TEST(Kernel, Substitution) {
  // x3 = 0, x1 = -x2.
  const Subspace k = kernel_basis(RationalMatrix{{1, 1, 0}, {0, 0, 1}});
  ASSERT_EQ(k.dim(), 1u);
  const std::vector<RationalVector> expected{{1, -1, 0}};
  EXPECT_EQ(k, Subspace::span(3, expected));
}

TEST(Intersect, Examples) {
  const std::vector<RationalVector> xy{{1, 0}, {0, 1}};
  const std::vector<RationalVector> diag{{1, 1}};
  const Subspace a = Subspace::span(2, xy);
  const Subspace b = Subspace::span(2, diag);
  EXPECT_EQ(intersect(a, b), b);
  EXPECT_EQ(intersect(b, b), b);
  EXPECT_EQ(intersect(b, Subspace::zero(2)), Subspace::zero(2));
}

TEST(Intersect, AmbientMismatch) {
  EXPECT_THROW(intersect(Subspace::full(2), Subspace::full(3)), AmbientMismatchError);
  EXPECT_THROW(sum(Subspace::full(2), Subspace::full(3)), AmbientMismatchError);
}

TEST(Nilpotent, Examples) {
  RationalMatrix strict(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r + 1; c < 4; ++c) strict(r, c) = Rational(int(r + c + 1));
  EXPECT_TRUE(is_nilpotent_matrix(strict));
  EXPECT_FALSE(is_nilpotent_matrix(RationalMatrix::identity(3)));
  EXPECT_TRUE(is_nilpotent_matrix(RationalMatrix{{0, 1}, {0, 0}}));
  EXPECT_FALSE(is_nilpotent_matrix(RationalMatrix{{1, 1}, {0, 0}}));
  EXPECT_TRUE(is_nilpotent_matrix(RationalMatrix::zero(0, 0)));
}

TEST(Nilpotent, NonSquareIsShapeError) {
  EXPECT_THROW(is_nilpotent_matrix(RationalMatrix(2, 3)), ShapeError);
}

TEST(Contains, Examples) {
  const std::vector<RationalVector> gens{{1, 0, 0}, {0, 1, 0}};
  const Subspace s = Subspace::span(3, gens);
  EXPECT_TRUE(contains(s, RationalVector{2, 3, 0}));
  EXPECT_FALSE(contains(s, RationalVector{0, 0, 1}));
  EXPECT_TRUE(contains(s, RationalVector{0, 0, 0}));
  EXPECT_FALSE(contains(Subspace::zero(3), RationalVector{1, 0, 0}));
  EXPECT_TRUE(contains(Subspace::zero(3), RationalVector{0, 0, 0}));
}

TEST(Contains, LengthMismatchIsShapeError) {
  EXPECT_THROW(contains(Subspace::full(3), RationalVector{1, 2}), ShapeError);
}

TEST(Subspace, EqualityIgnoresGeneratorChoice) {
  const std::vector<RationalVector> g1{{1, 2, 0}, {0, 1, 1}};
  const std::vector<RationalVector> g2{{1, 3, 1}, {2, 4, 0}, {1, 3, 1}};
  EXPECT_EQ(Subspace::span(3, g1), Subspace::span(3, g2));
  EXPECT_EQ(Subspace::span(3, g1).dim(), 2u);
}

TEST(MatrixFlatten, ColumnMajor) {
  const RationalMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(flatten(m), (RationalVector{1, 3, 2, 4}));
  EXPECT_EQ(unflatten(flatten(m), 2), m);
  EXPECT_EQ(flat_index(2, 1, 0), 1u);
  EXPECT_EQ(flat_index(2, 0, 1), 2u);
}

TEST(MatrixOps, ShapeErrors) {
  EXPECT_THROW(RationalMatrix(2, 3) * RationalMatrix(2, 3), ShapeError);
  EXPECT_THROW(RationalMatrix(2, 3) + RationalMatrix(3, 2), ShapeError);
}

TEST(MatrixOps, Inverse) {
  const RationalMatrix m{{2, 1}, {1, 1}};
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * m, RationalMatrix::identity(2));
  EXPECT_FALSE(inverse(RationalMatrix{{1, 2}, {2, 4}}).has_value());
}

// Randomized properties.

class LinalgProperty : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperty, RrefIdempotentAndShapePreserving) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 20; ++t) {
    const RationalMatrix m = random_sparse_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    const auto r = rref(m);
    EXPECT_EQ(r.matrix.rows(), m.rows());
    EXPECT_EQ(r.matrix.cols(), m.cols());
    EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
    for (std::size_t i = 1; i < r.pivot_columns.size(); ++i)
      EXPECT_LT(r.pivot_columns[i - 1], r.pivot_columns[i]);
  }
}

TEST_P(LinalgProperty, RankNullityAndExactKernel) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 20; ++t) {
    const RationalMatrix m = random_sparse_matrix(rng, 1 + rng() % 7, 1 + rng() % 7);
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.dim(), m.cols());
    EXPECT_EQ(rank(k.basis()), k.dim());
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST_P(LinalgProperty, IntersectCommutativeAssociative) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + rng() % 5;
    auto gen = [&] { return Subspace::span(random_sparse_matrix(rng, n, 1 + rng() % n)); };
    const Subspace a = gen(), b = gen(), c = gen();
    const Subspace ab = intersect(a, b);
    EXPECT_EQ(ab, intersect(b, a));
    EXPECT_EQ(intersect(ab, c), intersect(a, intersect(b, c)));
    EXPECT_EQ(ab.dim(), a.dim() + b.dim() - sum(a, b).dim());
    for (const auto& v : ab.basis_vectors()) {
      EXPECT_TRUE(contains(a, v));
      EXPECT_TRUE(contains(b, v));
    }
  }
}

TEST_P(LinalgProperty, NilpotentSquareIsNilpotent) {
  std::mt19937_64 rng(GetParam());
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 5;
    // Conjugate a strictly upper-triangular matrix by a random invertible one.
    RationalMatrix strict = random_matrix(rng, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c <= r; ++c) strict(r, c) = 0;
    const RationalMatrix p = testing::random_invertible(rng, n);
    const RationalMatrix m = p * strict * *inverse(p);
    ASSERT_TRUE(is_nilpotent_matrix(m));
    EXPECT_TRUE(is_nilpotent_matrix(m * m));
    EXPECT_FALSE(is_nilpotent_matrix(m + RationalMatrix::identity(n)));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperty, ::testing::Values(1, 2, 3, 4, 5));

}  // namespace
}  // namespace algkit
