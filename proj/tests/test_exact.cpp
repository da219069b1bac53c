#include <gtest/gtest.h>

#include "cohom/exact.hpp"
#include "test_support.hpp"

using namespace cohom;
using testsupport::Gen;

TEST(Exact, MakeScalarIsCanonical) {
  const Scalar x = make_scalar(6, -4);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(to_string(x), "-3/2");
  EXPECT_THROW(make_scalar(1, 0), std::domain_error);
}

TEST(Exact, RrefOfKnownMatrix) {
  const Matrix m = Matrix::from_ints({{2, 4, 6}, {1, 2, 4}, {3, 6, 9}});
  const Echelon e = echelon(m);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(e.form, Matrix::from_ints({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Exact, KernelAndInverse) {
  const Matrix m = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}});
  const Matrix k = kernel(m);
  EXPECT_EQ(k.rows(), 2u);
  for (const auto& v : k.row_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
  EXPECT_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
  const auto inv = inverse(Matrix::from_ints({{2, 1}, {1, 1}}));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, Matrix::from_ints({{1, -1}, {-1, 2}}));
}

TEST(Exact, DimensionMismatchThrows) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), DimensionError);
  EXPECT_THROW(subspace_sum(Subspace(2), Subspace(3)), DimensionError);
  EXPECT_THROW(dot(Vector(2), Vector(3)), DimensionError);
}

TEST(Exact, SubspaceBasics) {
  const Subspace u = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace v = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(subspace_sum(u, v), Subspace::full(3));
  EXPECT_EQ(subspace_intersect(u, v), Subspace::span(3, {{0, 1, 0}}));
  EXPECT_TRUE(u.contains(Vector{3, -2, 0}));
  EXPECT_FALSE(u.contains(Vector{0, 0, 1}));
  EXPECT_TRUE(Subspace(3).is_zero());
  const Vector c = u.coordinates(Vector{3, -2, 0});
  EXPECT_EQ(c, (Vector{3, -2}));
}

TEST(Exact, OrthocomplementStandardForm) {
  const Subspace w = Subspace::full(3);
  const Subspace v = Subspace::span(3, {{1, 1, 0}});
  const Subspace c = orthocomplement_in(v, w, Matrix::identity(3));
  EXPECT_EQ(c, Subspace::span(3, {{1, -1, 0}, {0, 0, 1}}));
}

TEST(Exact, RationalEigenspaces) {
  const auto es = rational_eigenspaces(Matrix::from_ints({{2, 0}, {0, -1}}));
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(es.at(Scalar(2)), Subspace::span(2, {{1, 0}}));
  EXPECT_THROW(rational_eigenspaces(Matrix::from_ints({{0, -1}, {1, 0}})), std::domain_error);
}

TEST(ExactProperty, RankAgreesWithBareissOracle) {
  Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix m = gen.matrix(1 + gen.below(6), 1 + gen.below(6), 40);
    EXPECT_EQ(rank(m), testsupport::bareiss_rank(m)) << "trial " << trial;
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(ExactProperty, RankNullity) {
  Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = gen.matrix(1 + gen.below(5), 1 + gen.below(6), 40);
    const Matrix k = kernel(m);
    EXPECT_EQ(rank(m) + k.rows(), m.cols());
    for (const auto& v : k.row_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(ExactProperty, InverseRoundTrip) {
  Gen gen(13);
  int invertible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + gen.below(5);
    const Matrix m = gen.matrix(n, n, 10);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), testsupport::bareiss_rank(m) == n);
    if (inv) {
      ++invertible;
      EXPECT_EQ(m * *inv, Matrix::identity(n));
      EXPECT_EQ(*inv * m, Matrix::identity(n));
    }
  }
  EXPECT_GT(invertible, 10);
}

TEST(ExactProperty, SubspaceLatticeDimensions) {
  Gen gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + gen.below(6);
    const Subspace u = Subspace::row_space(gen.matrix(gen.below(n + 1), n, 30));
    const Subspace v = Subspace::row_space(gen.matrix(gen.below(n + 1), n, 30));
    const Subspace s = subspace_sum(u, v);
    const Subspace i = subspace_intersect(u, v);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(s.contains(v));
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(v.contains(i));
  }
}

TEST(ExactProperty, SubspaceCanonicalUnderChangeOfSpanningSet) {
  Gen gen(15);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + gen.below(5);
    const Matrix m = gen.matrix(1 + gen.below(n), n, 20);
    const Subspace u = Subspace::row_space(m);
    std::vector<Vector> mixed;
    const auto rows = m.row_vectors();
    for (std::size_t r = 0; r < rows.size() + 2; ++r) mixed.push_back(gen.combination(rows));
    const Subspace w = Subspace::span(n, mixed);
    EXPECT_TRUE(u.contains(w));
    if (w.dim() == u.dim()) EXPECT_EQ(w, u);
  }
}

TEST(ExactProperty, OrthocomplementIsOrthogonalAndComplementary) {
  Gen gen(16);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + gen.below(5);
    const Subspace w = Subspace::row_space(gen.matrix(1 + gen.below(n), n, 20));
    std::vector<Vector> inside;
    for (std::size_t t = 0; t < gen.below(w.dim() + 1); ++t) inside.push_back(gen.combination(w.vectors()));
    const Subspace v = Subspace::span(n, inside);
    const Subspace c = orthocomplement_in(v, w, Matrix::identity(n));
    EXPECT_EQ(c.dim() + v.dim(), w.dim());
    EXPECT_TRUE(w.contains(c));
    for (const auto& x : c.vectors())
      for (const auto& y : v.vectors()) EXPECT_EQ(dot(x, y), 0);
  }
}

TEST(ExactProperty, SolveFindsSolutionsWhenConsistent) {
  Gen gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = gen.matrix(1 + gen.below(5), 1 + gen.below(5), 30);
    const Vector x = gen.vector(a.cols());
    const Vector b = a.apply(x);
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(a.apply(*sol), b);
  }
}
