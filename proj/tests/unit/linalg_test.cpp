#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lindeg/errors.hpp"
#include "lindeg/linalg.hpp"
#include "lindeg/sampling.hpp"
#include "oracles.hpp"

using namespace lindeg;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

Matrix proj(const Field& f, std::size_t m, std::vector<std::size_t> j) { return Matrix::projection(f, m, j); }

}  // namespace

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field::prime(1), ValidationError);
  EXPECT_THROW(Field::prime(4), ValidationError);
  EXPECT_THROW(Field::prime(65537), ValidationError);
  EXPECT_NO_THROW(Field::prime(65521));
  EXPECT_EQ(Field::prime(101).name(), "GF(101)");
  EXPECT_EQ(Q.name(), "Q");
}

TEST(Rank, IdentityZeroAndProjection) {
  EXPECT_EQ(rank(Matrix::identity(Q, 3)), 3u);
  EXPECT_EQ(rank(Matrix(Q, 2, 4)), 0u);
  EXPECT_EQ(rank(proj(Q, 3, {1})), 2u);
}

TEST(Compose, ProjectionsCompose) {
  const Matrix c = compose(proj(Q, 3, {1}), proj(Q, 3, {2}));
  EXPECT_EQ(c, proj(Q, 3, {1, 2}));
  EXPECT_EQ(rank(c), 1u);
}

TEST(Compose, IdentityIsNeutral) {
  const long long e[] = {1, 2, 0, -3, 5, 7};
  const Matrix a = Matrix::from_integers(Q, 2, 3, e);
  EXPECT_EQ(compose(a, Matrix::identity(Q, 3)), a);
}

TEST(Compose, ImageInsideKernelGivesZero) {
  // B = e1 e2^T has image Span(e1); A = e2 e3^T kills e1.
  Matrix a(Q, 3, 3), b(Q, 3, 3);
  a.set(1, 2, 1);
  b.set(0, 1, 1);
  EXPECT_TRUE(compose(a, b).is_zero());
}

TEST(Compose, RejectsMismatch) {
  EXPECT_THROW(compose(Matrix(Q, 2, 3), Matrix(Q, 2, 3)), ValidationError);
  EXPECT_THROW(compose(Matrix(Q, 2, 2), Matrix(F2, 2, 2)), ValidationError);
}

TEST(ExactEntries, ParsesFractions) {
  const std::vector<std::string> e = {"1", "-3/7", "6/4", "0"};
  const Matrix a = Matrix::from_strings(Q, 2, 2, e);
  EXPECT_EQ(a.at(0, 1), mpq_class(-3, 7));
  EXPECT_EQ(a.entry_string(1, 0), "3/2");
  EXPECT_EQ(rank(a), 2u);
}

TEST(ExactEntries, RejectsBadInput) {
  const std::vector<std::string> zero_den = {"1/0"};
  const std::vector<std::string> decimal = {"0.5"};
  EXPECT_THROW(Matrix::from_strings(Q, 1, 1, zero_den), ValidationError);
  EXPECT_THROW(Matrix::from_strings(Q, 1, 1, decimal), ValidationError);
  const std::vector<std::string> half = {"1/2"};
  EXPECT_THROW(Matrix::from_strings(F2, 1, 1, half), ValidationError);
  EXPECT_EQ(Matrix::from_strings(Field::prime(5), 1, 1, half).at(0, 0), 3);
}

TEST(Subspaces, KernelOfProjection) {
  const Subspace k = kernel(proj(F2, 3, {1}));
  const std::size_t e1[] = {1};
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k, Subspace::coordinate(F2, 3, e1));
}

TEST(Subspaces, IdentityFixesSubspace) {
  const long long rows[] = {1, 1, 0, 0, 1, 1};
  const Subspace v = Subspace::span(Matrix::from_integers(F2, 2, 3, rows));
  EXPECT_EQ(map_subspace(Matrix::identity(F2, 3), v), v);
}

TEST(Subspaces, SumOfIndependentLines) {
  const std::size_t e1[] = {1}, e2[] = {2};
  const Subspace s = sum(Subspace::coordinate(F2, 3, e1), Subspace::coordinate(F2, 3, e2));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(contains(s, Subspace::coordinate(F2, 3, e1)));
  EXPECT_FALSE(contains(Subspace::coordinate(F2, 3, e1), s));
}

TEST(Subspaces, CanonicalFormIgnoresSpanningSet) {
  const long long a[] = {1, 2, 3, 4, 0, 1, 1, 1};
  const long long b[] = {1, 3, 4, 5, 2, 5, 7, 9, 3, 8, 11, 14};  // rows a1+a2, 2a1+a2, 3a1+2a2
  const Subspace x = Subspace::span(Matrix::from_integers(Q, 2, 4, a));
  const Subspace y = Subspace::span(Matrix::from_integers(Q, 3, 4, b));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.basis(), y.basis());
}

TEST(Subspaces, ImageAndKernelDimensionsAddUp) {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_low_rank(Q, 4, 5, static_cast<std::size_t>(uniform(rng, 0, 4)), rng);
    EXPECT_EQ(image(a).dim() + kernel(a).dim(), 5u);
    EXPECT_TRUE((a * kernel(a).basis().transposed()).is_zero());
  }
}

TEST(Rank, CompositionNeverIncreasesRank) {
  Rng rng(11);
  for (const Field& f : {Q, Field::prime(3), Field::prime(101)}) {
    for (int t = 0; t < 100; ++t) {
      const auto r1 = static_cast<std::size_t>(uniform(rng, 0, 4));
      const auto r2 = static_cast<std::size_t>(uniform(rng, 0, 4));
      const Matrix a = random_low_rank(f, 4, 4, r1, rng);
      const Matrix b = random_low_rank(f, 4, 4, r2, rng);
      EXPECT_LE(rank(compose(a, b)), std::min(rank(a), rank(b)));
    }
  }
}

TEST(Solve, InverseAndLinearSystems) {
  Rng rng(3);
  const Matrix a = random_invertible(Q, 4, rng);
  EXPECT_EQ(a * inverse(a), Matrix::identity(Q, 4));
  EXPECT_THROW(inverse(Matrix(Q, 2, 2)), PreconditionError);
  const Matrix b = random_matrix(Q, 4, 2, rng);
  const auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, b);
  const Matrix p = proj(Q, 2, {1});
  const long long rhs[] = {1, 0};
  EXPECT_FALSE(solve(p, Matrix::from_integers(Q, 2, 1, rhs)).has_value());
}

TEST(AllSubspaces, CountsMatchGaussianBinomials) {
  for (std::uint32_t p : {2u, 3u})
    for (int m = 0; m <= 4; ++m)
      for (int k = 0; k <= m; ++k) {
        const auto subs = all_subspaces(Field::prime(p), static_cast<std::size_t>(m), static_cast<std::size_t>(k));
        EXPECT_EQ(subs.size(), oracle::gaussian(m, k, p)) << "p=" << p << " m=" << m << " k=" << k;
        EXPECT_EQ(gaussian_binomial(static_cast<std::size_t>(m), static_cast<std::size_t>(k), p),
                  oracle::gaussian(m, k, p));
        EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
        EXPECT_EQ(std::adjacent_find(subs.begin(), subs.end()), subs.end());
        for (const Subspace& s : subs) EXPECT_EQ(s.dim(), static_cast<std::size_t>(k));
      }
}

TEST(AllSubspaces, RequiresPrimeField) {
  EXPECT_THROW(all_subspaces(Q, 3, 1), ValidationError);
}
