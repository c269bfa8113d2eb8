#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/fast_kernel.hpp"
#include "lg36/linalg.hpp"

namespace lg36 {
namespace {

using testing::field;
using testing::random_invertible;
using testing::random_of_rank;

TEST(Linalg, RankNullityOnPlantedRank) {
  const auto F = field();
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t R = 1 + rng.below(8), C = 1 + rng.below(8);
    const std::size_t r = rng.below(std::min(R, C) + 1);
    const auto M = random_of_rank<Fp>(R, C, r, F, rng);
    EXPECT_EQ(rank(M), r);
    const auto K = kernel(M, F);
    EXPECT_EQ(K.rows(), C - r);
    if (K.rows() > 0) {
      EXPECT_TRUE((M * K.transpose()).is_zero());
      EXPECT_EQ(rank(K), K.rows());
    }
  }
}

TEST(Linalg, LeftKernelAnnihilates) {
  const auto F = field();
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const auto M = random_of_rank<Fp>(6, 4, 3, F, rng);
    const auto L = left_kernel(M, F);
    EXPECT_EQ(L.rows(), 3u);
    EXPECT_TRUE((L * M).is_zero());
  }
}

TEST(Linalg, DeterminantIsMultiplicative) {
  const auto F = field();
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto A = Matrix<Fp>::random(5, 5, F, rng), B = Matrix<Fp>::random(5, 5, F, rng);
    EXPECT_EQ(det(A * B, F), det(A, F) * det(B, F));
  }
  EXPECT_TRUE(det(random_of_rank<Fp>(4, 4, 3, F, rng), F).is_zero());
}

TEST(Linalg, InverseAndSolve) {
  const auto F = field();
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    const auto A = random_invertible<Fp>(6, F, rng);
    EXPECT_EQ(A * inverse(A, F), (Matrix<Fp>::identity(6, F)));
    const auto x = random_vec<Fp>(6, F, rng);
    const auto b = apply(A, CSpan<Fp>(x));
    const auto y = solve(A, CSpan<Fp>(b));
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(*y, x);
  }
}

TEST(Linalg, SolveReportsInconsistency) {
  const auto F = field();
  Rng rng(25);
  const auto A = random_of_rank<Fp>(4, 4, 2, F, rng);
  Vec<Fp> b;
  do b = random_vec<Fp>(4, F, rng);
  while (rank(stack(A.transpose(), row_matrix(b))) == 2);
  EXPECT_FALSE(solve(A, CSpan<Fp>(b)).has_value());
}

TEST(Linalg, CoordsInRows) {
  const auto F = field();
  Rng rng(26);
  const auto B = random_of_rank<Fp>(3, 7, 3, F, rng);
  const auto c = random_vec<Fp>(3, F, rng);
  const auto v = row_times(CSpan<Fp>(c), B);
  const auto got = coords_in_rows(B, CSpan<Fp>(v));
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, c);
}

TEST(Linalg, RationalKernel) {
  const RationalField Q;
  Rng rng(27);
  const auto M = random_of_rank<Rational>(3, 5, 2, Q, rng);
  const auto K = kernel(M, Q);
  EXPECT_EQ(K.rows(), 3u);
  EXPECT_TRUE((M * K.transpose()).is_zero());
}

// The delayed-reduction kernel must agree with the generic one.
TEST(FastKernel, AgreesWithGenericKernel) {
  const auto F = field();
  Rng rng(28);
  for (int i = 0; i < 20; ++i) {
    const std::size_t R = 5 + rng.below(30), C = 5 + rng.below(30);
    const auto M = random_of_rank<Fp>(R, C, rng.below(std::min(R, C) + 1), F, rng);
    std::vector<std::vector<std::uint64_t>> raw(R, std::vector<std::uint64_t>(C));
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c) raw[r][c] = M(r, c).value();
    const auto fast = fp_kernel(raw, C, testing::kP);
    const auto K = kernel(M, F);
    ASSERT_EQ(fast.size(), K.rows());
    for (std::size_t k = 0; k < K.rows(); ++k)
      for (std::size_t c = 0; c < C; ++c) EXPECT_EQ(fast[k][c], K(k, c).value());
    EXPECT_EQ(fp_rank(raw, C, testing::kP), rank(M));
  }
}

}  // namespace
}  // namespace lg36
