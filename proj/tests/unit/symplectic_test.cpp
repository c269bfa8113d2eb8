#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/symplectic.hpp"

namespace lg36 {
namespace {

using testing::field;

Vec<Fp> basis20(int i, int j, int k, const PrimeField& F) {
  Vec<Fp> v(20, F.zero());
  v[static_cast<std::size_t>(wedge::index_of(i, j, k))] = F.one();
  return v;
}

Matrix<Fp> unit_rows(std::initializer_list<int> idx, const PrimeField& F) {
  Matrix<Fp> L(0, 6);
  for (int i : idx) {
    Vec<Fp> e(6, F.zero());
    e[static_cast<std::size_t>(i)] = F.one();
    L.append_row(e);
  }
  return L;
}

class SymplecticTest : public ::testing::Test {
 protected:
  PrimeField F = field();
  SymplecticSpace<Fp> V{F};
};

TEST_F(SymplecticTest, KernelOfDAlphaIs14Dimensional) {
  EXPECT_EQ(V.w_dim(), 14u);
  EXPECT_EQ(rank(V.d_alpha()), 6u);
  for (std::size_t i = 0; i < V.w_dim(); ++i) EXPECT_TRUE(V.in_w(V.w_basis().row_span(i)));
  SymplecticSpace<Rational> VQ{RationalField()};
  EXPECT_EQ(VQ.w_dim(), 14u);
}

TEST_F(SymplecticTest, DAlphaOnBasisTriples) {
  // e1∧e2∧e3 has no α-paired indices
  EXPECT_TRUE(is_zero_vec(d_alpha(V, CSpan<Fp>(basis20(0, 1, 2, F)))));
  // e1∧e4∧e2 = -e1∧e2∧e4 contracts to α(e1, e4) e2 = e2
  const auto v = d_alpha(V, CSpan<Fp>(scaled(basis20(0, 1, 3, F), -F.one())));
  Vec<Fp> e2(6, F.zero());
  e2[1] = F.one();
  EXPECT_EQ(v, e2);
}

TEST_F(SymplecticTest, IsLagrangianExamples) {
  EXPECT_TRUE(is_lagrangian(V, unit_rows({0, 1, 2}, F)));
  EXPECT_FALSE(is_lagrangian(V, unit_rows({0, 1, 3}, F)));
  EXPECT_THROW(is_lagrangian(V, unit_rows({0, 1}, F)), Error);
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto B = random_symmetric<Fp>(F, rng);
    EXPECT_TRUE(is_lagrangian(V, exp_lagrangian(V, standard_frame(V), B)));
  }
}

TEST_F(SymplecticTest, AdaptedFrameOnStandardPairIsIdentity) {
  const auto fr = adapted_frame(V, unit_rows({0, 1, 2}, F), unit_rows({3, 4, 5}, F));
  EXPECT_EQ(fr.E, (Matrix<Fp>::identity(6, F)));
}

TEST_F(SymplecticTest, AdaptedFrameIsSymplectic) {
  Rng rng(42);
  // swapped standard pair, then random transverse pairs
  const auto sw = adapted_frame(V, unit_rows({3, 4, 5}, F), unit_rows({0, 1, 2}, F));
  EXPECT_EQ(sw.E * V.alpha() * sw.E.transpose(), V.alpha());
  for (int i = 0; i < 100; ++i) {
    const auto U = random_lagrangian(V, rng);
    const auto W = random_transverse_lagrangian(V, U, rng);
    const auto fr = adapted_frame(V, U, W);
    EXPECT_EQ(fr.E * V.alpha() * fr.E.transpose(), V.alpha());
    EXPECT_EQ(rank(stack(fr.U0(), U)), 3u);
    EXPECT_EQ(rank(stack(fr.Uinf(), W)), 3u);
  }
  EXPECT_THROW(adapted_frame(V, unit_rows({0, 1, 2}, F), unit_rows({0, 1, 2}, F)), Error);
}

TEST_F(SymplecticTest, ExpPointCoordinates) {
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto B = random_symmetric<Fp>(F, rng);
    const auto m = plucker20(exp_lagrangian(V, standard_frame(V), B));
    // (1 : B : ∧²B : det B): the corner minors
    EXPECT_EQ(m[static_cast<std::size_t>(wedge::index_of(0, 1, 2))], F.one());
    EXPECT_EQ(m[static_cast<std::size_t>(wedge::index_of(3, 4, 5))], det(B, F));
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(m[static_cast<std::size_t>(wedge::index_of(0, 1, 3 + j))], B(2, static_cast<std::size_t>(j)));
  }
  const auto p0 = exp_point(V, standard_frame(V), Matrix<Fp>(3, 3));
  EXPECT_EQ(p0.plucker, ProjPoint<Fp>(V.to_w(basis20(0, 1, 2, F))));
  Matrix<Fp> ns(3, 3);
  ns(0, 1) = F.one();
  EXPECT_THROW(exp_point(V, standard_frame(V), ns), Error);
}

TEST_F(SymplecticTest, ExpPointsLieInW) {
  Rng rng(44);
  for (int i = 0; i < 1000; ++i) {
    const auto L = exp_lagrangian(V, standard_frame(V), random_symmetric<Fp>(F, rng));
    EXPECT_TRUE(V.in_w(plucker20(L)));
  }
}

TEST_F(SymplecticTest, RechartingGivesSamePoint) {
  Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    const auto p = sigma_point(V, random_lagrangian(V, rng));
    const auto U0 = random_transverse_lagrangian(V, random_lagrangian(V, rng), rng);
    const auto fr = adapted_frame(V, U0, random_transverse_lagrangian(V, U0, rng));
    const auto B = chart(V, fr, p.lagrangian);
    if (!B) continue;
    EXPECT_EQ(exp_point(V, fr, *B).plucker, p.plucker);
  }
}

TEST_F(SymplecticTest, TangentSpaceIsP6ThroughPoint) {
  Rng rng(46);
  for (int i = 0; i < 100; ++i) {
    const auto p = sigma_point(V, random_lagrangian(V, rng));
    const auto T = tangent_space(V, p, rng);
    EXPECT_EQ(T.dim(), 6u);
    EXPECT_TRUE(T.contains(p.plucker.coords()));
  }
}

TEST_F(SymplecticTest, WPairing) {
  const auto a = V.to_w(basis20(0, 1, 2, F)), b = V.to_w(basis20(3, 4, 5, F));
  EXPECT_EQ(w_pairing(V, CSpan<Fp>(a), CSpan<Fp>(b)), F.one());
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_vec<Fp>(14, F, rng);
    EXPECT_TRUE(w_pairing(V, CSpan<Fp>(w), CSpan<Fp>(w)).is_zero());
  }
  EXPECT_EQ(rank(V.pairing()), 14u);
}

}  // namespace
}  // namespace lg36
