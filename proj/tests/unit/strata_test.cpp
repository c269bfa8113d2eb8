#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/strata.hpp"

namespace lg36 {
namespace {

using testing::field;

class StrataTest : public ::testing::Test {
 protected:
  // built once; the ideal is canonical so any seed gives the same basis
  static const QuadricIdeal<Fp>& ideal() {
    static const QuadricIdeal<Fp> I = build_quadric_ideal(SymplecticSpace<Fp>(field()), 1);
    return I;
  }
  PrimeField F = field();
  SymplecticSpace<Fp> V{F};
  const QuadricIdeal<Fp>* ideal_ = &ideal();
};

TEST_F(StrataTest, QuadricIdealDimensionIsPinned) {
  // pinned on first computation: 21 quadrics, the same on every seed
  EXPECT_EQ(ideal_->size(), 21u);
  for (std::uint64_t s = 2; s <= 5; ++s) EXPECT_EQ(build_quadric_ideal(V, s).size(), 21u);
}

TEST_F(StrataTest, QuadricsVanishOnSigmaOnly) {
  for (std::uint64_t i = 0; i < 200; ++i)
    EXPECT_TRUE(ideal_->vanishes_at(sample_sigma(V, 1000 + i).plucker.coords()));
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto g = sample_generic(V, 2000 + i);
    for (std::size_t k = 0; k < ideal_->size(); ++k) EXPECT_FALSE(ideal_->eval(k, CSpan<Fp>(g)).is_zero());
  }
}

TEST_F(StrataTest, LambdaNormalizationAndHomogeneity) {
  Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const auto w = sample_generic(V, rng.next());
    const Fp c = F.random_nonzero(rng);
    EXPECT_EQ(hitchin_endo(V, CSpan<Fp>(scaled(w, c))).lambda, c.pow(4) * hitchin_endo(V, CSpan<Fp>(w)).lambda);
  }
}

TEST_F(StrataTest, KSquaredIsLambda) {
  Rng rng(52);
  for (int i = 0; i < 50; ++i) {
    const auto h = hitchin_endo(V, CSpan<Fp>(sample_generic(V, rng.next())));
    EXPECT_EQ(h.K * h.K, h.lambda * Matrix<Fp>::identity(6, F));
  }
}

TEST_F(StrataTest, WitnessLabels) {
  Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    const auto p = sample_sigma(V, rng.next());
    EXPECT_EQ(stratum(V, p.plucker.coords()).kind, Stratum::kSigma);
    const auto om = sample_omega(V, rng.next());
    const auto st = stratum(V, CSpan<Fp>(om.w));
    EXPECT_EQ(st.kind, Stratum::kOmega);
    EXPECT_EQ(rank(stack(row_matrix(*st.x_omega), row_matrix(om.x))), 1u);
    EXPECT_EQ(stratum(V, CSpan<Fp>(sample_generic(V, rng.next()))).kind, Stratum::kGeneric);
  }
}

TEST_F(StrataTest, TangentLinesHaveLambdaZero) {
  Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    const auto p = sigma_point(V, random_lagrangian(V, rng));
    const auto T = tangent_space(V, p, rng);
    const auto v = random_combination(T.basis(), F, rng);
    if (rank(stack(row_matrix(v), row_matrix(p.plucker.coords()))) < 2) continue;
    EXPECT_TRUE(hitchin_endo(V, CSpan<Fp>(v)).lambda.is_zero());
    const auto st = stratum(V, CSpan<Fp>(v));
    EXPECT_EQ(st.kind, Stratum::kFSmoothLocus);
    EXPECT_EQ(sigma_point(V, *st.tangency).plucker, p.plucker);
  }
}

TEST_F(StrataTest, BisecantRoundTrip) {
  Rng rng(55);
  int split = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = sigma_point(V, random_lagrangian(V, rng)), q = sigma_point(V, random_lagrangian(V, rng));
    const auto w = axpy(p.plucker.coords(), F.random_nonzero(rng), q.plucker.coords());
    const auto b = bisecant_decompose(V, CSpan<Fp>(w));
    EXPECT_FALSE(b.tangent);
    const bool same = (b.p.plucker == p.plucker && b.q.plucker == q.plucker) ||
                      (b.p.plucker == q.plucker && b.q.plucker == p.plucker);
    EXPECT_TRUE(same);
    split += same;
  }
  EXPECT_EQ(split, 200);
}

// λ of a point on a bisecant of Σ-points is a square, so random points whose
// λ is a non-residue must report NOT_SPLIT.
TEST_F(StrataTest, NonSquareLambdaIsNotSplit) {
  Rng rng(56);
  int seen = 0;
  for (int i = 0; i < 50 && seen < 5; ++i) {
    const auto w = sample_generic(V, rng.next());
    if (F.sqrt(hitchin_endo(V, CSpan<Fp>(w)).lambda)) continue;
    ++seen;
    try {
      bisecant_decompose(V, CSpan<Fp>(w));
      ADD_FAILURE() << "expected NOT_SPLIT";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotSplit);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST_F(StrataTest, OmegaWitnessAndQOmega) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto om = sample_omega(V, 3000 + i);
    const auto wit = omega_witness(V, *ideal_, CSpan<Fp>(om.w));
    EXPECT_EQ(ProjPoint<Fp>(wit.x_omega), ProjPoint<Fp>(om.x));
    EXPECT_EQ(wit.p4.dim(), 4u);
    Rng rng(4000 + i);
    for (const auto& x : sample_q_omega(V, wit, 10, rng)) {
      const auto L = on_sigma(V, CSpan<Fp>(x));
      ASSERT_TRUE(L.has_value());
      EXPECT_EQ(rank(stack(*L, row_matrix(wit.x_omega))), 3u);
    }
  }
  EXPECT_THROW(omega_witness(V, *ideal_, CSpan<Fp>(sample_generic(V, 9))), Error);
}

TEST(StrataRational, SigmaAndGenericOverQ) {
  const RationalField Q;
  const SymplecticSpace<Rational> V(Q);
  Rng rng(57);
  const auto p = sigma_point(V, random_lagrangian(V, rng));
  EXPECT_EQ(stratum(V, p.plucker.coords()).kind, Stratum::kSigma);
  // a bisecant point over Q decomposes exactly when λ is a rational square
  const auto q = sigma_point(V, random_lagrangian(V, rng));
  const auto w = add(p.plucker.coords(), CSpan<Rational>(q.plucker.coords()));
  const auto b = bisecant_decompose(V, CSpan<Rational>(w));
  EXPECT_TRUE((b.p.plucker == p.plucker && b.q.plucker == q.plucker) ||
              (b.p.plucker == q.plucker && b.q.plucker == p.plucker));
}

}  // namespace
}  // namespace lg36
