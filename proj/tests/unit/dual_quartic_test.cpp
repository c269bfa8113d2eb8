#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/dual_quartic.hpp"

namespace lg36 {
namespace {

using testing::field;

// Interpolated once for the whole suite (a few seconds).
const QuarticForm<Fp>& quartic() {
  static const QuarticForm<Fp> Q = [] {
    const SymplecticSpace<Fp> V(field());
    return interpolate_dual_quartic(sample_tangent_hyperplanes(V, 1, 2600));
  }();
  return Q;
}

class DualQuarticTest : public ::testing::Test {
 protected:
  PrimeField F = field();
  SymplecticSpace<Fp> V{F};
};

TEST_F(DualQuarticTest, TangentHyperplaneKillsTangentSpace) {
  Rng rng(81);
  for (int i = 0; i < 20; ++i) {
    const auto p = sigma_point(V, random_lagrangian(V, rng));
    const auto s = tangent_hyperplane_at(V, p, Matrix<Fp>(0, 14), rng);
    EXPECT_TRUE(dot(s.h.coords(), p.plucker.coords()).is_zero());
    const auto T = tangent_space(V, p, rng);
    for (std::size_t r = 0; r < T.basis().rows(); ++r) EXPECT_TRUE(dot(s.h.coords(), T.basis().row_span(r)).is_zero());
  }
}

TEST_F(DualQuarticTest, ConstrainedHyperplaneContainsSpan) {
  Rng rng(82);
  const auto C = Matrix<Fp>::random(4, 14, F, rng);
  const auto s = sample_tangent_hyperplane(V, 7, C);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_TRUE(dot(s.h.coords(), C.row_span(r)).is_zero());
}

TEST_F(DualQuarticTest, SamplesAreInGeneralPosition) {
  const auto s = sample_tangent_hyperplanes(V, 3, 300);
  EXPECT_EQ(interpolation_rank(s), 300u);
}

TEST_F(DualQuarticTest, SamplingIsThreadCountIndependent) {
  const auto a = sample_tangent_hyperplanes(V, 4, 40, 1), b = sample_tangent_hyperplanes(V, 4, 40, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].h.coords(), b[i].h.coords());
}

TEST_F(DualQuarticTest, KernelIsOneDimensionalAndFingerprintPinned) {
  const auto& Q = quartic();
  EXPECT_EQ(Q.nvars, 14u);
  EXPECT_EQ(Q.coeffs.size(), 2380u);
  EXPECT_FALSE(Q.is_zero());
  // pinned on first computation (p = 10007, master seed 1, 2600 samples)
  EXPECT_EQ(quartic_fingerprint(Q), "a45d2c515bca1c4d");
}

TEST_F(DualQuarticTest, VanishesOnHeldOutTangentHyperplanes) {
  for (const auto& s : sample_tangent_hyperplanes(V, 99, 200)) EXPECT_TRUE(quartic().eval(s.h.coords(), F).is_zero());
}

TEST_F(DualQuarticTest, NonzeroOffTheDualVariety) {
  Rng rng(83);
  int nonzero = 0;
  for (int i = 0; i < 100; ++i) nonzero += !quartic().eval(random_vec<Fp>(14, F, rng), F).is_zero();
  EXPECT_GE(nonzero, 99);
}

TEST_F(DualQuarticTest, RestrictionToLinesHasDegreeFour) {
  Rng rng(84);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_vec<Fp>(14, F, rng), b = random_vec<Fp>(14, F, rng);
    const auto f = restrict_to_line(quartic(), CSpan<Fp>(a), CSpan<Fp>(b));
    EXPECT_EQ(f.degree, 4);
    EXPECT_EQ(f.poly.degree(), 4);
  }
}

TEST_F(DualQuarticTest, RestrictionComposesWithEvaluation) {
  Rng rng(85);
  const auto L = Matrix<Fp>::random(3, 14, F, rng);
  const auto R = restrict_quartic(quartic(), L);
  EXPECT_EQ(R.nvars, 3u);
  EXPECT_EQ(R.coeffs.size(), 15u);
  for (int i = 0; i < 20; ++i) {
    const auto y = random_vec<Fp>(3, F, rng);
    EXPECT_EQ(R.eval(y, F), quartic().eval(row_times(CSpan<Fp>(y), L), F));
  }
  // restricted to a point of its zero set the quartic is identically zero
  const auto s = sample_tangent_hyperplanes(V, 5, 1);
  Matrix<Fp> pt(0, 14);
  pt.append_row(s[0].h.coords());
  EXPECT_THROW(restrict_quartic(quartic(), pt), Error);
}

TEST_F(DualQuarticTest, ProportionalityIsProjective) {
  auto Q2 = quartic();
  for (auto& c : Q2.coeffs) c *= F.from_int(17);
  EXPECT_TRUE(proportional(Q2, quartic()));
  EXPECT_EQ(normalized(Q2).coeffs, quartic().coeffs);
  Q2.coeffs[5] += F.one();
  EXPECT_FALSE(proportional(Q2, quartic()));
}

TEST_F(DualQuarticTest, CrosscheckAgainstLambda) {
  const auto tang = sample_tangent_hyperplanes(V, 11, 30);
  const auto rep = crosscheck_hitchin(V, quartic(), tang, 30, 12);
  EXPECT_EQ(rep.both_zero, rep.tangent_samples);
  EXPECT_EQ(rep.ratio_agreements, rep.generic_samples);
  EXPECT_TRUE(rep.proportional);
}

}  // namespace
}  // namespace lg36
