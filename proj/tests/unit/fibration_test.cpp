#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/fibration.hpp"

namespace lg36 {
namespace {

using testing::field;
using testing::pluckers;
using testing::same_triple;
using testing::transverse_triple;

class FibrationTest : public ::testing::Test {
 protected:
  PrimeField F = field();
  SymplecticSpace<Fp> V{F};
};

TEST_F(FibrationTest, SectionContainsPointsAndEllVanishes) {
  Rng rng(71);
  const auto xi = transverse_triple(V, rng);
  const auto T = section_through(V, pluckers(xi), 9, 5);
  EXPECT_EQ(T.p9.dim(), 9u);
  EXPECT_EQ(T.ell.rows(), 4u);
  EXPECT_EQ(rank(T.ell), 4u);
  for (const auto& p : xi) {
    EXPECT_TRUE(T.p9.contains(p.plucker.coords()));
    EXPECT_TRUE(is_zero_vec(ell_values(T, p.plucker.coords())));
  }
  EXPECT_TRUE((T.ell * T.p9.basis().transpose()).is_zero());
}

TEST_F(FibrationTest, SectionIsDeterministicAndTowerNests) {
  Rng rng(72);
  const auto xi = transverse_triple(V, rng);
  const auto a = section_through(V, pluckers(xi), 10, 9), b = section_through(V, pluckers(xi), 10, 9);
  EXPECT_EQ(a.p9, b.p9);
  ASSERT_TRUE(a.p10.has_value());
  EXPECT_EQ(a.p10->dim(), 10u);
  EXPECT_TRUE(a.p10->contains(a.p9));
  // exactly a 3-dim subspace of span(ell) vanishes on p10
  EXPECT_EQ(rank(a.ell * a.p10->basis().transpose()), 1u);
  EXPECT_EQ(section_through(V, {}, 9, 3).p9.dim(), 9u);
  EXPECT_THROW(section_through(V, {}, 8, 3), Error);
}

TEST_F(FibrationTest, ValueIsProportionalAlongCurve) {
  Rng rng(73);
  for (int i = 0; i < 20; ++i) {
    const auto xi = transverse_triple(V, rng);
    const auto T = section_through(V, pluckers(xi), 9, rng.next());
    const auto h = fibration_value(V, xi, T);
    const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
    for (int k = 0; k < 20; ++k) {
      const auto v = fibration_value_at(C, T, Param<Fp>::at(F.from_int(k + 2)));
      EXPECT_EQ(ProjPoint<Fp>(v), h.h);
    }
    // ... and along the triple's own points it is zero
    EXPECT_TRUE(is_zero_vec(fibration_value_at(C, T, Param<Fp>::infinity())));
  }
}

TEST_F(FibrationTest, PermutationInvariance) {
  Rng rng(74);
  const auto xi = transverse_triple(V, rng);
  const auto T = section_through(V, pluckers(xi), 9, 1);
  const auto h = fibration_value(V, xi, T);
  EXPECT_EQ(fibration_value(V, {xi[2], xi[0], xi[1]}, T), h);
  EXPECT_EQ(fibration_value(V, {xi[1], xi[0], xi[2]}, T), h);
  EXPECT_TRUE(same_fiber(V, xi, xi, T));
}

TEST_F(FibrationTest, IndependentTriplesGiveDifferentValues) {
  Rng rng(75);
  int distinct = 0;
  for (int i = 0; i < 50; ++i) {
    const auto a = transverse_triple(V, rng), b = transverse_triple(V, rng);
    auto pts = pluckers(a);
    for (const auto& p : pluckers(b)) pts.push_back(p);
    const auto T = section_through(V, pts, 9, rng.next());
    distinct += !same_fiber(V, a, b, T);
  }
  EXPECT_GE(distinct, 49);
}

TEST_F(FibrationTest, TripleOffSectionThrows) {
  Rng rng(76);
  const auto a = transverse_triple(V, rng), b = transverse_triple(V, rng);
  const auto T = section_through(V, pluckers(a), 9, 2);
  try {
    fibration_value(V, b, T);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOnSection);
  }
}

TEST_F(FibrationTest, SigmaRoundTripAndSpanMeet) {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const auto xi = transverse_triple(V, rng);
    const auto T = section_through(V, pluckers(xi), 9, rng.next());
    const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
    EXPECT_TRUE(same_triple(intersect_with_section(V, C, T), xi));
    EXPECT_TRUE(span_meet_check(V, C, T));
  }
}

// A curve whose span lies in the P^9 is flagged rather than misreported.
TEST_F(FibrationTest, CubicInsideSectionIsFlagged) {
  Rng rng(78);
  const auto xi = transverse_triple(V, rng);
  const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
  std::vector<Vec<Fp>> span;
  for (std::size_t r = 0; r < 4; ++r) span.push_back(C.span3().basis().row(r));
  const auto T = section_through(V, span, 9, 4);
  try {
    intersect_with_section(V, C, T);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCubicInSection);
  }
  EXPECT_THROW(fibration_value_of_curve(C, T, F), Error);
}

TEST(FibrationRational, ValueOverQ) {
  const RationalField Q;
  const SymplecticSpace<Rational> V(Q);
  Rng rng(79);
  const auto xi = transverse_triple(V, rng);
  const auto T = section_through(V, pluckers(xi), 9, 1);
  const auto h = fibration_value(V, xi, T);
  const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
  EXPECT_EQ(ProjPoint<Rational>(fibration_value_at(C, T, Param<Rational>::at(Rational(7, 2)))), h.h);
  EXPECT_TRUE(same_triple(intersect_with_section(V, C, T), xi));
}

}  // namespace
}  // namespace lg36
