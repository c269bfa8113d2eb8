#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/group.hpp"

namespace lg36 {
namespace {

using testing::field;
using testing::transverse_triple;

Matrix<Fp> random_antisymmetric(std::size_t n, const PrimeField& F, Rng& rng) {
  Matrix<Fp> A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      A(i, j) = F.random(rng);
      A(j, i) = -A(i, j);
    }
  return A;
}

TEST(Pfaffian, SquaresToDeterminant) {
  const auto F = field();
  Rng rng(91);
  for (std::size_t n : {2u, 4u, 6u}) {
    for (int i = 0; i < 20; ++i) {
      const auto A = random_antisymmetric(n, F, rng);
      const Fp pf = pfaffian(A);
      EXPECT_EQ(pf * pf, det(A, F));
    }
  }
  // Pf(J) for α = x1∧x4 + x2∧x5 + x3∧x6
  const SymplecticSpace<Fp> V(F);
  const Fp pfj = pfaffian(V.alpha());
  EXPECT_EQ(pfj * pfj, F.one());
}

TEST(FormalClass, Bookkeeping) {
  EXPECT_EQ(formal_class("xx"), formal_class(""));
  EXPECT_EQ(formal_class("xyz"), formal_class("zyx"));
  EXPECT_EQ(formal_class("xyzy"), formal_class("zyxy"));
  EXPECT_EQ(formal_class("xyyx"), formal_class(""));
  EXPECT_FALSE(formal_class("xy") == formal_class("yx"));
  const auto f = formal_class("x");
  EXPECT_EQ(f.curve, -1);
  EXPECT_EQ(f.marks[0], 1);
  EXPECT_EQ(f.c_inf, -1);
  EXPECT_THROW(mark_index('w'), Error);
}

// One marked setup shared by the tests below.
struct Fixture {
  PrimeField F = field();
  SymplecticSpace<Fp> V{F};
  QuadricIdeal<Fp> ideal = build_quadric_ideal(V, 1);
  MarkedFano<Fp> X = marked_fano_setup(V, 17, ideal);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

class GroupTest : public ::testing::Test {
 protected:
  const Fixture& fx = fixture();
  const SymplecticSpace<Fp>& V = fx.V;
  const PrimeField& F = fx.F;
  const MarkedFano<Fp>& X = fx.X;
};

TEST_F(GroupTest, SetupShape) {
  EXPECT_EQ(X.p10().dim(), 10u);
  EXPECT_TRUE(X.curve_in_x(X.C0));
  EXPECT_EQ(rank(X.pX), 3u);
  for (const auto& m : X.marks) {
    EXPECT_TRUE(dot(m.h.coords(), m.tangency.plucker.coords()).is_zero());
    // the mark hyperplane contains span3(C0)
    for (std::size_t r = 0; r < 4; ++r) EXPECT_TRUE(dot(m.h.coords(), X.C0.span3().basis().row_span(r)).is_zero());
  }
}

TEST_F(GroupTest, BetaHasTheConjugateLinesAsEigenplanes) {
  for (const auto& m : X.marks) {
    const auto beta = beta_for_mark(V, X.C0, m.tangency.lagrangian);
    EXPECT_TRUE(is_antisymmetric(beta));
    const auto span7 = beta_span7(V, beta);
    EXPECT_EQ(span7.dim(), 7u);
    EXPECT_TRUE(span7.contains(X.C0.span3()));
    EXPECT_TRUE(span7.contains(m.tangency.plucker.coords()));
    try {
      const auto Y = segre_from_lines(V, segre_from_beta(V, beta));
      EXPECT_EQ(Y.span7, span7);
    } catch (const Error& e) {
      EXPECT_TRUE(is_resamplable(e.code())) << e.what();
    }
  }
}

TEST_F(GroupTest, ResidualIsBisecantInvolution) {
  for (std::size_t m = 0; m < 3; ++m) {
    const auto C1 = residual_cubic(V, X, X.C0, m);
    EXPECT_TRUE(X.curve_in_x(C1));
    EXPECT_FALSE(curves_equal(C1, X.C0, F));
    EXPECT_EQ(curve_intersection(X.C0, C1, F).length, 2);
    EXPECT_TRUE(curves_equal(residual_cubic(V, X, C1, m), X.C0, F));
    for (int t = 0; t < 5; ++t)
      EXPECT_TRUE(on_sigma(V, C1.curve.point(Param<Fp>::at(F.from_int(t)))).has_value());
  }
}

TEST_F(GroupTest, ChainIdentities) {
  auto eq = [&](const char* a, const char* b) {
    return curves_equal(chain_apply(V, X, X.C0, a), chain_apply(V, X, X.C0, b), F);
  };
  EXPECT_TRUE(eq("xyz", "zyx"));
  EXPECT_TRUE(eq("yy", ""));
  EXPECT_TRUE(eq("xyzy", "zyxy"));
  EXPECT_TRUE(eq("xyyx", ""));
  EXPECT_FALSE(eq("xy", "yx"));
}

TEST_F(GroupTest, ChainImagesStayInOneFiber) {
  const auto h0 = fibration_value_of_curve(X.C0, X.tower, F);
  for (const char* w : {"x", "yz", "zxy", "xyzx"}) {
    const auto C = chain_apply(V, X, X.C0, w);
    EXPECT_TRUE(X.curve_in_x(C));
    EXPECT_EQ(fibration_value_of_curve(C, X.tower, F), h0) << w;
  }
}

TEST_F(GroupTest, FindChainPointInvertsResidual) {
  for (std::size_t m = 0; m < 3; ++m) {
    const auto C1 = residual_cubic(V, X, X.C0, m);
    const auto cp = find_chain_point(V, X, X.C0, C1, static_cast<const QuarticForm<Fp>*>(nullptr), 5);
    Vec<Fp> e(3, F.zero());
    e[m] = F.one();
    EXPECT_EQ(cp.coords, ProjPoint<Fp>(e));
    EXPECT_EQ(ProjPoint<Fp>(cp.h), X.marks[m].h);
    // also from a non-base curve
    const auto D = chain_apply(V, X, X.C0, "yz");
    EXPECT_EQ(find_chain_point(V, X, D, residual_cubic(V, X, D, m), static_cast<const QuarticForm<Fp>*>(nullptr), 6).coords, ProjPoint<Fp>(e));
  }
}

TEST_F(GroupTest, RecoverTangencyFromMarkHyperplane) {
  for (const auto& m : X.marks) EXPECT_EQ(recover_tangency(V, m.h.coords()).plucker, m.tangency.plucker);
  Rng rng(92);
  EXPECT_THROW(recover_tangency(V, CSpan<Fp>(random_vec<Fp>(14, F, rng))), Error);
}

TEST_F(GroupTest, SetupIsDeterministic) {
  const auto Y = marked_fano_setup(V, 17, fx.ideal);
  EXPECT_TRUE(curves_equal(Y.C0, X.C0, F));
  EXPECT_EQ(Y.pX, X.pX);
}

// Across many setups the split routes (rational conjugate lines) agree with
// the base-field construction whenever they apply.
TEST(SegreRoutes, SplitRoutesAgree) {
  const auto F = field();
  const SymplecticSpace<Fp> V(F);
  const auto ideal = build_quadric_ideal(V, 1);
  int split = 0, common = 0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto X = marked_fano_setup(V, 100 + s, ideal);
    for (std::size_t m = 0; m < 3; ++m) {
      const auto span7 = beta_span7(V, beta_for_mark(V, X.C0, X.marks[m].tangency.lagrangian));
      const auto C1 = residual_cubic(V, X, X.C0, m);
      try {
        const auto Y = segre_through(V, X.C0, X.marks[m]);
        EXPECT_TRUE(is_conjugate(V, Y.lines));
        EXPECT_EQ(Y.span7, span7);
        ++split;
      } catch (const Error& e) {
        EXPECT_TRUE(is_resamplable(e.code())) << e.what();
      }
      try {
        EXPECT_EQ(segre_from_common_lines(V, X.C0, C1, s).span7, span7);
        ++common;
      } catch (const Error& e) {
        EXPECT_TRUE(is_resamplable(e.code())) << e.what();
      }
    }
  }
  EXPECT_GT(split, 0);
  EXPECT_GT(common, 0);
}

TEST(SegreLines, NonConjugateLinesRejected) {
  const auto F = field();
  const SymplecticSpace<Fp> V(F);
  Rng rng(93);
  ConjugateLines<Fp> cl;
  for (auto& L : cl.L) L = Matrix<Fp>::random(2, 6, F, rng);
  try {
    segre_from_lines(V, cl);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConjugacyFail);
  }
}

}  // namespace
}  // namespace lg36
