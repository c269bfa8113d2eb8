#include <gtest/gtest.h>

#include "generators.hpp"
#include "lg36/field.hpp"

namespace lg36 {
namespace {

using testing::field;

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(3), Error);
  EXPECT_THROW(PrimeField(10005), Error);
  EXPECT_NO_THROW(PrimeField(10007));
}

TEST(PrimeField, FieldAxiomsOnRandomTriples) {
  const auto F = field();
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Fp a = F.random(rng), b = F.random(rng), c = F.random(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), F.one());
  }
}

TEST(PrimeField, FermatPower) {
  const auto F = field();
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Fp a = F.random_nonzero(rng);
    EXPECT_EQ(a.pow(testing::kP - 1), F.one());
  }
}

TEST(PrimeField, SqrtOfSquares) {
  const auto F = field();
  Rng rng(13);
  int nonsquares = 0;
  for (int i = 0; i < 200; ++i) {
    const Fp a = F.random_nonzero(rng);
    const auto r = F.sqrt(a * a);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, a * a);
    const auto s = F.sqrt(a);
    if (s) EXPECT_EQ(*s * *s, a);
    else ++nonsquares;
  }
  // about half of F_p^* are non-squares
  EXPECT_GT(nonsquares, 60);
  EXPECT_LT(nonsquares, 140);
}

TEST(PrimeField, ParseReducesNegatives) {
  const auto F = field();
  EXPECT_EQ(F.parse("-1"), F.from_int(10006));
  EXPECT_EQ(F.parse("10008"), F.one());
  EXPECT_THROW(F.parse("abc"), Error);
}

TEST(PrimeField, MixedModuliThrow) {
  const PrimeField F(10007), G(10009);
  EXPECT_THROW((void)(F.one() + G.one()), Error);
}

TEST(PrimeField, UnboundZeroAdoptsModulus) {
  const auto F = field();
  Fp z;
  z += F.from_int(5);
  EXPECT_EQ(z.modulus(), testing::kP);
  EXPECT_EQ(z, F.from_int(5));
}

TEST(Rational, ArithmeticAndText) {
  const RationalField Q;
  const Rational a(3, 7), b(-2, 5);
  EXPECT_EQ((a + b).to_string(), "1/35");
  EXPECT_EQ((a * b).to_string(), "-6/35");
  EXPECT_EQ(Q.parse("6/14"), a);
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW((void)(a / Q.zero()), Error);
}

TEST(Rational, SqrtExactOnly) {
  const RationalField Q;
  EXPECT_EQ(*Q.sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(Q.sqrt(Rational(2)).has_value());
  EXPECT_FALSE(Q.sqrt(Rational(-1)).has_value());
}

}  // namespace
}  // namespace lg36
