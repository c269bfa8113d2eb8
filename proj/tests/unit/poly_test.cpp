#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "lg36/poly.hpp"

namespace lg36 {
namespace {

using testing::field;

UniPoly<Fp> from_roots(const std::vector<Fp>& roots, const PrimeField& F) {
  UniPoly<Fp> f = UniPoly<Fp>::constant(F.one());
  for (const auto& r : roots) f = f * UniPoly<Fp>::linear_root(r, F);
  return f;
}

TEST(Poly, InterpolationReproducesValues) {
  const auto F = field();
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    std::vector<Fp> c;
    for (int k = 0; k < 6; ++k) c.push_back(F.random(rng));
    const UniPoly<Fp> f(c);
    std::vector<Fp> xs, ys;
    for (int k = 0; k < 6; ++k) {
      xs.push_back(F.from_int(k * 3 + 1));
      ys.push_back(f(xs.back()));
    }
    EXPECT_EQ(interpolate(xs, ys, F), f);
  }
}

TEST(Poly, DivmodIdentity) {
  const auto F = field();
  Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    std::vector<Fp> a, b;
    for (int k = 0; k < 7; ++k) a.push_back(F.random(rng));
    for (int k = 0; k < 3; ++k) b.push_back(F.random(rng));
    b.push_back(F.random_nonzero(rng));
    const UniPoly<Fp> f(a), g(b);
    const auto [q, r] = f.divmod(g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
  }
}

TEST(Poly, GcdOfPlantedFactors) {
  const auto F = field();
  Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    std::vector<Fp> common, a, b;
    for (int k = 0; k < 2; ++k) common.push_back(F.random(rng));
    a = common;
    b = common;
    a.push_back(F.random(rng));
    b.push_back(F.random(rng));
    if (a.back() == b.back() || a.back() == common[0] || a.back() == common[1] || b.back() == common[0] ||
        b.back() == common[1])
      continue;
    EXPECT_EQ(gcd(from_roots(a, F), from_roots(b, F)).monic(), from_roots(common, F));
  }
}

TEST(Poly, RootsOfSplitPolynomials) {
  const auto F = field();
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    std::vector<Fp> roots;
    for (int k = 0; k < 4; ++k) roots.push_back(F.random(rng));
    auto got = uniroots(from_roots(roots, F), F);
    std::sort(roots.begin(), roots.end(), [](const Fp& x, const Fp& y) { return x.value() < y.value(); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::sort(got.begin(), got.end(), [](const Fp& x, const Fp& y) { return x.value() < y.value(); });
    EXPECT_EQ(got, roots);
  }
}

TEST(Poly, IrreducibleQuadraticHasNoRoots) {
  const auto F = field();
  // x^2 - n for a non-residue n
  Rng rng(35);
  Fp n;
  do n = F.random_nonzero(rng);
  while (F.sqrt(n));
  EXPECT_TRUE(uniroots(UniPoly<Fp>(std::vector<Fp>{-n, F.zero(), F.one()}), F).empty());
}

TEST(Poly, RationalRoots) {
  const RationalField Q;
  // (2x - 1)(x + 3)(x - 5)
  const UniPoly<Rational> f(std::vector<Rational>{Rational(15), Rational(-28), Rational(-5), Rational(2)});
  auto r = uniroots(f, Q);
  ASSERT_EQ(r.size(), 3u);
  for (const auto& x : r) EXPECT_TRUE(f(x).is_zero());
}

TEST(Poly, ResultantVanishesOnCommonRoot) {
  const auto F = field();
  Rng rng(36);
  const Fp a = F.random(rng);
  const auto f = from_roots({a, F.random(rng)}, F), g = from_roots({a, F.random(rng), F.random(rng)}, F);
  EXPECT_TRUE(resultant(f, g, F).is_zero());
  const auto h = from_roots({a + F.one()}, F);
  EXPECT_EQ(resultant(from_roots({a}, F), h, F).is_zero(), false);
}

TEST(Poly, BinaryGcdCountsInfinity) {
  const auto F = field();
  // s·t has roots t = 0 and infinity; t(s + t) has t = 0 and t = -1. Common: t = 0 only.
  const BinaryForm<Fp> f{UniPoly<Fp>(std::vector<Fp>{F.zero(), F.one()}), 2};
  const BinaryForm<Fp> g{UniPoly<Fp>(std::vector<Fp>{F.zero(), F.one(), F.one()}), 2};
  const auto d = binary_gcd(std::vector<BinaryForm<Fp>>{f, g});
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->first.degree() + d->second, 1);
}

}  // namespace
}  // namespace lg36
