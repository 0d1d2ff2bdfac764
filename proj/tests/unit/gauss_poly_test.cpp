#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "podbond/error.hpp"
#include "podbond/gauss_poly.hpp"

namespace podbond {
namespace {

const GaussPoly t = GaussPoly::t();

TEST(GaussPoly, Evaluation) {
  EXPECT_EQ(poly_eval(GaussPoly(1) + t * t, GaussianRational::i()), GaussianRational(0));
  EXPECT_EQ(poly_eval(GaussPoly(2) * t, GaussianRational(3)), GaussianRational(6));
  EXPECT_EQ(poly_eval(GaussPoly(1) + t * t, GaussianRational(2)), GaussianRational(5));
}

TEST(GaussPoly, ZeroPolynomialIsEmpty) {
  const GaussPoly z = t - t;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_TRUE(z.coeffs().empty());
  EXPECT_EQ(GaussPoly(std::vector<GaussianRational>{1, 2, 0, 0}).degree(), 1);
}

TEST(GaussPoly, Derivative) {
  const GaussPoly p = GaussPoly(3) + GaussPoly(2) * t + t * t * t;
  EXPECT_EQ(p.derivative(), GaussPoly(2) + GaussPoly(3) * t * t);
}

TEST(GaussPoly, GcdExamples) {
  const GaussPoly a = t * t + GaussPoly(1);
  std::vector<GaussPoly> f1{a, t * t * t + t};
  EXPECT_EQ(poly_gcd_many(f1), a);
  std::vector<GaussPoly> f2{t, t + GaussPoly(1)};
  EXPECT_EQ(poly_gcd_many(f2), GaussPoly(1));
  std::vector<GaussPoly> f3{GaussPoly(2) * t + GaussPoly(2), GaussPoly(4) * t + GaussPoly(4)};
  EXPECT_EQ(poly_gcd_many(f3), t + GaussPoly(1));
}

TEST(GaussPoly, GcdOfZeroFamilyThrows) {
  std::vector<GaussPoly> zeros{GaussPoly(), GaussPoly()};
  try {
    poly_gcd_many(zeros);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_family);
  }
}

GaussPoly random_poly(fixtures::Rng& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(rng.gaussian(9, 4));
  if (c.back().is_zero()) c.back() = GaussianRational(1);
  return GaussPoly(c);
}

TEST(GaussPoly, GcdDividesRandomProducts) {
  fixtures::Rng rng(3);
  for (int k = 0; k < 40; ++k) {
    const GaussPoly common = random_poly(rng, rng.integer(1, 3));
    std::vector<GaussPoly> family;
    for (int j = 0; j < 3; ++j) family.push_back(common * random_poly(rng, rng.integer(0, 3)));
    const GaussPoly g = poly_gcd_many(family);
    EXPECT_EQ(g.leading(), GaussianRational(1));
    EXPECT_GE(g.degree(), common.degree());
    for (const auto& p : family) EXPECT_TRUE(divmod(p, g).second.is_zero());
    EXPECT_TRUE(divmod(g, common.monic()).second.is_zero());
  }
}

TEST(GaussPoly, DivmodReconstructs) {
  fixtures::Rng rng(4);
  for (int k = 0; k < 40; ++k) {
    const GaussPoly a = random_poly(rng, 5), b = random_poly(rng, 2);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(t, GaussPoly()), Error);
}

}  // namespace
}  // namespace podbond
