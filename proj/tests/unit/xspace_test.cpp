#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "podbond/error.hpp"
#include "podbond/xspace.hpp"

namespace podbond {
namespace {

using G = GaussianRational;
using V = Vec3<Rational>;

bool all_zero(const ResidualReport<G>& r) {
  for (const auto& [name, v] : r.entries)
    if (!v.is_zero()) return false;
  return true;
}

ExactPoint random_coords(fixtures::Rng& rng) {
  Coords<G> c;
  for (auto& v : c) v = rng.gaussian(5, 3);
  c[coord::r] = G(1);
  return ExactPoint::from_coords(c);
}

ExactPoint random_boundary(fixtures::Rng& rng) {
  const Rational r(rng.integer(1, 9));
  const ExactPoint forms[] = {butterfly_normal_form<G>(), inversion_normal_form<G>(r), similarity_normal_form<G>(r),
                              left_collinearity_normal_form<G>(), right_collinearity_normal_form<G>(),
                              ExactPoint::vertex()};
  const ExactPoint& p = forms[rng.integer(0, 5)];
  return act(rng.isometry(), act(rng.isometry(), p, Side::right), Side::left);
}

TEST(Embed, Examples) {
  const ExactPoint id = embed(ExactIsometry());
  EXPECT_EQ(id.h(), G(1));
  EXPECT_EQ(id.M(), identity3<G>());
  EXPECT_EQ(id.r(), G(0));

  const ExactPoint t = embed(ExactIsometry::translation({1, 0, 0}));
  EXPECT_EQ(t.x(), (Vec3<G>{-1, 0, 0}));
  EXPECT_EQ(t.y(), (Vec3<G>{1, 0, 0}));
  EXPECT_EQ(t.r(), G(1));

  const Mat3<Rational> rz{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
  const ExactPoint p = embed(ExactIsometry::rotation(rz));
  EXPECT_EQ(p.M()[0][1], G(-1));
  EXPECT_EQ(p.x(), (Vec3<G>{}));
  EXPECT_EQ(p.r(), G(0));
}

TEST(Embed, SatisfiesGeneratorsExactly) {
  fixtures::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const ExactIsometry s = rng.isometry();
    const ExactPoint p = embed(s);
    EXPECT_TRUE(all_zero(defining_residuals(p)));
    EXPECT_EQ(p.x(), neg(matvec(transpose(p.M()), p.y())));
  }
}

TEST(DefiningResiduals, VertexAndNonMember) {
  EXPECT_TRUE(all_zero(defining_residuals(ExactPoint::vertex())));
  const ExactPoint bad = ExactPoint::from_blocks(G(1), identity3<G>(), {}, {}, G(1));
  const auto rep = defining_residuals(bad);
  EXPECT_EQ(rep.entries.back().first, "<y,y>-rh");
  EXPECT_EQ(rep.entries.back().second, G(-1));
  EXPECT_EQ(rep.max_abs, 1.0);
}

TEST(IsometryPoint, Normalization) {
  Coords<G> c{};
  c[coord::m(0, 1)] = G(3);
  c[coord::r] = G(6);
  const ExactPoint p = ExactPoint::from_coords(c);
  EXPECT_EQ(p[coord::m(0, 1)], G(1));
  EXPECT_EQ(p.r(), G(2));

  Coords<ComplexApprox> f{};
  f[coord::x(0)] = ComplexApprox(0.0, 2.0);
  f[coord::r] = ComplexApprox(-4.0);
  const FloatPoint q = FloatPoint::from_coords(f);
  EXPECT_EQ(q.r(), ComplexApprox(1.0));
  EXPECT_EQ(q.max_abs(), 1.0);
  EXPECT_THROW(ExactPoint::from_coords(Coords<G>{}), Error);
}

TEST(Product, TranslationExample) {
  const auto p = product(embed(ExactIsometry::translation({1, 0, 0})), embed(ExactIsometry::translation({0, 1, 0})));
  EXPECT_TRUE(proj_eq(p, embed(ExactIsometry::translation({1, 1, 0}))));
}

TEST(Product, HomomorphismOnRandomPairs) {
  fixtures::Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const ExactIsometry a = rng.isometry(), b = rng.isometry();
    EXPECT_TRUE(proj_eq(product(embed(a), embed(b)), embed(compose(a, b))));
  }
}

TEST(Product, IdentityIsNeutral) {
  fixtures::Rng rng(13);
  const ExactPoint id = embed(ExactIsometry());
  for (int k = 0; k < 20; ++k) {
    const ExactPoint p = random_boundary(rng);
    EXPECT_TRUE(proj_eq(product(id, p), p));
    EXPECT_TRUE(proj_eq(product(p, id), p));
  }
}

TEST(Product, ButterflySelfProductIsUndefined) {
  const ExactPoint b = butterfly_normal_form<G>();
  try {
    product(b, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undefined_product);
  }
  const FloatPoint f = butterfly_normal_form<ComplexApprox>();
  EXPECT_THROW(product(f, f), Error);
}

TEST(Product, ClosureOnX) {
  fixtures::Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    const ExactPoint a = random_boundary(rng);
    const ExactPoint b = k % 2 ? embed(rng.isometry()) : random_boundary(rng);
    try {
      EXPECT_TRUE(all_zero(defining_residuals(product(a, b))));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::undefined_product);
    }
  }
}

TEST(Product, AssociativeWhenDefined) {
  fixtures::Rng rng(15);
  for (int k = 0; k < 50; ++k) {
    const ExactPoint a = embed(rng.isometry()), b = random_boundary(rng), c = embed(rng.isometry());
    EXPECT_TRUE(proj_eq(product(product(a, b), c), product(a, product(b, c))));
    const ExactPoint d = random_boundary(rng);
    EXPECT_TRUE(proj_eq(product(product(d, a), c), product(d, product(a, c))));
  }
}

TEST(Act, ClosedFormsMatchGenericProduct) {
  fixtures::Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    const ExactPoint p = k % 2 ? random_boundary(rng) : random_coords(rng);
    const ExactIsometry s = rng.isometry();
    EXPECT_TRUE(proj_eq(act(s, p, Side::left), product(embed(s), p)));
    EXPECT_TRUE(proj_eq(act(s, p, Side::right), product(p, embed(s))));
    const V t = rng.vec();
    const ExactIsometry tr = ExactIsometry::translation(t);
    EXPECT_TRUE(proj_eq(act_translation(t, p, Side::left), product(embed(tr), p)));
    EXPECT_TRUE(proj_eq(act_translation(t, p, Side::right), product(p, embed(tr))));
    const ExactIsometry rot = ExactIsometry::rotation(s.M());
    EXPECT_TRUE(proj_eq(act_rotation(s.M(), p, Side::left), product(embed(rot), p)));
    EXPECT_TRUE(proj_eq(act_rotation(s.M(), p, Side::right), product(p, embed(rot))));
  }
}

TEST(Act, LeftTranslationClosedForm) {
  fixtures::Rng rng(17);
  const ExactPoint p = random_coords(rng);
  const V s = rng.vec();
  const Vec3<G> sg = convert<G>(s, [](const Rational& r) { return G(r); });
  const G h = p.h();
  const ExactPoint expected = ExactPoint::from_blocks(
      h, p.M(), add(neg(matvec(transpose(p.M()), sg)), p.x()), add(scale(h, sg), p.y()),
      h * dot(sg, sg) + p.r() + G(2) * dot(sg, p.y()));
  EXPECT_TRUE(proj_eq(act_translation(s, p, Side::left), expected));
}

TEST(Act, IdentityActsTrivially) {
  fixtures::Rng rng(18);
  const ExactPoint p = random_boundary(rng);
  EXPECT_TRUE(proj_eq(act(ExactIsometry(), p, Side::left), p));
  EXPECT_TRUE(proj_eq(act(ExactIsometry(), p, Side::right), p));
}

TEST(ProjEq, Examples) {
  fixtures::Rng rng(19);
  const ExactPoint p = random_coords(rng);
  Coords<G> five = p.coords();
  for (auto& v : five) v *= G(5);
  EXPECT_TRUE(proj_eq(p, ExactPoint::from_coords(five)));
  EXPECT_FALSE(proj_eq(embed(ExactIsometry()), ExactPoint::vertex()));

  Coords<ComplexApprox> b = butterfly_normal_form<ComplexApprox>().coords();
  for (auto& v : b) v *= ComplexApprox(-1.0);
  const FloatPoint fb = FloatPoint::from_coords(b);
  EXPECT_TRUE(proj_eq(fb, butterfly_normal_form<ComplexApprox>()));
  Coords<ComplexApprox> rotated = b;
  for (auto& v : rotated) v *= ComplexApprox(0.6, 0.8);
  EXPECT_TRUE(proj_eq(FloatPoint::from_coords(rotated), butterfly_normal_form<ComplexApprox>()));
}

TEST(ProjEq, FloatToleranceIsRespected) {
  const FloatPoint a = to_approx(inversion_normal_form<G>(Rational(2)));
  Coords<ComplexApprox> c = a.coords();
  c[coord::r] += ComplexApprox(1e-6);
  EXPECT_FALSE(proj_eq(a, FloatPoint::from_coords(c)));
  EXPECT_TRUE(proj_eq(a, FloatPoint::from_coords(c), TolerancePolicy{1e-5, 1e-5}));
}

TEST(NormalForms, Shapes) {
  const ExactPoint b = butterfly_normal_form<G>();
  EXPECT_EQ(b.M()[0][1], G::i());
  EXPECT_EQ(b.M()[1][1], G(-1));
  EXPECT_EQ(inversion_normal_form<G>(Rational(2)).r(), G(2));
  const ExactPoint s = similarity_normal_form<G>(Rational(3));
  EXPECT_EQ(s.x(), (Vec3<G>{1, G::i(), 0}));
  EXPECT_EQ(scale(G(3), s.y()), s.x());
  for (const ExactPoint& p : {b, inversion_normal_form<G>(Rational(2)), s, left_collinearity_normal_form<G>(),
                              right_collinearity_normal_form<G>()}) {
    EXPECT_TRUE(p.h().is_zero());
    EXPECT_TRUE(all_zero(defining_residuals(p)));
  }
}

TEST(Coord, Names) {
  EXPECT_EQ(coord::name(coord::h), "h");
  EXPECT_EQ(coord::name(coord::m(0, 1)), "m12");
  EXPECT_EQ(coord::name(coord::x(2)), "x3");
  EXPECT_EQ(coord::name(coord::r), "r");
}

}  // namespace
}  // namespace podbond
