#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "podbond/error.hpp"
#include "podbond/rigid.hpp"

namespace podbond {
namespace {

using V = Vec3<Rational>;

const Mat3<Rational> kRotZ90{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};

TEST(DirectIsometry, Apply) {
  EXPECT_EQ(ExactIsometry().apply(V{1, 2, 3}), (V{1, 2, 3}));
  EXPECT_EQ(ExactIsometry::translation({0, 0, 5}).apply(V{1, 1, 0}), (V{1, 1, 5}));
  EXPECT_EQ(ExactIsometry::rotation(kRotZ90).apply(V{1, 0, 0}), (V{0, 1, 0}));
}

TEST(DirectIsometry, RejectsNonRotations) {
  const Mat3<Rational> reflection{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  EXPECT_THROW(ExactIsometry(reflection, V{}), Error);
  const Mat3<Rational> shear{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_THROW(ExactIsometry(shear, V{}), Error);
}

TEST(DirectIsometry, ComposeExamples) {
  EXPECT_EQ(compose(ExactIsometry::translation({1, 2, 3}), ExactIsometry::translation({-1, 0, 4})),
            ExactIsometry::translation({0, 2, 7}));
  const ExactIsometry s = random_rational_isometry(5);
  EXPECT_EQ(compose(s, ExactIsometry()), s);
  const ExactIsometry r = ExactIsometry::rotation(kRotZ90);
  const Mat3<Rational> rot180{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  EXPECT_EQ(compose(r, r), ExactIsometry::rotation(rot180));
}

TEST(DirectIsometry, ComposeIsApplicationOrder) {
  fixtures::Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const ExactIsometry a = rng.isometry(), b = rng.isometry();
    const V p = rng.vec();
    EXPECT_EQ(compose(a, b).apply(p), a.apply(b.apply(p)));
  }
}

TEST(DirectIsometry, InverseAndDerivedCoordinates) {
  fixtures::Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const ExactIsometry s = rng.isometry();
    EXPECT_EQ(compose(s, s.inverse()), ExactIsometry());
    EXPECT_EQ(s.x(), neg(matvec(transpose(s.M()), s.y())));
    EXPECT_EQ(dot(s.x(), s.x()), s.r());
    EXPECT_EQ(s.r(), dot(s.y(), s.y()));
  }
}

TEST(RandomRationalIsometry, OrthogonalAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ExactIsometry s = random_rational_isometry(seed);
    EXPECT_EQ(matmul(transpose(s.M()), s.M()), identity3<Rational>());
    EXPECT_EQ(det3(s.M()), Rational(1));
    EXPECT_EQ(s, random_rational_isometry(seed));
  }
  EXPECT_NE(random_rational_isometry(1), random_rational_isometry(2));
}

TEST(QuaternionRotation, UnitQuaternionIsIdentity) {
  EXPECT_EQ(quaternion_rotation(1, 0, 0, 0), identity3<Rational>());
  EXPECT_EQ(quaternion_rotation(3, 0, 0, 0), identity3<Rational>());
  EXPECT_THROW(quaternion_rotation(0, 0, 0, 0), Error);
}

TEST(ZRotationHalfAngle, QuarterTurnAtOne) { EXPECT_EQ(z_rotation_half_angle(1), kRotZ90); }

TEST(RotationSouthTo, CarriesSouthPole) {
  fixtures::Rng rng(9);
  const V south{0, 0, -1};
  for (int k = 0; k < 50; ++k) {
    const V d = rng.rational_unit();
    const Mat3<Rational> m = rotation_south_to(d);
    EXPECT_EQ(matvec(m, south), d);
    EXPECT_EQ(matmul(transpose(m), m), identity3<Rational>());
    EXPECT_EQ(det3(m), Rational(1));
  }
  EXPECT_EQ(matvec(rotation_south_to(V{0, 0, 1}), south), (V{0, 0, 1}));
  EXPECT_EQ(matvec(rotation_south_to(south), south), south);
}

TEST(RotationSouthTo, FloatMatchesExact) {
  fixtures::Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const V d = rng.rational_unit();
    const Mat3<Rational> e = rotation_south_to(d);
    const Mat3<double> f = rotation_south_to(to_double(d));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(f[i][j], e[i][j].to_double(), 1e-12);
  }
}

}  // namespace
}  // namespace podbond
