#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "podbond/json_io.hpp"
#include "podbond/motion.hpp"

namespace podbond::fixtures {

/// Small deterministic generator for test data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int integer(int lo, int hi);
  double uniform(double lo, double hi);
  /// num/den with |num| <= range, 1 <= den <= max_den.
  Rational rational(int range = 20, int max_den = 7);
  GaussianRational gaussian(int range = 20, int max_den = 7);
  Vec3<Rational> vec(int range = 20, int max_den = 7);
  Vec3<double> vec_double(double range = 5.0);
  /// Uniform point of S^2.
  Direction direction();
  /// Rational point of S^2 (inverse stereographic image of a rational pair).
  Vec3<Rational> rational_unit();
  ExactIsometry isometry();
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

Pod generic_pod(Rng& rng, std::size_t n = 6);

/// Rotation by theta about z followed by the translation sqrt(2 + cos theta) along z.
FloatIsometry bricard_pose(double theta);

/// Hexapod whose base points are least-squares sphere centers of the
/// platform points along bricard_pose.
struct BricardFixture {
  Pod pod;
  std::vector<double> fit_angles;
};
BricardFixture bricard_fixture(int fit_samples = 12);

/// p1..p3 on a line g, P4..P6 on a line G, posed so that g lands on G, with
/// the rotation family about G.
struct ButterflyFixture {
  Pod pod;
  OrientedLine<Rational> axis;
  ExactIsometry pose;
  RationalMotion motion;
};
ButterflyFixture butterfly_fixture();

/// p1..p4 on a line, P5 = P6.
Pod equal_collinear_pod();
/// p1..p3 and p4..p6 on parallel lines; P1..P3 and P4..P6 on parallel lines.
Pod parallel_lines_pod();
/// Base points -gamma (a_i, b_i) with arbitrary heights.
Pod similarity_pod(const Rational& gamma);

/// Unique path under the system temp directory.
std::filesystem::path temp_path(const std::string& name);
std::filesystem::path write_json(const std::string& name, const Json& j);

}  // namespace podbond::fixtures
