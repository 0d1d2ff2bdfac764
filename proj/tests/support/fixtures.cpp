#include "fixtures.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <numbers>
#include <unistd.h>

namespace podbond::fixtures {

int Rng::integer(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

Rational Rng::rational(int range, int max_den) {
  const int num = integer(-range, range);
  return Rational(mpz_class(num), mpz_class(integer(1, max_den)));
}

GaussianRational Rng::gaussian(int range, int max_den) {
  Rational re = rational(range, max_den);
  return {re, rational(range, max_den)};
}

Vec3<Rational> Rng::vec(int range, int max_den) {
  Rational a = rational(range, max_den), b = rational(range, max_den);
  return {a, b, rational(range, max_den)};
}

Vec3<double> Rng::vec_double(double range) {
  const double a = uniform(-range, range), b = uniform(-range, range);
  return {a, b, uniform(-range, range)};
}

Direction Rng::direction() {
  const double z = uniform(-1.0, 1.0), phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double s = std::sqrt(1.0 - z * z);
  return Direction::from_vector({s * std::cos(phi), s * std::sin(phi), z});
}

Vec3<Rational> Rng::rational_unit() {
  const Rational a = rational(5, 3), b = rational(5, 3);
  const Rational n = a * a + b * b;
  const Rational den = n + Rational(1);
  return {Rational(2) * a / den, Rational(2) * b / den, (n - Rational(1)) / den};
}

ExactIsometry Rng::isometry() { return random_rational_isometry(eng_()); }

Pod generic_pod(Rng& rng, std::size_t n) {
  std::vector<Vec3<Rational>> platform, base;
  std::vector<Rational> d2;
  for (std::size_t i = 0; i < n; ++i) {
    platform.push_back(rng.vec());
    base.push_back(rng.vec());
    d2.push_back(Rational(rng.integer(1, 400)));
  }
  return Pod(platform, base, d2);
}

FloatIsometry bricard_pose(double theta) {
  return FloatIsometry(z_rotation(theta), {0.0, 0.0, std::sqrt(2.0 + std::cos(theta))});
}

BricardFixture bricard_fixture(int fit_samples) {
  const std::vector<Vec3<Rational>> platform = {
      {1, 2, 0}, {-2, 1, 1}, {3, -1, 2}, {Rational(1, 2), 3, -1}, {-1, -2, 3}, {2, 2, -2}};
  BricardFixture f;
  for (int k = 0; k < fit_samples; ++k) f.fit_angles.push_back(2.0 * std::numbers::pi * k / fit_samples);
  std::vector<Vec3<Rational>> base;
  std::vector<Rational> d2;
  for (const auto& p : platform) {
    // |x|^2 = 2 <x, C> + k  =>  d^2 = k + |C|^2
    Eigen::MatrixXd a(fit_samples, 4);
    Eigen::VectorXd b(fit_samples);
    for (int k = 0; k < fit_samples; ++k) {
      const Vec3<double> x = bricard_pose(f.fit_angles[k]).apply(to_double(p));
      a.row(k) << 2.0 * x[0], 2.0 * x[1], 2.0 * x[2], 1.0;
      b(k) = dot(x, x);
    }
    const Eigen::Vector4d sol = a.colPivHouseholderQr().solve(b);
    const Vec3<double> c{sol(0), sol(1), sol(2)};
    base.push_back(exact_vec(c));
    d2.push_back(Rational::from_double(sol(3) + dot(c, c)));
  }
  f.pod = Pod(platform, base, d2);
  return f;
}

ButterflyFixture butterfly_fixture() {
  const Vec3<Rational> point{1, -1, 2};
  const Vec3<Rational> dir{Rational(2, 3), Rational(-2, 3), Rational(1, 3)};
  const OrientedLine<Rational> axis(point, dir);
  const ExactIsometry pose = random_rational_isometry(11);
  const ExactIsometry back = pose.inverse();
  auto on_axis = [&](const Rational& k) { return add(point, scale(k, dir)); };
  const std::vector<Vec3<Rational>> platform = {back.apply(on_axis(0)), back.apply(on_axis(1)),
                                                back.apply(on_axis(-2)), {3, 1, -2}, {-1, 4, 0}, {2, -3, 5}};
  const std::vector<Vec3<Rational>> base = {{4, 0, 1}, {-2, 3, 3}, {0, -5, 1}, on_axis(3), on_axis(-1),
                                            on_axis(Rational(1, 2))};
  return {Pod::posed(platform, base, pose), axis, pose, transform(ExactIsometry(), rotation_motion(axis), pose)};
}

Pod equal_collinear_pod() {
  const Vec3<Rational> o{1, 0, 0}, d{1, 2, 2};
  std::vector<Vec3<Rational>> platform;
  for (int k : {0, 1, -1, 3}) platform.push_back(add(o, scale(Rational(k), d)));
  platform.push_back({2, -3, 1});
  platform.push_back({-4, 1, 5});
  const std::vector<Vec3<Rational>> base = {{3, 1, -1}, {0, 4, 2}, {-2, -2, 1}, {5, 0, 3}, {2, -1, 3}, {2, -1, 3}};
  return Pod::posed(platform, base, ExactIsometry());
}

Pod parallel_lines_pod() {
  const Vec3<Rational> dp{1, 1, 0}, db{0, 1, 2};
  std::vector<Vec3<Rational>> platform, base;
  for (int k : {0, 2, -1}) platform.push_back(scale(Rational(k), dp));
  for (int k : {1, -3, 4}) platform.push_back(add(Vec3<Rational>{0, 0, 3}, scale(Rational(k), dp)));
  for (int k : {0, 1, 3}) base.push_back(add(Vec3<Rational>{1, 0, 0}, scale(Rational(k), db)));
  for (int k : {-1, 2, 5}) base.push_back(add(Vec3<Rational>{-2, 1, 1}, scale(Rational(k), db)));
  return Pod::posed(platform, base, ExactIsometry());
}

Pod similarity_pod(const Rational& gamma) {
  const std::vector<Vec3<Rational>> platform = {{1, 2, 0}, {-2, 1, 3}, {3, -1, 2}, {0, 4, -1}, {-1, -3, 1}, {2, 2, 5}};
  const std::vector<Rational> heights = {4, -1, 2, 0, 7, -3};
  std::vector<Vec3<Rational>> base;
  for (std::size_t i = 0; i < platform.size(); ++i)
    base.push_back({-gamma * platform[i][0], -gamma * platform[i][1], heights[i]});
  return Pod::posed(platform, base, ExactIsometry());
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("podbond_" + std::to_string(::getpid()) + "_" + name);
}

std::filesystem::path write_json(const std::string& name, const Json& j) {
  const auto path = temp_path(name);
  std::ofstream(path) << j.dump(2) << '\n';
  return path;
}

}  // namespace podbond::fixtures
