#include <benchmark/benchmark.h>

#include <random>

#include "podbond/analyze.hpp"
#include "podbond/boundary.hpp"
#include "podbond/xspace.hpp"

namespace {

using namespace podbond;

void BM_ProductExact(benchmark::State& state) {
  const ExactPoint a = embed(random_rational_isometry(1)), b = embed(random_rational_isometry(2));
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_ProductExact);

void BM_ProductFloat(benchmark::State& state) {
  const FloatPoint a = embed(to_float(random_rational_isometry(1))), b = embed(to_float(random_rational_isometry(2)));
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_ProductFloat);

void BM_ClassifyExact(benchmark::State& state) {
  const ExactPoint p = act(random_rational_isometry(3), similarity_normal_form<GaussianRational>(Rational(2)), Side::left);
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_ClassifyExact);

void BM_NormalFormFloat(benchmark::State& state) {
  const FloatPoint p = to_approx(act(random_rational_isometry(4),
                                     act(random_rational_isometry(5), butterfly_normal_form<GaussianRational>(), Side::right),
                                     Side::left));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p));
}
BENCHMARK(BM_NormalFormFloat);

void BM_MobiusFit(benchmark::State& state) {
  std::mt19937_64 eng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const std::complex<double> a(1, 2), b(-1, 0.5), c(0.3, -1), d(2, 1);
  std::vector<std::complex<double>> qs, Qs;
  for (int i = 0; i < 6; ++i) {
    const std::complex<double> q(u(eng), u(eng));
    qs.push_back(q);
    Qs.push_back((a * q + b) / (c * q + d));
  }
  for (auto _ : state) benchmark::DoNotOptimize(mobius_fit(qs, Qs));
}
BENCHMARK(BM_MobiusFit);

void BM_SearchGenericHexapod(benchmark::State& state) {
  std::mt19937_64 eng(5);
  auto small = [&] { return Rational(static_cast<int>(eng() % 21) - 10); };
  std::vector<Vec3<Rational>> p, P;
  std::vector<Rational> d2;
  for (int i = 0; i < 6; ++i) {
    p.push_back({small(), small(), small()});
    P.push_back({small(), small(), small()});
    d2.push_back(Rational(static_cast<int>(eng() % 100) + 1));
  }
  const Pod pod(p, P, d2);
  for (auto _ : state) benchmark::DoNotOptimize(search_projection_pair(pod, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_SearchGenericHexapod)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
