#include "polypart/constructions.hpp"
#include "polypart/partition.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace polypart;

namespace {

Polygon random_triangle(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  for (;;) {
    Polygon t;
    for (int i = 0; i < 3; ++i) {
      t.vertices.push_back(Point{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    }
    try {
      return normalize(t);
    } catch (const ValidationError&) {
    }
  }
}

void BM_IntersectionArea(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<std::pair<Polygon, Polygon>> pairs;
  for (int i = 0; i < 64; ++i) pairs.emplace_back(random_triangle(rng), random_triangle(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(intersection_area(a, b));
  }
}
BENCHMARK(BM_IntersectionArea);

void BM_VerifyStrips(benchmark::State& state) {
  Polygon square;
  square.vertices = {Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(0)},
                     Point{Rational(1), Rational(1)}, Point{Rational(0), Rational(1)}};
  Partition part = strips(square, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(part).perfect);
  }
}
BENCHMARK(BM_VerifyStrips)->Arg(4)->Arg(8)->Arg(16);

void BM_QuarterTriangleVerify(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Polygon tri = random_triangle(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(quarter_triangle(tri)).perfect);
  }
}
BENCHMARK(BM_QuarterTriangleVerify);

}  // namespace
