#include <benchmark/benchmark.h>

#include "orthocubic/cartesian.hpp"
#include "orthocubic/homology.hpp"
#include "orthocubic/locus.hpp"
#include "orthocubic/locus_points.hpp"
#include "orthocubic/pedal.hpp"
#include "orthocubic/trace.hpp"

using namespace orthocubic;

namespace {

TriangleShape shape654() {
  return TriangleShape::from_sides(Rational(6), Rational(5), Rational(4));
}

void bm_locus_value_exact(benchmark::State& state) {
  const LocusCubic cubic(shape654());
  const BaryPoint p{Rational(17, 3), Rational(-4, 7), Rational(25, 9)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubic.value(p));
  }
}
BENCHMARK(bm_locus_value_exact);

void bm_locus_value_float(benchmark::State& state) {
  const LocusCubic cubic(shape654());
  const BaryPointF p{5.6667, -0.5714, 2.7778};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubic.value(p));
  }
}
BENCHMARK(bm_locus_value_float);

void bm_pedal_foot(benchmark::State& state) {
  const TriangleShape t = shape654();
  const BaryPoint p{Rational(17, 3), Rational(-4, 7), Rational(25, 9)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedal_foot(t, p, Side::BC));
  }
}
BENCHMARK(bm_pedal_foot);

void bm_ceva_product(benchmark::State& state) {
  const TriangleShape t = shape654();
  const BaryPoint p{Rational(17, 3), Rational(-4, 7), Rational(25, 9)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceva_product(t, p));
  }
}
BENCHMARK(bm_ceva_product);

void bm_chord_third_intersection(benchmark::State& state) {
  const LocusCubic cubic(shape654());
  const BaryPoint h{Rational(27), Rational(5), Rational(3)};
  const BaryPoint i{Rational(6), Rational(5), Rational(4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubic.third_intersection(h, i));
  }
}
BENCHMARK(bm_chord_third_intersection);

void bm_chord_points_100(benchmark::State& state) {
  const LocusCubic cubic(shape654());
  for (auto _ : state) {
    benchmark::DoNotOptimize(chord_locus_points(cubic, 100));
  }
}
BENCHMARK(bm_chord_points_100)->Unit(benchmark::kMillisecond);

void bm_trace(benchmark::State& state) {
  const LocusCubic cubic(shape654());
  const Bbox box = default_trace_bbox(CartesianPlacement::standard(cubic.triangle()));
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace(cubic, box, res));
  }
}
BENCHMARK(bm_trace)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
