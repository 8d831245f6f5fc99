#include <benchmark/benchmark.h>

#include "racforge/antiprism.hpp"
#include "racforge/checker.hpp"
#include "racforge/embedding.hpp"
#include "racforge/geometry.hpp"

namespace {

using namespace racforge;

void BM_OrientationSmallInts(benchmark::State& state) {
  const Point p{Rational(3), Rational(7)};
  const Point q{Rational(-11), Rational(2)};
  const Point r{Rational(5), Rational(-9)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(orientation(p, q, r));
  }
}
BENCHMARK(BM_OrientationSmallInts);

void BM_OrientationBigRationals(benchmark::State& state) {
  const Rational big(mpz_class(1) << 50, mpz_class(3));
  const Point p{big, big * Rational(2)};
  const Point q{big * Rational(-1), big};
  const Point r{big * Rational(5, 7), big * Rational(-3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(orientation(p, q, r));
  }
}
BENCHMARK(BM_OrientationBigRationals);

void BM_CheckSeedDrawing(benchmark::State& state) {
  const Drawing d = seed_drawing(SeedClass::A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_rac(d).is_rac);
  }
}
BENCHMARK(BM_CheckSeedDrawing);

void BM_ExtractEmbeddingSeed(benchmark::State& state) {
  const Drawing d = seed_drawing(SeedClass::A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_embedding(d).node_count());
  }
}
BENCHMARK(BM_ExtractEmbeddingSeed);

}  // namespace
