#include <benchmark/benchmark.h>

#include <memory>

#include "coherentlab/bergman.hpp"
#include "coherentlab/frames.hpp"
#include "coherentlab/lattice.hpp"
#include "coherentlab/twisted_ring.hpp"

using namespace coherentlab;

namespace {

const LatticePreset kSeven = LatticePreset::triangle(2, 3, 7, 2);

std::shared_ptr<const LatticeBall> ball_of(int len) {
  BallOptions o;
  o.max_word_len = len;
  return std::make_shared<const LatticeBall>(enumerate_ball(build_generators(kSeven), o));
}

void BM_EnumerateBall(benchmark::State& state) {
  const auto gens = build_generators(kSeven);
  BallOptions o;
  o.max_word_len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(gens, o).size());
}
BENCHMARK(BM_EnumerateBall)->Arg(8)->Arg(12)->Arg(16);

void BM_GramReduced(benchmark::State& state) {
  const auto sys = make_coherent_system(30.0, DiskPoint{0.0}, ball_of(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(riesz_bounds_finite_section(gram_matrix(sys, true)).lower);
}
BENCHMARK(BM_GramReduced)->Arg(8)->Arg(12)->Arg(16);

void BM_FrameBounds(benchmark::State& state) {
  const auto sys = make_coherent_system(7.0, DiskPoint{0.0}, ball_of(12));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frame_bounds_truncated(sys, N).lower);
}
BENCHMARK(BM_FrameBounds)->Arg(20)->Arg(60);

void BM_PiMatrix(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Quadrature q = default_quadrature(5.5, N);
  const GroupElement g = compose(GroupElement::translation(0.3), GroupElement::rotation(0.7));
  for (auto _ : state) benchmark::DoNotOptimize(pi_matrix(5.5, g, N, q).norm());
}
BENCHMARK(BM_PiMatrix)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TwistedConvolve(benchmark::State& state) {
  const auto ball = ball_of(10);
  const CocycleTable sigma(ball, 7.3);
  TwistedRingElement x, y;
  for (std::size_t i = 0; i < 40; ++i) {
    if (ball->elements()[i].word.size() > 4) continue;
    x.add(i, Complex{1.0 / (1.0 + i), 0.5});
    y.add(i, Complex{0.25, -1.0 / (2.0 + i)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(twisted_convolve(x, y, sigma).support_size());
}
BENCHMARK(BM_TwistedConvolve);

}  // namespace

BENCHMARK_MAIN();
