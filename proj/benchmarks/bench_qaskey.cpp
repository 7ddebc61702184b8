#include <benchmark/benchmark.h>

#include <numbers>

#include "qaskey/qaskey.hpp"

using namespace qaskey;

namespace {

const q_base q_half(0.5);

parameter_chain bench_chain(int s) {
  std::vector<double> chain;
  if (s >= 2) chain.push_back(0.5);
  if (s >= 3) chain.push_back(0.3);
  return parameter_chain(q_half, 0.3, 0.2, -0.4, 0.1, chain);
}

void BM_qpochhammer_inf(benchmark::State& state) {
  const complex_t a(0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(qpochhammer_inf(a, q_half));
}
BENCHMARK(BM_qpochhammer_inf);

void BM_aw_poly(benchmark::State& state) {
  const auto pt = point_on_interval::from_theta(std::numbers::pi / 3);
  const aw_params p{0.3, 0.2, -0.4, 0.1, q_half};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aw_poly(n, pt, p));
}
BENCHMARK(BM_aw_poly)->Arg(1)->Arg(5)->Arg(10);

void BM_aw_weight(benchmark::State& state) {
  const auto pt = point_on_interval::from_theta(std::numbers::pi / 3);
  const aw_params p{0.3, 0.2, -0.4, 0.1, q_half};
  for (auto _ : state) benchmark::DoNotOptimize(aw_weight(pt, p));
}
BENCHMARK(BM_aw_weight);

void BM_mv_poly(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto spec = make_mv_askey_wilson(bench_chain(s));
  const multi_index n(std::vector<int>(static_cast<size_t>(s), 2));
  const multi_point pt(std::vector<double>(static_cast<size_t>(s), 1.1));
  for (auto _ : state) benchmark::DoNotOptimize(mv_poly(spec, n, pt));
}
BENCHMARK(BM_mv_poly)->Arg(1)->Arg(2)->Arg(3);

void BM_mv_weight(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto spec = make_mv_askey_wilson(bench_chain(s));
  const multi_point pt(std::vector<double>(static_cast<size_t>(s), 1.1));
  for (auto _ : state) benchmark::DoNotOptimize(mv_weight(spec, pt));
}
BENCHMARK(BM_mv_weight)->Arg(1)->Arg(2)->Arg(3);

void BM_mv_norm(benchmark::State& state) {
  const auto spec = make_mv_askey_wilson(bench_chain(2));
  const multi_index n({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mv_norm(spec, n));
}
BENCHMARK(BM_mv_norm);

void BM_gram_s1(benchmark::State& state) {
  const auto spec = make_mv_askey_wilson(bench_chain(1));
  const quadrature_grid grid(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gram(spec, 3, grid));
}
BENCHMARK(BM_gram_s1)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_gram_s2(benchmark::State& state) {
  const auto spec = make_mv_askey_wilson(bench_chain(2));
  const quadrature_grid grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gram(spec, 2, grid));
}
BENCHMARK(BM_gram_s2)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
