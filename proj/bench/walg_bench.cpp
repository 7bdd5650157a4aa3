// serial kernels against their OpenMP counterparts; set WALG_THREADS to pick the thread count
#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "walg/parallel.hpp"
#include "walg/tensor_j.hpp"
#include "walg/whittaker.hpp"

using namespace walg;

namespace {

const WhittakerQuotient& quotient(int N) {
  static std::map<int, std::unique_ptr<WhittakerQuotient>> cache;
  auto& q = cache[N];
  if (!q) q = std::make_unique<WhittakerQuotient>(Pyramid::subregular(N));
  return *q;
}

std::pair<AlgebraElement, AlgebraElement> factors(int N) {
  auto p = Pyramid::subregular(N);
  return {t_element(p, 1, 2, 1, N - 2).value, t_element(p, 2, 2, 1, N - 1).value};
}

void BM_multiply(benchmark::State& st) {
  auto [a, b] = factors(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(multiply(a, b));
}
void BM_multiply_parallel(benchmark::State& st) {
  auto [a, b] = factors(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(multiply_parallel(a, b));
}

void BM_fuse(benchmark::State& st) {
  auto& Q = quotient(st.range(0));
  auto v = tilde_v_unchecked(Q, Q.N() - 1);
  for (auto _ : st) benchmark::DoNotOptimize(Q.fuse(v, v));
}
void BM_fuse_parallel(benchmark::State& st) {
  auto& Q = quotient(st.range(0));
  auto v = tilde_v_unchecked(Q, Q.N() - 1);
  for (auto _ : st) benchmark::DoNotOptimize(fuse_parallel(Q, v, v));
}

void BM_whittaker(benchmark::State& st) {
  auto& Q = quotient(st.range(0));
  auto v = tilde_v_unchecked(Q, Q.N() - 1);
  for (auto _ : st) benchmark::DoNotOptimize(Q.is_whittaker(v));
}
void BM_whittaker_parallel(benchmark::State& st) {
  auto& Q = quotient(st.range(0));
  auto v = tilde_v_unchecked(Q, Q.N() - 1);
  for (auto _ : st) benchmark::DoNotOptimize(is_whittaker_parallel(Q, v));
}

void BM_compute_J(benchmark::State& st) {
  JOptions opt;
  opt.parallel = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(compute_J(st.range(0), opt));
}

}  // namespace

BENCHMARK(BM_multiply)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_multiply_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_fuse)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fuse_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_whittaker)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_whittaker_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compute_J)->Args({4, 0})->Args({4, 1})->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
