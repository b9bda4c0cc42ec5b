#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "etf/etf.hpp"
#include "etf/jacobi.hpp"
#include "etf/rip.hpp"

namespace {

etf::EtfMatrix make_frame(int which) {
  using namespace etf;
  switch (which) {
    case 0: return assemble_etf(pair_design(4), {sylvester(2)});                       // 6x16
    case 1: return assemble_etf(steiner_triple(25), {best_flat(13, true)});            // 100x325
    default: return assemble_etf(projective_lines(PrimePower::make(3, 2), 2), {best_flat(11, true)});  // 91x1001
  }
}

std::vector<etf::Complex> random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<etf::Complex> x(static_cast<std::size_t>(n));
  for (auto& z : x) z = etf::Complex{dist(rng), dist(rng)};
  return x;
}

void BM_Assemble(benchmark::State& state) {
  for (auto _ : state) {
    auto f = make_frame(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(f.columns.data());
  }
}
BENCHMARK(BM_Assemble)->Arg(0)->Arg(1)->Arg(2);

void BM_AnalysisSparse(benchmark::State& state) {
  const auto f = make_frame(static_cast<int>(state.range(0)));
  const auto x = random_vector(f.rows, 7);
  for (auto _ : state) {
    auto y = etf::analysis_apply(f, x);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * f.nonzeros());
}
BENCHMARK(BM_AnalysisSparse)->Arg(0)->Arg(1)->Arg(2);

void BM_AnalysisDense(benchmark::State& state) {
  const auto f = make_frame(static_cast<int>(state.range(0))).dense();
  const auto x = random_vector(f.rows, 7);
  for (auto _ : state) {
    auto y = etf::apply_adjoint(f, x);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * f.rows * f.cols);
}
BENCHMARK(BM_AnalysisDense)->Arg(0)->Arg(1)->Arg(2);

void BM_VerifyEquiangular(benchmark::State& state) {
  const auto f = make_frame(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = etf::verify_equiangular(f);
    benchmark::DoNotOptimize(rep.max_dev);
  }
}
BENCHMARK(BM_VerifyEquiangular)->Arg(0)->Arg(1)->Arg(2);

void BM_RicExhaustive(benchmark::State& state) {
  const auto dense = make_frame(0).dense();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = etf::ric_exhaustive(dense, k);
    benchmark::DoNotOptimize(rep.delta_lower);
  }
}
BENCHMARK(BM_RicExhaustive)->Arg(2)->Arg(3)->Arg(4);

void BM_JacobiEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto a = etf::FrameMatrix::zero(n, n);
  for (int i = 0; i < n; ++i) {
    a.at(i, i) = dist(rng);
    for (int j = i + 1; j < n; ++j) {
      const etf::Complex z{dist(rng), dist(rng)};
      a.at(i, j) = z;
      a.at(j, i) = std::conj(z);
    }
  }
  for (auto _ : state) {
    auto eig = etf::hermitian_eigenvalues(a);
    benchmark::DoNotOptimize(eig.data());
  }
}
BENCHMARK(BM_JacobiEigen)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
