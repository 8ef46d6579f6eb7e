#include <benchmark/benchmark.h>

#include "netgame/random_models.hpp"
#include "netgame/spectral.hpp"

using namespace netgame;

namespace {

Eigen::MatrixXd sampled_adjacency(int n, double p) {
    return sample(GraphModel(GNPSpec{n, p}), 7).adjacency_matrix();
}

void BM_jacobi_eigen(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const Eigen::MatrixXd a = sampled_adjacency(n, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_eigen(a));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_jacobi_eigen)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->Complexity();

void BM_power_iteration(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const Eigen::MatrixXd a = sampled_adjacency(n, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(first_eigenvector(a));
    }
}
BENCHMARK(BM_power_iteration)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_sample_gnp(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const GraphModel model(GNPSpec{n, 0.1});
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(model, ++seed));
    }
}
BENCHMARK(BM_sample_gnp)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
