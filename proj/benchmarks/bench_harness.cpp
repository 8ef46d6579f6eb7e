#include <benchmark/benchmark.h>

#include <sstream>

#include "netgame/estimation.hpp"
#include "netgame/experiment.hpp"
#include "netgame/girvan_newman.hpp"
#include "netgame/random_models.hpp"

using namespace netgame;

namespace {

void BM_girvan_newman(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const Graph g = sample(GraphModel(SBMSpec{{n / 2, n / 2},
                                              (Eigen::MatrixXd(2, 2) << 0.4, 0.02, 0.02, 0.4).finished()}),
                           3);
    GirvanNewmanOptions options;
    options.min_big_clusters = 2;
    options.min_cluster_size = n / 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(girvan_newman_groups(g, options));
    }
}
BENCHMARK(BM_girvan_newman)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_degree_estimation(benchmark::State& state) {
    const Graph g = sample(GraphModel(GNPSpec{static_cast<int>(state.range(0)), 0.3}), 5);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        EdgeOracle oracle(g);
        benchmark::DoNotOptimize(estimate_degrees_edge_queries(oracle, 0.1, 0.05, ++seed));
    }
}
BENCHMARK(BM_degree_estimation)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_experiment_cell(benchmark::State& state) {
    std::istringstream config_text(
        "model = gnp\nn = 100\np = 0.1\naxis = spectral_radius\naxis_value = 0.8\n"
        "strategy = uniform\nstrategy = first_eigenvector_realized\nstrategy = optimal\n"
        "trials = 1\nseed = 1\nbudget = 1\n");
    const ExperimentConfig config = parse_experiment_config(config_text);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(config));
    }
}
BENCHMARK(BM_experiment_cell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
