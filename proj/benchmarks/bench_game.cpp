#include <benchmark/benchmark.h>

#include "netgame/game.hpp"
#include "netgame/interventions.hpp"
#include "netgame/random_models.hpp"
#include "netgame/spectral.hpp"

using namespace netgame;

namespace {

GameInstance make_game(int n) {
    const Graph g = sample(GraphModel(GNPSpec{n, 0.1}), 11);
    const Eigen::MatrixXd a = g.adjacency_matrix();
    const double lambda1 = first_eigenvector(a).eigenvalue;
    return GameInstance(a, 0.8 / lambda1, Eigen::VectorXd::Ones(n));
}

void BM_equilibrium(benchmark::State& state) {
    const GameInstance game = make_game(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh instance so every iteration pays for the factorization
        GameInstance fresh(game.adjacency(), game.beta(), game.standalone_values());
        benchmark::DoNotOptimize(equilibrium(fresh));
    }
}
BENCHMARK(BM_equilibrium)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_optimal_intervention(benchmark::State& state) {
    const GameInstance game = make_game(static_cast<int>(state.range(0)));
    const double budget = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_intervention(game, budget));
    }
}
BENCHMARK(BM_optimal_intervention)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_best_response(benchmark::State& state) {
    const GameInstance game = make_game(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_response_dynamics(game, 1e-8));
    }
}
BENCHMARK(BM_best_response)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
