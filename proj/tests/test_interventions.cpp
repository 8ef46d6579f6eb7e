#include <doctest.h>

#include <cmath>

#include "netgame/interventions.hpp"
#include "netgame/random_models.hpp"
#include "netgame/spectral.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace netgame;
using netgame::testing::gradient_ascent_oracle;
using netgame::testing::random_feasible_game;

TEST_CASE("proportional interventions") {
    const Intervention ones = proportional_intervention(Eigen::VectorXd::Ones(4), 4.0);
    for (int i = 0; i < 4; ++i) CHECK(ones.y[i] == doctest::Approx(1.0));

    const Intervention uniform = proportional_intervention(Eigen::VectorXd::Ones(5), 10.0, Strategy::uniform);
    for (int i = 0; i < 5; ++i) CHECK(uniform.y[i] == doctest::Approx(std::sqrt(10.0 / 5.0)));

    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd direction(6);
        for (int i = 0; i < 6; ++i) direction[i] = rng.normal();
        const double budget = 0.5 + 10.0 * rng.uniform();
        CHECK(proportional_intervention(direction, budget).cost() == doctest::Approx(budget).epsilon(1e-12));
    }
    CHECK_THROWS_AS(proportional_intervention(Eigen::VectorXd::Zero(3), 1.0), std::invalid_argument);
}

TEST_CASE("optimal intervention on the empty graph points along b") {
    GameInstance game(Eigen::MatrixXd::Zero(2, 2), 0.3, Eigen::Vector2d(3.0, 4.0));
    const Intervention y = optimal_intervention(game, 25.0);
    CHECK(y.y[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(y.y[1] == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("hard case puts the residual budget on the top eigenvector") {
    Eigen::MatrixXd k2(2, 2);
    k2 << 0, 1, 1, 0;
    // b orthogonal to v1 = (1,1)/sqrt(2)
    GameInstance game = GameInstance::unchecked(k2, 0.5, Eigen::Vector2d(1.0, -1.0));
    const double budget = 25.0;
    const Intervention y = optimal_intervention(game, budget);

    // stationarity leaves a fixed v2 component and fills the rest along +v1
    const double alpha1 = 4.0;       // 1/(1-0.5)^2
    const double alpha2 = 4.0 / 9.0; // 1/(1+0.5)^2
    const double b2 = std::sqrt(2.0);
    const double y2 = alpha2 * b2 / (alpha1 - alpha2);
    const double y1 = std::sqrt(budget - y2 * y2);
    const Eigen::Vector2d v1(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const Eigen::Vector2d v2(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
    const Eigen::Vector2d expected = y1 * v1 + y2 * v2;
    CHECK((y.y - expected).cwiseAbs().maxCoeff() <= 1e-8);

    // at large budgets nearly everything rides on v1
    const Intervention big = optimal_intervention(game, 1e6);
    CHECK(cosine_similarity(big.y, Eigen::VectorXd(v1)) >= 1.0 - 1e-6);
}

TEST_CASE("optimal solver matches the ascent oracle on small instances") {
    Rng rng(61);
    int done = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(5));
        const GameInstance game = random_feasible_game(n, 0.5, 0.1 + 0.8 * rng.uniform(), rng);
        for (double budget : {1.0, 10.0, 100.0}) {
            const Intervention y = optimal_intervention(game, budget);
            CHECK(y.cost() == doctest::Approx(budget).epsilon(1e-9));
            CHECK(y.y.minCoeff() >= -1e-8);  // nonnegative at b >= 0
            const double ours = welfare_after(game, y.y);
            const double oracle = welfare_after(game, gradient_ascent_oracle(game, budget));
            CHECK(ours >= oracle - 1e-6 * std::abs(oracle));
            ++done;
        }
    }
    CHECK(done == 36);
}

TEST_CASE("competitive ratio") {
    Rng rng(67);
    const GameInstance game = random_feasible_game(10, 0.4, 0.6, rng);
    const double budget = 10.0;
    const Intervention star = optimal_intervention(game, budget);
    CHECK(competitive_ratio(game, star, star).ratio == doctest::Approx(1.0));

    for (int trial = 0; trial < 15; ++trial) {
        Eigen::VectorXd direction(10);
        for (int i = 0; i < 10; ++i) direction[i] = rng.normal();
        const Intervention y = proportional_intervention(direction, budget);
        const RatioResult r = competitive_ratio(game, y, star);
        CHECK(r.ratio <= 1.0 + 1e-6);
    }

    GameInstance degenerate(Eigen::MatrixXd::Zero(2, 2), 0.0, Eigen::Vector2d(0.0, 0.0));
    Intervention zero;
    zero.y = Eigen::Vector2d::Zero();
    CHECK_THROWS_AS(competitive_ratio(degenerate, zero, zero), std::domain_error);
}

TEST_CASE("bound formulas") {
    CHECK(cosine_ratio_lower_bound(1.0) == doctest::Approx(1.0));
    CHECK(cosine_ratio_lower_bound(7.0 / 8.0) == doctest::Approx(-1.0));
    CHECK(cosine_ratio_lower_bound(0.995) == doctest::Approx(0.6).epsilon(1e-12));

    CHECK(blind_ratio_upper_bound(1.0, 1.0, 1e-12) == doctest::Approx(1.0).epsilon(3e-6));
    CHECK(blind_ratio_upper_bound(0.0, 1.0, 0.04) == doctest::Approx(0.44));
    CHECK(blind_ratio_upper_bound(0.0, 1.0, 0.25) == doctest::Approx(1.25));

    Eigen::VectorXd b(4);
    b << 5, 5, 5, 5;  // ||b||^2 = 100
    CHECK(gw_budget_threshold(b, 0.1, 8.0, 0.5) == doctest::Approx(160000.0));
    CHECK(gw_budget_threshold(b, 0.1, 8.0, 0.25) == doctest::Approx(4.0 * 160000.0));
    CHECK(gw_budget_threshold(Eigen::VectorXd::Zero(4), 0.1, 8.0, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("competitive ratio respects the cosine lower bound") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const GameInstance game = random_feasible_game(8, 0.5, 0.2 + 0.7 * rng.uniform(), rng);
        const double budget = std::max({game.standalone_values().squaredNorm(), 1.0}) * (1.5 + 3.0 * rng.uniform());
        const Intervention star = optimal_intervention(game, budget);

        // tilt the optimum by a random amount to sweep gamma toward 1
        Eigen::VectorXd noise(8);
        for (int i = 0; i < 8; ++i) noise[i] = rng.normal();
        const double mix = rng.uniform() * 0.5;
        const Intervention y =
            proportional_intervention(star.y + mix * star.y.norm() * noise.normalized(), budget);
        const double gamma = cosine_similarity(y.y, star.y);
        const RatioResult r = competitive_ratio(game, y, star);
        CHECK(r.ratio >= cosine_ratio_lower_bound(gamma) - 1e-6);
    }
}

TEST_CASE("blind upper bound holds with no standalone values") {
    Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 8;
        const GameInstance positive = random_feasible_game(n, 0.5, 0.3 + 0.6 * rng.uniform(), rng);
        const GameInstance game =
            GameInstance(positive.adjacency(), positive.beta(), Eigen::VectorXd::Zero(n));
        if (first_eigenvector(game.adjacency()).eigenvalue <= 0.0) continue;

        const double budget = 5.0;
        const Intervention star = optimal_intervention(game, budget);
        const EigenDecomposition decomp = symmetric_eigen(game.adjacency());
        const Eigen::VectorXd alpha = alpha_values(decomp.eigenvalues, game.beta());

        Eigen::VectorXd direction(n);
        for (int i = 0; i < n; ++i) direction[i] = rng.normal();
        const Intervention y = proportional_intervention(direction, budget);
        const double gamma = std::abs(cosine_similarity(y.y, star.y));
        const RatioResult r = competitive_ratio(game, y, star);
        CHECK(r.ratio <= blind_ratio_upper_bound(gamma, alpha[0], alpha[1]) + 1e-6);
    }
}

TEST_CASE("optimum swings toward the first eigenvector as the budget grows") {
    Rng rng(79);
    int tested = 0;
    for (int trial = 0; trial < 12 && tested < 8; ++trial) {
        const GameInstance game = random_feasible_game(10, 0.5, 0.3 + 0.6 * rng.uniform(), rng);
        const EigenDecomposition decomp = symmetric_eigen(game.adjacency());
        if (!(decomp.eigenvalues[0] > 0.0)) continue;
        if (inverted_spectral_gap(decomp) >= 0.9) continue;
        const Eigen::VectorXd v1 = first_eigenvector(game.adjacency()).eigenvector;

        double previous = -1.0;
        for (double budget = 1.0; budget <= 1e5; budget *= 10.0) {
            const Intervention star = optimal_intervention(game, budget);
            const double rho = cosine_similarity(star.y, v1);
            CHECK(rho >= previous - 1e-12);
            previous = rho;
        }
        CHECK(previous >= 0.9);  // far along the ladder the optimum hugs v1
        ++tested;
    }
    CHECK(tested >= 8);
}

TEST_CASE("heuristic suite") {
    // 2-regular ring: uniform and realized-degree interventions coincide
    Eigen::MatrixXd ring = Eigen::MatrixXd::Zero(5, 5);
    for (int i = 0; i < 5; ++i) {
        ring(i, (i + 1) % 5) = 1.0;
        ring((i + 1) % 5, i) = 1.0;
    }
    GameInstance game(ring, 0.2, Eigen::VectorXd::Ones(5));
    const auto suite = heuristic_suite(game, {Strategy::uniform, Strategy::realized_degree, Strategy::baseline}, 5.0);
    CHECK((suite[0].y - suite[1].y).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(suite[2].y.isZero());
    CHECK(delta_welfare(game, suite[2].y) == doctest::Approx(0.0));

    // expected-degree and expected-first-eigenvector agree on a rank-one model
    Eigen::VectorXd w(4);
    w << 2.0, 1.5, 1.0, 0.5;
    const ExpectedMatrix bar = expected_matrix(GraphModel(GWSpec{w}, true));
    GameInstance small(Eigen::MatrixXd::Zero(4, 4), 0.1, Eigen::VectorXd::Ones(4));
    HeuristicInputs inputs;
    inputs.expected = bar;
    const auto pair = heuristic_suite(small, {Strategy::expected_degree, Strategy::first_eigenvector_expected},
                                      5.0, inputs);
    CHECK((pair[0].y - pair[1].y).cwiseAbs().maxCoeff() <= 1e-6);

    CHECK_THROWS_AS(heuristic_suite(game, {Strategy::expected_degree}, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(heuristic_suite(game, {Strategy::sbm_reconstructed}, 5.0), std::invalid_argument);
}

TEST_CASE("strategy names round-trip") {
    for (Strategy s : {Strategy::baseline, Strategy::uniform, Strategy::expected_degree, Strategy::realized_degree,
                       Strategy::first_eigenvector_realized, Strategy::first_eigenvector_expected,
                       Strategy::sbm_reconstructed, Strategy::optimal}) {
        CHECK(strategy_from_name(strategy_name(s)) == s);
    }
    CHECK_FALSE(strategy_from_name("nonsense").has_value());
}
