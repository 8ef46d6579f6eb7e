#include <doctest.h>

#include <cmath>

#include "netgame/concentration.hpp"
#include "netgame/game.hpp"
#include "netgame/random_models.hpp"
#include "netgame/spectral.hpp"

using namespace netgame;

TEST_CASE("general concentration report") {
    const ExpectedMatrix zero(Eigen::MatrixXd::Zero(10, 10));
    const ConcentrationReport empty = check_general(zero, 0.5, 0.1);
    CHECK_FALSE(empty.conditions[0].satisfied);
    CHECK_FALSE(empty.satisfied());

    // uniform 100-vertex model at p = 0.1
    const ExpectedMatrix gnp = expected_matrix(GraphModel(GNPSpec{100, 0.1}));
    const ConcentrationReport report = check_general(gnp, 0.5, 0.1);
    const double logterm = std::log(2.0 * 100 / 0.1);
    CHECK(report.conditions[0].actual == doctest::Approx(9.9).epsilon(1e-9));
    CHECK(report.conditions[0].required == doctest::Approx(4.0 / 9.0 * logterm));
    CHECK(report.conditions[0].satisfied);

    CHECK(report.conditions[1].actual == doctest::Approx(1.0 / 99.0).epsilon(1e-6));
    CHECK(report.conditions[1].satisfied);

    // lambda_1 (1 - kappa^2) is tiny against the required threshold at n=100
    CHECK(report.conditions[2].required ==
          doctest::Approx(1024.0 * std::sqrt(9.9 * logterm) / 0.25).epsilon(1e-9));
    CHECK_FALSE(report.conditions[2].satisfied);
    CHECK_FALSE(report.satisfied());
    CHECK(report.satisfied() == (report.conditions[0].satisfied && report.conditions[1].satisfied &&
                                 report.conditions[2].satisfied));
}

TEST_CASE("gw concentration report") {
    // uniform weights: w1 <= ||w||/6 exactly when sqrt(n) >= 6
    for (int n : {35, 36, 37}) {
        const Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 3.0);
        const ConcentrationReport report = check_gw(w, 0.5, 0.1);
        CHECK(report.conditions[1].satisfied == (n >= 36));
    }

    Eigen::VectorXd small(3);
    small << 2, 1, 1;
    const ConcentrationReport tiny = check_gw(small, 0.5, 0.05);
    // (4/9) ln(2*3/0.05) > 2 = w1
    CHECK(tiny.conditions[0].required > 2.0);
    CHECK_FALSE(tiny.conditions[0].satisfied);

    // dtilde is degree-1 homogeneous in w: the condition-3 threshold crossing
    // scales exactly
    Eigen::VectorXd w(20);
    for (int i = 0; i < 20; ++i) w[i] = 3.0 - i * 0.1;
    const double base_dtilde = w.squaredNorm() / w.sum();
    const ConcentrationReport scaled = check_gw(4.0 * w, 0.5, 0.1);
    CHECK(scaled.conditions[2].actual == doctest::Approx(4.0 * base_dtilde).epsilon(1e-12));
}

TEST_CASE("gnp concentration report") {
    const ConcentrationReport sparse = check_gnp(100, 0.001, 0.5, 0.1);
    CHECK(sparse.conditions[0].required == doctest::Approx(4.0 / 9.0 * std::log(2000.0) / 100.0));
    CHECK_FALSE(sparse.conditions[0].satisfied);

    const ConcentrationReport dense = check_gnp(100, 0.1, 0.5, 0.1);
    CHECK(dense.conditions[0].satisfied);

    const ConcentrationReport wide = check_gnp(100, 0.1, 0.999, 0.1);
    CHECK(wide.conditions[1].required == doctest::Approx(786.0 * 786.0 * 6.0 / std::pow(0.999, 4)));
    CHECK_FALSE(wide.conditions[1].satisfied);
    CHECK_FALSE(wide.conditions[1].note.empty());
}

TEST_CASE("gnp and gw agree on the shared degree condition for uniform weights") {
    for (int n : {50, 100, 200}) {
        for (double p : {0.001, 0.02, 0.1, 0.4}) {
            const ConcentrationReport gnp = check_gnp(n, p, 0.5, 0.1);
            const Eigen::VectorXd w = Eigen::VectorXd::Constant(n, n * p);
            const ConcentrationReport gw = check_gw(w, 0.5, 0.1);
            CHECK(gnp.conditions[0].satisfied == gw.conditions[0].satisfied);
            // identical thresholds up to the p <-> np change of variable
            CHECK(gnp.conditions[0].required * n == doctest::Approx(gw.conditions[0].required));
        }
    }
}

TEST_CASE("chung-radcliffe deviation value") {
    const double bound = chung_radcliffe_deviation(25.0, 100, 0.05);
    CHECK(bound == doctest::Approx(std::sqrt(100.0 * std::log(4000.0))).epsilon(1e-12));
    CHECK(bound == doctest::Approx(28.80).epsilon(1e-3));

    CHECK(chung_radcliffe_deviation(25.0, 100, 0.2) < bound);  // larger delta shrinks it
    CHECK(chung_radcliffe_applicable(25.0, 100, 0.05));
    CHECK_FALSE(chung_radcliffe_applicable(0.5, 100, 0.05));
}

TEST_CASE("chung-radcliffe bound holds on sampled graphs") {
    const GraphModel model(GNPSpec{60, 0.3});
    const ExpectedMatrix bar = expected_matrix(model);
    const double d_max = max_expected_degree(bar);
    const double bound = chung_radcliffe_deviation(d_max, 60, 0.05);
    int hits = 0;
    const int trials = 20;
    for (int seed = 0; seed < trials; ++seed) {
        const Graph g = sample(model, seed);
        if (spectral_norm(g.adjacency_matrix() - bar.entries()) <= bound) ++hits;
    }
    CHECK(hits >= trials * 95 / 100);
}

TEST_CASE("spectral radius threshold") {
    const double logterm = std::log(2.0 * 100 / 0.05);
    const double threshold = spectral_radius_threshold(9.9, 9.9, 100, 0.05);
    CHECK(threshold == doctest::Approx(1.0 / (9.9 + std::sqrt(4.0 * 9.9 * logterm))).epsilon(1e-12));
    CHECK(threshold == doctest::Approx(1.0 / 28.03).epsilon(1e-3));

    // vanishing deviation limit: beta_max -> 1/lambda_1
    CHECK(spectral_radius_threshold(9.9, 1e-18, 100, 0.05) == doctest::Approx(1.0 / 9.9).epsilon(1e-6));

    // sampled games at 0.9 * beta_max are almost always feasible
    const GraphModel model(GNPSpec{80, 0.2});
    const ExpectedMatrix bar = expected_matrix(model);
    const double lambda1 = first_eigenvector(bar.entries()).eigenvalue;
    const double beta = 0.9 * spectral_radius_threshold(lambda1, max_expected_degree(bar), 80, 0.05);
    int feasible = 0;
    const int trials = 20;
    for (int seed = 0; seed < trials; ++seed) {
        const Graph g = sample(model, seed);
        if (GameInstance::from_graph(g, beta, 1.0).feasible()) ++feasible;
    }
    CHECK(feasible >= trials * 95 / 100);
}

TEST_CASE("power-law first eigenvalue scales like w1^(3-sigma)") {
    // lambda_1 of the loopful expected matrix is sum(w^2)/sum(w); the ratio to
    // w1^(3-sigma) should stay within a narrow band as w1 grows 4x
    const int n = 400;
    const double sigma = 2.25;
    double lo = 1e300;
    double hi = 0.0;
    for (double c : {3.0, 6.0, 12.0}) {
        const Eigen::VectorXd w = power_law_weights(n, sigma, c, 0.0);
        const double dtilde = w.squaredNorm() / w.sum();
        const double ratio = dtilde / std::pow(w[0], 3.0 - sigma);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 2.0);
}
