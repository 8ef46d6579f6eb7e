#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "netgame/random_models.hpp"
#include "netgame/spectral.hpp"
#include "test_util.hpp"

using namespace netgame;
using netgame::testing::random_symmetric;

TEST_CASE("jacobi on simple matrices") {
    Eigen::MatrixXd diag = Eigen::Vector3d(3, 1, 2).asDiagonal();
    const EigenDecomposition d = symmetric_eigen(diag);
    CHECK(d.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(d.eigenvalues[2] == doctest::Approx(1.0));
    CHECK(d.eigenvectors.col(0)(0) == doctest::Approx(1.0));
    CHECK(d.eigenvectors.col(1)(2) == doctest::Approx(1.0));

    Eigen::MatrixXd path2(2, 2);
    path2 << 0, 1, 1, 0;
    const EigenDecomposition p = symmetric_eigen(path2);
    CHECK(p.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(p.eigenvalues[1] == doctest::Approx(-1.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(p.eigenvectors.col(0)(0) == doctest::Approx(inv_sqrt2));
    CHECK(p.eigenvectors.col(0)(1) == doctest::Approx(inv_sqrt2));
    CHECK(p.eigenvectors.col(1)(0) == doctest::Approx(inv_sqrt2));
    CHECK(p.eigenvectors.col(1)(1) == doctest::Approx(-inv_sqrt2));
}

TEST_CASE("jacobi reconstruction and orthonormality") {
    Rng rng(5);
    for (int n : {2, 6, 17, 50}) {
        const Eigen::MatrixXd a = random_symmetric(n, rng, 3.0);
        const EigenDecomposition d = symmetric_eigen(a);
        const Eigen::MatrixXd rebuilt =
            d.eigenvectors * d.eigenvalues.asDiagonal() * d.eigenvectors.transpose();
        CHECK((rebuilt - a).norm() <= 10.0 * 1e-10 * a.norm());
        CHECK((d.eigenvectors.transpose() * d.eigenvectors - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-9);
        if (n == 6) CHECK((rebuilt - a).norm() <= 1e-8);
        for (int i = 1; i < n; ++i) CHECK(d.eigenvalues[i] <= d.eigenvalues[i - 1] + 1e-12);
        // residual contract per column
        for (int i = 0; i < n; ++i) {
            const double res = (a * d.eigenvectors.col(i) - d.eigenvalues[i] * d.eigenvectors.col(i)).norm();
            CHECK(res <= 1e-8 * std::max(1.0, std::abs(d.eigenvalues[i])));
        }
    }
}

TEST_CASE("jacobi eigenvalues agree with an independent solver") {
    Rng rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXd a = random_symmetric(12, rng, 2.0);
        const EigenDecomposition ours = symmetric_eigen(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reference(a);
        const Eigen::VectorXd ref = reference.eigenvalues().reverse();
        CHECK((ours.eigenvalues - ref).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("first eigenvector") {
    Eigen::VectorXd w(3);
    w << 2, 1, 1;
    const ExpectedMatrix bar = expected_matrix(GraphModel(GWSpec{w}, true));
    const FirstEigenResult top = first_eigenvector(bar.entries());
    CHECK(cosine_similarity(top.eigenvector, w) >= 1.0 - 1e-9);
    CHECK(top.eigenvalue == doctest::Approx(1.5).epsilon(1e-9));  // sum(w^2)/sum(w)

    Eigen::MatrixXd k4 = Eigen::MatrixXd::Constant(4, 4, 1.0);
    k4.diagonal().setZero();
    const FirstEigenResult uniform = first_eigenvector(k4);
    for (int i = 0; i < 4; ++i) CHECK(uniform.eigenvector[i] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(uniform.eigenvalue == doctest::Approx(3.0));

    const FirstEigenResult zero = first_eigenvector(Eigen::MatrixXd::Zero(4, 4));
    CHECK(zero.eigenvalue == 0.0);
    CHECK(zero.eigenvector[0] == 1.0);
    CHECK(zero.degenerate);
}

TEST_CASE("first eigenvector matches the full decomposition") {
    Rng rng(9);
    for (int trial = 0; trial < 8; ++trial) {
        const Eigen::MatrixXd a = random_symmetric(10, rng);
        const FirstEigenResult top = first_eigenvector(a);
        const EigenDecomposition d = symmetric_eigen(a);
        CHECK(top.eigenvalue == doctest::Approx(d.eigenvalues[0]).epsilon(1e-9));
        CHECK(cosine_similarity(top.eigenvector, d.eigenvectors.col(0)) >= 1.0 - 1e-9);
    }
}

TEST_CASE("bipartite spectra converge through the diagonal shift") {
    Eigen::MatrixXd k2(2, 2);
    k2 << 0, 1, 1, 0;
    CHECK(first_eigenvector(k2).eigenvalue == doctest::Approx(1.0));
    CHECK(first_eigenvector(k2).degenerate == false);
    CHECK(spectral_norm(k2) == doctest::Approx(1.0));
}

TEST_CASE("spectral norm") {
    CHECK(spectral_norm(Eigen::MatrixXd::Zero(3, 3)) == 0.0);
    Eigen::MatrixXd d = Eigen::Vector2d(-5, 2).asDiagonal();
    CHECK(spectral_norm(d) == doctest::Approx(5.0));
}

TEST_CASE("inverted spectral gap") {
    Eigen::VectorXd w(3);
    w << 2, 1, 1;
    const auto gw = symmetric_eigen(expected_matrix(GraphModel(GWSpec{w}, true)).entries());
    CHECK(inverted_spectral_gap(gw) <= 1e-8);

    Eigen::MatrixXd k3 = Eigen::MatrixXd::Constant(3, 3, 1.0);
    k3.diagonal().setZero();
    CHECK(inverted_spectral_gap(symmetric_eigen(k3)) == doctest::Approx(0.5));

    Eigen::MatrixXd k2(2, 2);
    k2 << 0, 1, 1, 0;
    CHECK(inverted_spectral_gap(symmetric_eigen(k2)) == doctest::Approx(1.0));

    EigenDecomposition negative;
    negative.eigenvalues = Eigen::Vector2d(-1.0, -2.0);
    CHECK_THROWS_AS(inverted_spectral_gap(negative), std::domain_error);
}

TEST_CASE("cosine similarity") {
    Eigen::VectorXd x(2);
    x << 1, 1;
    Eigen::VectorXd y(2);
    y << 1, 0;
    CHECK(cosine_similarity(x, x) == doctest::Approx(1.0));
    CHECK(cosine_similarity(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)) == doctest::Approx(0.0));
    CHECK(cosine_similarity(x, y) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK_THROWS_AS(cosine_similarity(Eigen::Vector2d::Zero(), y), std::invalid_argument);

    // law of cosines on unit vectors
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd a(5);
        Eigen::VectorXd b(5);
        for (int i = 0; i < 5; ++i) {
            a[i] = rng.normal();
            b[i] = rng.normal();
        }
        a.normalize();
        b.normalize();
        CHECK((a - b).squaredNorm() == doctest::Approx(2.0 * (1.0 - cosine_similarity(a, b))).epsilon(1e-12));
    }
}

TEST_CASE("alpha transform") {
    Eigen::VectorXd lambda(2);
    lambda << 2, -1;
    CHECK(alpha_values(lambda, 0.0).isOnes());

    const Eigen::VectorXd alpha = alpha_values(lambda, 0.25);
    CHECK(alpha[0] == doctest::Approx(4.0));
    CHECK(alpha[1] == doctest::Approx(0.64));

    Eigen::VectorXd critical(1);
    critical << 2;
    CHECK_THROWS_AS(alpha_values(critical, 0.5), std::domain_error);

    // descending lambda with beta > 0 gives non-increasing alpha
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd values(6);
        for (int i = 0; i < 6; ++i) values[i] = 4.0 * rng.uniform() - 2.0;
        std::sort(values.data(), values.data() + 6, std::greater<>());
        const double beta = 0.9 / std::max(1.0, values.maxCoeff());
        const Eigen::VectorXd a = alpha_values(values, beta);
        for (int i = 1; i < 6; ++i) CHECK(a[i] <= a[i - 1] + 1e-12);
    }
}

TEST_CASE("perturbation bound formula") {
    CHECK(eigenvector_perturbation_bound(2.0, 0.0, 2.0, 0.0).value == doctest::Approx(0.0));

    const PerturbationBound mid = eigenvector_perturbation_bound(2.0, 0.0, 1.8, 0.3);
    CHECK(mid.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK_FALSE(mid.vacuous);

    const PerturbationBound gap = eigenvector_perturbation_bound(2.0, 0.5, 2.0, 0.2);
    const double radicand = (1.8 * 1.8 - 4.0 * 0.25) / 0.75;
    CHECK(gap.value == doctest::Approx(std::sqrt(2.0 * (1.0 - std::sqrt(radicand) / 2.0))).epsilon(1e-12));
    CHECK(gap.value == doctest::Approx(0.5215).epsilon(1e-3));

    CHECK(eigenvector_perturbation_bound(1.0, 0.9, 0.5, 0.4).vacuous);
}

TEST_CASE("perturbation bound holds empirically") {
    // pairs (A, B = A + E); the bound is stated for absolute-largest
    // eigenvectors, so pairs are aligned that way and by sign
    Rng rng(31);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 6;
        const Eigen::MatrixXd a = random_symmetric(n, rng, 2.0);
        const Eigen::MatrixXd e = random_symmetric(n, rng, 0.05);
        const Eigen::MatrixXd b = a + e;

        const EigenDecomposition da = symmetric_eigen(a);
        Eigen::Index ia;
        da.eigenvalues.cwiseAbs().maxCoeff(&ia);
        const double lambda1 = std::abs(da.eigenvalues[ia]);
        if (lambda1 <= 0.0) continue;
        double second = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            if (i != ia) second = std::max(second, std::abs(da.eigenvalues[i]));
        const double kappa = second / lambda1;
        if (kappa >= 1.0) continue;

        const EigenDecomposition db = symmetric_eigen(b);
        Eigen::Index ib;
        db.eigenvalues.cwiseAbs().maxCoeff(&ib);
        const double mu1 = std::abs(db.eigenvalues[ib]);
        const double eta = spectral_norm(e);

        const PerturbationBound bound = eigenvector_perturbation_bound(lambda1, kappa, mu1, eta);
        if (bound.vacuous) continue;

        Eigen::VectorXd va = da.eigenvectors.col(ia);
        Eigen::VectorXd vb = db.eigenvectors.col(ib);
        if (va.dot(vb) < 0.0) vb = -vb;
        CHECK((va - vb).norm() <= bound.value + 1e-9);
        ++checked;
    }
    CHECK(checked >= 50);  // the sample must actually exercise the bound
}
