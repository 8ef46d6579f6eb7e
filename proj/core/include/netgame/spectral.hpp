#pragma once

#include <Eigen/Dense>

namespace netgame {

/// Full spectrum of a symmetric matrix. Eigenvalues are sorted descending by
/// signed value (not by magnitude), eigenvectors are the matching orthonormal
/// columns. Each column is oriented so that its entry of largest absolute
/// value is positive (ties resolved toward the lowest index), which keeps
/// Perron vectors nonnegative and makes cross-run comparisons stable.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    int sweeps = 0;
    double offdiagonal_residual = 0.0;
};

/// Cyclic Jacobi eigendecomposition. Sweeps until the off-diagonal Frobenius
/// norm drops below tol * max(1, ||A||_F) or the sweep cap is hit; throws
/// std::runtime_error with the residual on non-convergence. Input must pass
/// the symmetry check (tolerance symmetry_tol).
EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& matrix, double tol = 1e-10, int max_sweeps = 100);

struct FirstEigenResult {
    double eigenvalue = 0.0;
    Eigen::VectorXd eigenvector;
    int iterations = 0;
    double residual = 0.0;
    /// Top eigenvalue numerically repeated (or the matrix is zero): the
    /// returned vector is one unit vector in the top eigenspace.
    bool degenerate = false;
};

/// Dominant (largest signed) eigenpair by power iteration. A diagonal shift by
/// the largest absolute row sum makes the target eigenvalue strictly dominant
/// even for bipartite spectra; the shift is removed from the reported value.
/// Stops when the relative eigenvalue change falls below 1e-12; the final
/// residual ||Av - lambda v|| must be <= tol or std::runtime_error is thrown.
/// probe_degeneracy runs one deflated iteration to detect a repeated top
/// eigenvalue; callers that only need the eigenvalue can skip it.
FirstEigenResult first_eigenvector(const Eigen::MatrixXd& matrix, double tol = 1e-9, int max_iters = 100000,
                                   bool probe_degeneracy = true);

/// max_i |lambda_i|.
double spectral_norm(const Eigen::MatrixXd& matrix);

/// Inverted spectral gap kappa = max_{i>1} |lambda_i| / lambda_1. Requires
/// lambda_1 > 0 (throws std::domain_error otherwise). Small kappa means the
/// first eigenvector dominates the spectrum.
double inverted_spectral_gap(const EigenDecomposition& decomp);

/// (x . y) / (||x|| ||y||); throws std::invalid_argument on a zero vector.
/// For unit vectors, ||x - y||^2 = 2 (1 - cosine_similarity(x, y)).
double cosine_similarity(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// alpha_i = 1 / (1 - beta * lambda_i)^2, the squared eigenvalues of
/// (I - beta A)^{-1} in the order matching the input. Requires
/// beta * lambda_1 < 1; equilibria do not exist past that point.
Eigen::VectorXd alpha_values(const Eigen::VectorXd& eigenvalues, double beta);

struct PerturbationBound {
    double value = 0.0;   ///< upper bound on ||v1(A) - v1(B)||, clamped to sqrt(2)
    bool vacuous = false; ///< radicand negative or bound above the sign-aligned diameter
};

/// Bound on the distance between dominant eigenvectors of two symmetric
/// matrices: sqrt(2 (1 - sqrt(((mu1 - eta)^2 - lambda1^2 kappa^2) / (1 - kappa^2)) / lambda1)),
/// where lambda1, kappa describe the reference matrix, mu1 the perturbed
/// matrix's dominant absolute eigenvalue, and eta the spectral norm of the
/// difference. With sign alignment the distance never exceeds sqrt(2), so
/// larger (or undefined) values are reported as vacuous.
PerturbationBound eigenvector_perturbation_bound(double lambda1, double kappa, double mu1, double eta);

}  // namespace netgame
