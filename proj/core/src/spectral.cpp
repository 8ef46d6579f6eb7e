#include "netgame/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/rng.hpp"

namespace netgame {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, double tol = 1e-9) {
    if (m.rows() != m.cols()) throw std::invalid_argument("spectral: matrix must be square");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol)
                throw std::invalid_argument("spectral: matrix is not symmetric within tolerance");
}

double offdiagonal_frobenius(const Eigen::MatrixXd& m) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) sum += m(i, j) * m(i, j);
    return std::sqrt(sum);
}

/// Flips each column so its largest-absolute entry is positive; ties go to
/// the lowest index.
void orient_columns(Eigen::MatrixXd& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const double a = std::abs(vectors(r, c));
            if (a > best + 1e-15) {
                best = a;
                pivot = r;
            }
        }
        if (vectors(pivot, c) < 0.0) vectors.col(c) = -vectors.col(c);
    }
}

void orient_vector(Eigen::VectorXd& v) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < v.size(); ++r) {
        const double a = std::abs(v[r]);
        if (a > best + 1e-15) {
            best = a;
            pivot = r;
        }
    }
    if (v[pivot] < 0.0) v = -v;
}

}  // namespace

EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& matrix, double tol, int max_sweeps) {
    require_symmetric(matrix);
    const int n = static_cast<int>(matrix.rows());
    EigenDecomposition out;
    if (n == 0) return out;

    Eigen::MatrixXd a = matrix;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double scale = std::max(1.0, matrix.norm());
    const double target = tol * scale;

    int sweep = 0;
    double off = offdiagonal_frobenius(a);
    while (off > target && sweep < max_sweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = offdiagonal_frobenius(a);
        ++sweep;
    }
    if (off > target)
        throw std::runtime_error("symmetric_eigen: Jacobi did not converge in " + std::to_string(max_sweeps) +
                                 " sweeps, off-diagonal residual " + std::to_string(off));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        out.eigenvectors.col(k) = v.col(order[k]);
    }
    orient_columns(out.eigenvectors);
    out.sweeps = sweep;
    out.offdiagonal_residual = off;
    return out;
}

FirstEigenResult first_eigenvector(const Eigen::MatrixXd& matrix, double tol, int max_iters,
                                   bool probe_degeneracy) {
    require_symmetric(matrix);
    const int n = static_cast<int>(matrix.rows());
    FirstEigenResult out;
    if (n == 0) {
        out.degenerate = true;
        return out;
    }

    const double shift = matrix.cwiseAbs().rowwise().sum().maxCoeff();
    if (shift == 0.0) {
        out.eigenvector = Eigen::VectorXd::Zero(n);
        out.eigenvector[0] = 1.0;
        out.degenerate = true;
        return out;
    }

    // Deterministic generic start vector; a structured start (e.g. all-ones)
    // can be orthogonal to the dominant eigenvector.
    Rng rng(0x9E3779B97F4A7C15ULL);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + 0.25 * rng.uniform();
    x.normalize();

    // One power step on the shifted operator plus a Rayleigh estimate and the
    // unshifted residual. Convergence needs both a settled eigenvalue
    // (relative change <= 1e-12) and a residual below the caller's tolerance.
    struct IterationOutcome {
        double eigenvalue = 0.0;
        double residual = 0.0;
        int iterations = 0;
        bool converged = false;
    };
    const auto iterate = [&](Eigen::VectorXd& vec, const Eigen::VectorXd* deflate, int cap, double residual_tol) {
        IterationOutcome result;
        double prev = 0.0;
        bool have_prev = false;
        for (result.iterations = 1; result.iterations <= cap; ++result.iterations) {
            Eigen::VectorXd next = matrix * vec + shift * vec;
            if (deflate != nullptr) next -= (deflate->dot(next)) * (*deflate);
            const double norm = next.norm();
            if (norm <= 1e-300) {
                // vec already spans an eigenvector of the shifted operator's kernel
                result.eigenvalue = -shift;
                result.residual = (matrix * vec - result.eigenvalue * vec).norm();
                result.converged = true;
                return result;
            }
            next /= norm;
            const Eigen::VectorXd image = matrix * next;
            const double shifted = next.dot(image) + shift;
            result.eigenvalue = shifted - shift;
            result.residual = (image - result.eigenvalue * next).norm();
            vec = next;
            if (have_prev && std::abs(shifted - prev) <= 1e-12 * std::max(1.0, std::abs(shifted)) &&
                result.residual <= residual_tol * std::max(1.0, std::abs(result.eigenvalue))) {
                result.converged = true;
                return result;
            }
            prev = shifted;
            have_prev = true;
        }
        return result;
    };

    const IterationOutcome main = iterate(x, nullptr, max_iters, tol);
    out.eigenvalue = main.eigenvalue;
    out.eigenvector = x;
    out.iterations = main.iterations;
    out.residual = main.residual;
    if (!main.converged && main.residual > tol * std::max(1.0, std::abs(main.eigenvalue)))
        throw std::runtime_error("first_eigenvector: iteration cap reached with residual " +
                                 std::to_string(main.residual));
    orient_vector(out.eigenvector);

    // Cheap deflated probe of the runner-up in the shifted spectrum; only used
    // to raise the degeneracy flag, so a loose cap is fine.
    if (!probe_degeneracy) return out;

    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y[i] = 1.0 - 0.25 * rng.uniform();
    y -= (out.eigenvector.dot(y)) * out.eigenvector;
    if (y.norm() > 1e-12) {
        y.normalize();
        const IterationOutcome probe = iterate(y, &out.eigenvector, std::min(max_iters, 5000), 1e-6);
        if (std::abs(probe.eigenvalue - out.eigenvalue) <= 1e-9 * std::max(1.0, std::abs(out.eigenvalue)))
            out.degenerate = true;
    }
    return out;
}

double spectral_norm(const Eigen::MatrixXd& matrix) {
    require_symmetric(matrix);
    if (matrix.rows() == 0) return 0.0;
    if (matrix.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    // dominant eigenvalues of +A and -A cover max |lambda_i|
    const double hi = first_eigenvector(matrix, 1e-9, 100000, false).eigenvalue;
    const double lo = first_eigenvector(Eigen::MatrixXd(-matrix), 1e-9, 100000, false).eigenvalue;
    return std::max(std::abs(hi), std::abs(lo));
}

double inverted_spectral_gap(const EigenDecomposition& decomp) {
    if (decomp.eigenvalues.size() == 0) throw std::domain_error("inverted_spectral_gap: empty spectrum");
    const double lambda1 = decomp.eigenvalues[0];
    if (!(lambda1 > 0.0))
        throw std::domain_error("inverted_spectral_gap: undefined for lambda_1 <= 0");
    double worst = 0.0;
    for (Eigen::Index i = 1; i < decomp.eigenvalues.size(); ++i)
        worst = std::max(worst, std::abs(decomp.eigenvalues[i]));
    return worst / lambda1;
}

double cosine_similarity(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx == 0.0 || ny == 0.0) throw std::invalid_argument("cosine_similarity: zero vector");
    const double rho = x.dot(y) / (nx * ny);
    return std::clamp(rho, -1.0, 1.0);
}

Eigen::VectorXd alpha_values(const Eigen::VectorXd& eigenvalues, double beta) {
    if (eigenvalues.size() == 0) return {};
    const double lambda1 = eigenvalues.maxCoeff();
    if (beta * lambda1 >= 1.0)
        throw std::domain_error("alpha_values: beta * lambda_1 >= 1, equilibrium actions would be infinite");
    Eigen::VectorXd alpha(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double d = 1.0 - beta * eigenvalues[i];
        alpha[i] = 1.0 / (d * d);
    }
    return alpha;
}

PerturbationBound eigenvector_perturbation_bound(double lambda1, double kappa, double mu1, double eta) {
    if (!(lambda1 > 0.0)) throw std::domain_error("eigenvector_perturbation_bound: lambda_1 must be positive");
    if (kappa < 0.0 || kappa >= 1.0)
        throw std::domain_error("eigenvector_perturbation_bound: kappa must lie in [0, 1)");
    PerturbationBound out;
    const double diff = mu1 - eta;
    const double radicand = (diff * diff - lambda1 * lambda1 * kappa * kappa) / (1.0 - kappa * kappa);
    if (radicand < 0.0 || diff < 0.0) {
        out.value = std::sqrt(2.0);
        out.vacuous = true;
        return out;
    }
    const double inner = 2.0 * (1.0 - std::sqrt(radicand) / lambda1);
    if (inner < 0.0) {
        out.value = 0.0;
        return out;
    }
    out.value = std::sqrt(inner);
    if (out.value > std::sqrt(2.0)) {
        out.value = std::sqrt(2.0);
        out.vacuous = true;
    }
    return out;
}

}  // namespace netgame
