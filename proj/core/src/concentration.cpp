#include "netgame/concentration.hpp"

#include <cmath>
#include <stdexcept>

#include "netgame/spectral.hpp"

namespace netgame {

namespace {

void require_eps_delta(double eps, double delta) {
    if (!(eps > 0.0 && eps < 1.0 && delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("concentration: eps and delta must lie in (0,1)");
}

double log_2n_over_delta(int n, double delta) { return std::log(2.0 * n / delta); }

}  // namespace

ConcentrationReport check_general(const ExpectedMatrix& expected, double eps, double delta) {
    require_eps_delta(eps, delta);
    const int n = expected.size();
    ConcentrationReport report;
    report.model = "independent_edges";
    report.epsilon = eps;
    report.delta = delta;
    if (n == 0) return report;

    const double logterm = log_2n_over_delta(n, delta);
    const double d_max = max_expected_degree(expected);

    ConditionRecord c1;
    c1.name = "d_max >= (4/9) ln(2n/delta)";
    c1.required = 4.0 / 9.0 * logterm;
    c1.actual = d_max;
    c1.satisfied = c1.actual >= c1.required;
    report.conditions.push_back(c1);

    const EigenDecomposition decomp = symmetric_eigen(expected.entries());
    const double lambda1 = decomp.eigenvalues[0];
    double kappa = 1.0;
    bool kappa_defined = false;
    if (lambda1 > 0.0) {
        kappa = inverted_spectral_gap(decomp);
        kappa_defined = true;
    }

    ConditionRecord c2;
    c2.name = "inverted spectral gap kappa < 1";
    c2.required = 1.0;
    c2.actual = kappa;
    c2.satisfied = kappa_defined && kappa < 1.0;
    if (!kappa_defined) c2.note = "lambda_1 <= 0, gap undefined";
    report.conditions.push_back(c2);

    ConditionRecord c3;
    c3.name = "lambda_1 (1 - kappa^2) >= 1024 sqrt(d_max ln(2n/delta)) / eps^2";
    c3.required = 1024.0 * std::sqrt(std::max(d_max, 0.0) * logterm) / (eps * eps);
    c3.actual = kappa_defined ? lambda1 * (1.0 - kappa * kappa) : 0.0;
    c3.satisfied = c3.actual >= c3.required;
    report.conditions.push_back(c3);
    return report;
}

ConcentrationReport check_gw(const Eigen::VectorXd& w, double eps, double delta) {
    require_eps_delta(eps, delta);
    const auto n = static_cast<int>(w.size());
    ConcentrationReport report;
    report.model = "gw";
    report.epsilon = eps;
    report.delta = delta;
    if (n == 0) return report;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (!(w[i] > 0.0)) throw std::invalid_argument("check_gw: weights must be positive");

    const double logterm = log_2n_over_delta(n, delta);
    const double w1 = w.maxCoeff();
    const double dtilde = w.squaredNorm() / w.sum();

    ConditionRecord c1;
    c1.name = "w_1 >= (4/9) ln(2n/delta)";
    c1.required = 4.0 / 9.0 * logterm;
    c1.actual = w1;
    c1.satisfied = c1.actual >= c1.required;
    report.conditions.push_back(c1);

    ConditionRecord c2;
    c2.name = "w_1 <= ||w|| / 6";
    c2.required = w.norm() / 6.0;
    c2.actual = w1;
    c2.satisfied = c2.actual <= c2.required;
    report.conditions.push_back(c2);

    ConditionRecord c3;
    c3.name = "dtilde >= 256 (sqrt(4 w_1 ln(2n/delta)) + 1) / eps^2";
    c3.required = 256.0 * (std::sqrt(4.0 * w1 * logterm) + 1.0) / (eps * eps);
    c3.actual = dtilde;
    c3.satisfied = c3.actual >= c3.required;
    report.conditions.push_back(c3);
    return report;
}

ConcentrationReport check_gnp(int n, double p, double eps, double delta) {
    require_eps_delta(eps, delta);
    if (n < 1 || !(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("check_gnp: invalid n or p");
    ConcentrationReport report;
    report.model = "gnp";
    report.epsilon = eps;
    report.delta = delta;

    const double logterm = log_2n_over_delta(n, delta);

    // uniform-degree view w_i = n p, so the degree condition reads
    // p >= (4/9) ln(2n/delta) / n
    ConditionRecord c1;
    c1.name = "p >= (4/9) ln(2n/delta) / n";
    c1.required = 4.0 / 9.0 * logterm / n;
    c1.actual = p;
    c1.satisfied = c1.actual >= c1.required;
    report.conditions.push_back(c1);

    ConditionRecord c2;
    c2.name = "n >= 786^2 * 6 / eps^4";
    c2.required = 786.0 * 786.0 * 6.0 / (eps * eps * eps * eps);
    c2.actual = n;
    c2.satisfied = c2.actual >= c2.required;
    c2.note = "loose constant; can likely be optimized";
    report.conditions.push_back(c2);
    return report;
}

double chung_radcliffe_deviation(double d_max, int n, double delta) {
    if (!(d_max >= 0.0) || n < 1 || !(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("chung_radcliffe_deviation: invalid arguments");
    return std::sqrt(4.0 * d_max * log_2n_over_delta(n, delta));
}

bool chung_radcliffe_applicable(double d_max, int n, double delta) {
    return d_max >= 4.0 / 9.0 * log_2n_over_delta(n, delta);
}

double spectral_radius_threshold(double lambda1_expected, double d_max, int n, double delta) {
    if (!(lambda1_expected > 0.0) || !(d_max >= 0.0))
        throw std::invalid_argument("spectral_radius_threshold: invalid arguments");
    return 1.0 / (lambda1_expected + chung_radcliffe_deviation(d_max, n, delta));
}

}  // namespace netgame
