#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

struct ConditionRecord {
    std::string name;
    double required = 0.0;  ///< threshold the actual value is held against
    double actual = 0.0;
    bool satisfied = false;
    std::string note;
};

/// Evaluation of a set of concentration conditions for one random-graph
/// model. Reports, never throws, on unsatisfied conditions; the constants
/// come straight from the underlying bounds and are loose at small n.
struct ConcentrationReport {
    std::string model;
    double epsilon = 0.0;
    double delta = 0.0;
    std::vector<ConditionRecord> conditions;

    bool satisfied() const {
        for (const auto& c : conditions)
            if (!c.satisfied) return false;
        return true;
    }
};

/// Conditions for a general independent-edge model with expected matrix B:
///   1. d_max >= (4/9) ln(2n/delta)
///   2. kappa < 1 (inverted spectral gap of B)
///   3. lambda_1(B) (1 - kappa^2) >= 1024 sqrt(d_max ln(2n/delta)) / eps^2
ConcentrationReport check_general(const ExpectedMatrix& expected, double eps, double delta);

/// Conditions specialized to expected-degree (GW) models:
///   1. w_1 >= (4/9) ln(2n/delta)
///   2. w_1 <= ||w|| / 6
///   3. dtilde = sum(w^2)/sum(w) >= 256 (sqrt(4 w_1 ln(2n/delta)) + 1) / eps^2
ConcentrationReport check_gw(const Eigen::VectorXd& w, double eps, double delta);

/// Uniform-degree specialization (w_i = n p):
///   1. n p >= (4/9) ln(2n/delta)
///   2. n >= 786^2 * 6 / eps^4   (explicit but loose constant)
ConcentrationReport check_gnp(int n, double p, double eps, double delta);

/// High-probability ceiling on ||A - B|| for an independent-edge sample:
/// sqrt(4 d_max ln(2n/delta)). Meaningful when d_max >= (4/9) ln(2n/delta);
/// check applicability with chung_radcliffe_applicable.
double chung_radcliffe_deviation(double d_max, int n, double delta);

/// Whether the deviation bound's degree precondition holds.
bool chung_radcliffe_applicable(double d_max, int n, double delta);

/// Largest beta at which a sampled game stays feasible with probability at
/// least 1 - delta: 1 / (lambda_1(B) + sqrt(4 d_max ln(2n/delta))).
double spectral_radius_threshold(double lambda1_expected, double d_max, int n, double delta);

}  // namespace netgame
