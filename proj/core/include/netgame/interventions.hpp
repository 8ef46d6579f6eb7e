#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"

namespace netgame {

/// Which rule produced an intervention vector.
enum class Strategy {
    baseline,
    uniform,
    expected_degree,
    realized_degree,
    first_eigenvector_realized,
    first_eigenvector_expected,
    sbm_reconstructed,
    optimal,
    custom,
};

std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

/// Additive shift y to the standalone values with quadratic cost ||y||^2
/// charged against the budget C. Every non-baseline strategy saturates the
/// budget: ||y||^2 = C.
struct Intervention {
    Eigen::VectorXd y;
    double budget = 0.0;
    Strategy strategy = Strategy::custom;

    double cost() const { return y.squaredNorm(); }
};

/// y = sqrt(C) * direction / ||direction||. Throws on a zero direction.
Intervention proportional_intervention(const Eigen::VectorXd& direction, double budget,
                                       Strategy strategy = Strategy::custom);

/// Budget-constrained welfare-optimal intervention: maximizes W(b + y) over
/// ||y||^2 = C. Works in the adjacency eigenbasis, where the stationarity
/// conditions read y_l = alpha_l b_l / (mu - alpha_l) for a multiplier
/// mu > alpha_1 fixed by the budget equation sum_l y_l(mu)^2 = C, which is
/// strictly decreasing in mu and solved by bracketing bisection. When b has
/// (numerically) no component on the top eigenspace and the remaining
/// components cannot absorb the budget, mu = alpha_1 and the residual budget
/// rides on +v_1 (the hard case). Throws std::domain_error on infeasible
/// games and std::runtime_error if bisection fails to meet its tolerance.
Intervention optimal_intervention(const GameInstance& game, double budget, double tol = 1e-10);

struct HeuristicInputs {
    std::optional<ExpectedMatrix> expected;        ///< for expected-degree / expected-eigenvector rules
    std::optional<std::vector<int>> group_labels;  ///< for the SBM reconstruction rule
};

/// Builds the requested heuristic interventions on one game. Throws
/// std::invalid_argument when a strategy needs an input (expected matrix,
/// group labels) that was not supplied, or when its direction is zero.
std::vector<Intervention> heuristic_suite(const GameInstance& game, const std::vector<Strategy>& strategies,
                                          double budget, const HeuristicInputs& inputs = {});

struct RatioResult {
    double ratio = 0.0;
    double welfare = 0.0;
    double optimal_welfare = 0.0;
};

/// W(y) / W(y*), both at the same budget. Throws std::domain_error when the
/// optimal welfare is zero (only possible with b = 0 and C = 0).
RatioResult competitive_ratio(const GameInstance& game, const Intervention& y, const Intervention& y_star);

/// Guaranteed competitive ratio of an intervention at cosine similarity gamma
/// to the optimum (large budgets): 1 - 4 sqrt(2 (1 - gamma)). Vacuous below
/// gamma = 31/32.
double cosine_ratio_lower_bound(double gamma);

/// Ceiling on the competitive ratio of a budget-saturating intervention at
/// cosine similarity gamma to the optimum when standalone values are
/// negligible: gamma^2 (1 - a) + a + 2 sqrt(a) with a = alpha_2 / alpha_1.
double blind_ratio_upper_bound(double gamma, double alpha1, double alpha2);

/// Budget above which the expected-degree-proportional intervention in a GW
/// graph is (1 - eps)-competitive: 256 ||b||^2 / (eps beta dtilde)^2, with
/// dtilde the second-order average degree.
double gw_budget_threshold(const Eigen::VectorXd& b, double beta, double dtilde, double eps);

}  // namespace netgame
