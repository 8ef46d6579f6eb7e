#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

/// One linear-quadratic network game: adjacency A, complementarity strength
/// beta >= 0, and standalone marginal values b >= 0. Players choose actions
/// a_i maximizing b_i a_i - a_i^2/2 + beta * sum_j A_ij a_i a_j; simultaneous
/// best responses solve (I - beta A) a = b. Immutable after construction.
class GameInstance {
  public:
    /// Validates beta >= 0 and b >= 0 componentwise.
    GameInstance(Eigen::MatrixXd adjacency, double beta, Eigen::VectorXd standalone_values);

    /// Skips the sign check on b for callers that deliberately probe the
    /// solver outside the standing assumptions.
    static GameInstance unchecked(Eigen::MatrixXd adjacency, double beta, Eigen::VectorXd standalone_values);

    static GameInstance from_graph(const Graph& g, double beta, Eigen::VectorXd standalone_values);
    static GameInstance from_graph(const Graph& g, double beta, double constant_b = 1.0);

    int size() const { return static_cast<int>(adjacency_.rows()); }
    const Eigen::MatrixXd& adjacency() const { return adjacency_; }
    double beta() const { return beta_; }
    const Eigen::VectorXd& standalone_values() const { return b_; }

    /// Largest signed adjacency eigenvalue (cached after the first call).
    double lambda1() const;
    /// beta * lambda_1 < 1 - margin, the existence condition for equilibrium.
    bool feasible(double margin = 1e-9) const;

    /// Solves (I - beta A) x = rhs through a cached LU factorization.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  private:
    GameInstance(Eigen::MatrixXd adjacency, double beta, Eigen::VectorXd standalone_values, bool check_b);

    Eigen::MatrixXd adjacency_;
    double beta_ = 0.0;
    Eigen::VectorXd b_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

struct EquilibriumResult {
    Eigen::VectorXd actions;
    double welfare = 0.0;     ///< (1/2) ||a*||^2
    double residual = 0.0;    ///< ||a* - b - beta A a*||_inf
    bool feasible = false;
};

/// Equilibrium actions a* = (I - beta A)^{-1} b by dense LU with partial
/// pivoting. Throws std::domain_error when beta lambda_1 >= 1 - 1e-9.
EquilibriumResult equilibrium(const GameInstance& game, double tol = 1e-8);

/// Equilibrium welfare after shifting standalone values by y (the welfare
/// W(y) of an intervention). Entries of b + y may be negative.
double welfare_after(const GameInstance& game, const Eigen::VectorXd& y);

/// Welfare change of intervention y against the no-intervention baseline,
/// via the closed form (||M^{-1}y||^2 + 2 (M^{-1}b).(M^{-1}y)) / 2 on the
/// cached factorization; no second full solve.
double delta_welfare(const GameInstance& game, const Eigen::VectorXd& y);

struct BestResponseResult {
    std::vector<double> welfare_trajectory;  ///< welfare after each round
    Eigen::VectorXd actions;
    int rounds = 0;
    double last_step = 0.0;  ///< ||delta a||_inf of the final round
    bool converged = false;
};

/// Synchronous best-response dynamics a <- b + beta A a from a0 until the
/// step drops below step_tol. Throws std::runtime_error when the round cap is
/// exceeded (which includes divergence on infeasible games, detected through
/// step growth past overflow-guard levels).
BestResponseResult best_response_dynamics(const GameInstance& game, const Eigen::VectorXd& a0,
                                          double step_tol = 1e-8, int max_rounds = 100000);
BestResponseResult best_response_dynamics(const GameInstance& game, double step_tol = 1e-8,
                                          int max_rounds = 100000);

}  // namespace netgame
