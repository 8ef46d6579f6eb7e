#include "netgame/game.hpp"

#include <Eigen/LU>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "netgame/spectral.hpp"

namespace netgame {

struct GameInstance::Cache {
    std::once_flag lambda_once;
    double lambda1 = 0.0;
    std::once_flag lu_once;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
};

GameInstance::GameInstance(Eigen::MatrixXd adjacency, double beta, Eigen::VectorXd standalone_values, bool check_b)
    : adjacency_(std::move(adjacency)), beta_(beta), b_(std::move(standalone_values)),
      cache_(std::make_shared<Cache>()) {
    if (adjacency_.rows() != adjacency_.cols()) throw std::invalid_argument("GameInstance: adjacency must be square");
    if (b_.size() != adjacency_.rows())
        throw std::invalid_argument("GameInstance: standalone value vector length mismatch");
    if (!(beta_ >= 0.0)) throw std::invalid_argument("GameInstance: beta must be nonnegative");
    if (check_b) {
        for (Eigen::Index i = 0; i < b_.size(); ++i)
            if (!(b_[i] >= 0.0)) throw std::invalid_argument("GameInstance: standalone values must be nonnegative");
    }
}

GameInstance::GameInstance(Eigen::MatrixXd adjacency, double beta, Eigen::VectorXd standalone_values)
    : GameInstance(std::move(adjacency), beta, std::move(standalone_values), true) {}

GameInstance GameInstance::unchecked(Eigen::MatrixXd adjacency, double beta, Eigen::VectorXd standalone_values) {
    return GameInstance(std::move(adjacency), beta, std::move(standalone_values), false);
}

GameInstance GameInstance::from_graph(const Graph& g, double beta, Eigen::VectorXd standalone_values) {
    return GameInstance(g.adjacency_matrix(), beta, std::move(standalone_values));
}

GameInstance GameInstance::from_graph(const Graph& g, double beta, double constant_b) {
    return GameInstance(g.adjacency_matrix(), beta, Eigen::VectorXd::Constant(g.size(), constant_b));
}

double GameInstance::lambda1() const {
    std::call_once(cache_->lambda_once, [this] { cache_->lambda1 = first_eigenvector(adjacency_, 1e-9, 100000, false).eigenvalue; });
    return cache_->lambda1;
}

bool GameInstance::feasible(double margin) const { return beta_ * lambda1() < 1.0 - margin; }

Eigen::VectorXd GameInstance::solve(const Eigen::VectorXd& rhs) const {
    std::call_once(cache_->lu_once, [this] {
        const Eigen::Index n = adjacency_.rows();
        cache_->lu.compute(Eigen::MatrixXd::Identity(n, n) - beta_ * adjacency_);
    });
    return cache_->lu.solve(rhs);
}

EquilibriumResult equilibrium(const GameInstance& game, double tol) {
    if (!game.feasible())
        throw std::domain_error("equilibrium: beta * lambda_1 >= 1, equilibrium actions would be infinite");
    EquilibriumResult out;
    out.feasible = true;
    out.actions = game.solve(game.standalone_values());
    const Eigen::VectorXd defect =
        out.actions - game.standalone_values() - game.beta() * (game.adjacency() * out.actions);
    out.residual = defect.size() > 0 ? defect.cwiseAbs().maxCoeff() : 0.0;
    if (out.residual > tol)
        throw std::runtime_error("equilibrium: solve residual above tolerance");
    out.welfare = 0.5 * out.actions.squaredNorm();
    return out;
}

double welfare_after(const GameInstance& game, const Eigen::VectorXd& y) {
    if (y.size() != game.size()) throw std::invalid_argument("welfare_after: intervention length mismatch");
    if (!game.feasible())
        throw std::domain_error("welfare_after: beta * lambda_1 >= 1, equilibrium actions would be infinite");
    const Eigen::VectorXd actions = game.solve(game.standalone_values() + y);
    return 0.5 * actions.squaredNorm();
}

double delta_welfare(const GameInstance& game, const Eigen::VectorXd& y) {
    if (y.size() != game.size()) throw std::invalid_argument("delta_welfare: intervention length mismatch");
    if (!game.feasible())
        throw std::domain_error("delta_welfare: beta * lambda_1 >= 1, equilibrium actions would be infinite");
    const Eigen::VectorXd base = game.solve(game.standalone_values());
    const Eigen::VectorXd shift = game.solve(y);
    return 0.5 * (shift.squaredNorm() + 2.0 * base.dot(shift));
}

BestResponseResult best_response_dynamics(const GameInstance& game, const Eigen::VectorXd& a0, double step_tol,
                                          int max_rounds) {
    if (a0.size() != game.size()) throw std::invalid_argument("best_response_dynamics: start vector length mismatch");
    BestResponseResult out;
    Eigen::VectorXd a = a0;
    const double blowup = 1e100;
    for (int round = 0; round < max_rounds; ++round) {
        const Eigen::VectorXd next = game.standalone_values() + game.beta() * (game.adjacency() * a);
        out.last_step = (next - a).cwiseAbs().maxCoeff();
        a = next;
        out.welfare_trajectory.push_back(0.5 * a.squaredNorm());
        out.rounds = round + 1;
        if (!std::isfinite(out.last_step) || a.cwiseAbs().maxCoeff() > blowup)
            throw std::runtime_error("best_response_dynamics: actions diverging, game is infeasible");
        if (out.last_step <= step_tol) {
            out.converged = true;
            out.actions = a;
            return out;
        }
    }
    throw std::runtime_error("best_response_dynamics: round cap exceeded, last step " +
                             std::to_string(out.last_step));
}

BestResponseResult best_response_dynamics(const GameInstance& game, double step_tol, int max_rounds) {
    return best_response_dynamics(game, Eigen::VectorXd::Zero(game.size()), step_tol, max_rounds);
}

}  // namespace netgame
