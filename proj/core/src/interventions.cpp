#include "netgame/interventions.hpp"

#include <cmath>
#include <stdexcept>

#include "netgame/estimation.hpp"
#include "netgame/spectral.hpp"

namespace netgame {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::baseline: return "baseline";
        case Strategy::uniform: return "uniform";
        case Strategy::expected_degree: return "expected_degree";
        case Strategy::realized_degree: return "realized_degree";
        case Strategy::first_eigenvector_realized: return "first_eigenvector_realized";
        case Strategy::first_eigenvector_expected: return "first_eigenvector_expected";
        case Strategy::sbm_reconstructed: return "sbm_reconstructed";
        case Strategy::optimal: return "optimal";
        case Strategy::custom: return "custom";
    }
    return "custom";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::baseline, Strategy::uniform, Strategy::expected_degree, Strategy::realized_degree,
                       Strategy::first_eigenvector_realized, Strategy::first_eigenvector_expected,
                       Strategy::sbm_reconstructed, Strategy::optimal, Strategy::custom}) {
        if (strategy_name(s) == name) return s;
    }
    return std::nullopt;
}

Intervention proportional_intervention(const Eigen::VectorXd& direction, double budget, Strategy strategy) {
    if (!(budget >= 0.0)) throw std::invalid_argument("proportional_intervention: budget must be nonnegative");
    const double norm = direction.norm();
    if (norm == 0.0) throw std::invalid_argument("proportional_intervention: zero direction");
    Intervention out;
    out.y = std::sqrt(budget) / norm * direction;
    out.budget = budget;
    out.strategy = strategy;
    return out;
}

Intervention optimal_intervention(const GameInstance& game, double budget, double tol) {
    if (!(budget > 0.0)) throw std::invalid_argument("optimal_intervention: budget must be positive");
    if (!game.feasible())
        throw std::domain_error("optimal_intervention: beta * lambda_1 >= 1, game has no equilibrium");

    const EigenDecomposition decomp = symmetric_eigen(game.adjacency());
    const Eigen::VectorXd alpha = alpha_values(decomp.eigenvalues, game.beta());
    const Eigen::VectorXd b_spec = decomp.eigenvectors.transpose() * game.standalone_values();
    const int n = game.size();
    const double alpha1 = alpha[0];
    const double b_norm = game.standalone_values().norm();

    // components numerically inside the top eigenspace
    const auto in_top_space = [&](int l) { return alpha[l] >= alpha1 * (1.0 - 1e-12); };

    const auto budget_used = [&](double mu) {
        double total = 0.0;
        for (int l = 0; l < n; ++l) {
            const double y_l = alpha[l] * b_spec[l] / (mu - alpha[l]);
            total += y_l * y_l;
        }
        return total;
    };

    bool hard_case = true;
    for (int l = 0; l < n; ++l) {
        if (in_top_space(l) && std::abs(b_spec[l]) >= 1e-10 * std::max(b_norm, 1e-30)) {
            hard_case = false;
            break;
        }
    }

    Eigen::VectorXd y_spec(n);
    if (hard_case) {
        // mass that the multiplier mu = alpha_1 assigns outside the top space
        double used = 0.0;
        for (int l = 0; l < n; ++l) {
            if (in_top_space(l)) {
                y_spec[l] = 0.0;
            } else {
                y_spec[l] = alpha[l] * b_spec[l] / (alpha1 - alpha[l]);
                used += y_spec[l] * y_spec[l];
            }
        }
        if (used <= budget) {
            y_spec[0] = std::sqrt(budget - used);  // residual rides on +v_1
        } else {
            hard_case = false;  // interior components already exceed C: interior multiplier exists
        }
    }

    if (!hard_case) {
        double lo = alpha1 * (1.0 + 1e-12) + 1e-300;
        double step = std::max(alpha1, 1.0);
        double hi = alpha1 + step;
        while (budget_used(hi) >= budget) {
            step *= 2.0;
            hi = alpha1 + step;
            if (!std::isfinite(hi)) throw std::runtime_error("optimal_intervention: bracket expansion failed");
        }
        double mu = hi;
        bool met = false;
        for (int iter = 0; iter < 200; ++iter) {
            mu = 0.5 * (lo + hi);
            const double used = budget_used(mu);
            if (std::abs(used - budget) <= tol * budget) {
                met = true;
                break;
            }
            if (used > budget)
                lo = mu;
            else
                hi = mu;
        }
        if (!met && std::abs(budget_used(mu) - budget) > 1e-6 * budget)
            throw std::runtime_error("optimal_intervention: bisection did not meet the budget tolerance");
        for (int l = 0; l < n; ++l) y_spec[l] = alpha[l] * b_spec[l] / (mu - alpha[l]);
    }

    Intervention out;
    out.y = decomp.eigenvectors * y_spec;
    const double cost = out.y.norm();
    if (cost > 0.0) out.y *= std::sqrt(budget) / cost;  // exact saturation
    out.budget = budget;
    out.strategy = Strategy::optimal;
    return out;
}

std::vector<Intervention> heuristic_suite(const GameInstance& game, const std::vector<Strategy>& strategies,
                                          double budget, const HeuristicInputs& inputs) {
    const int n = game.size();
    std::vector<Intervention> out;
    out.reserve(strategies.size());

    for (Strategy s : strategies) {
        switch (s) {
            case Strategy::baseline: {
                Intervention iv;
                iv.y = Eigen::VectorXd::Zero(n);
                iv.budget = budget;
                iv.strategy = s;
                out.push_back(std::move(iv));
                break;
            }
            case Strategy::uniform:
                out.push_back(proportional_intervention(Eigen::VectorXd::Ones(n), budget, s));
                break;
            case Strategy::realized_degree: {
                Eigen::VectorXd deg = game.adjacency().rowwise().sum();
                out.push_back(proportional_intervention(deg, budget, s));
                break;
            }
            case Strategy::expected_degree: {
                if (!inputs.expected)
                    throw std::invalid_argument("heuristic_suite: expected_degree needs the expected matrix");
                out.push_back(proportional_intervention(expected_degree_vector(*inputs.expected), budget, s));
                break;
            }
            case Strategy::first_eigenvector_realized:
                out.push_back(proportional_intervention(first_eigenvector(game.adjacency()).eigenvector, budget, s));
                break;
            case Strategy::first_eigenvector_expected: {
                if (!inputs.expected)
                    throw std::invalid_argument(
                        "heuristic_suite: first_eigenvector_expected needs the expected matrix");
                out.push_back(
                    proportional_intervention(first_eigenvector(inputs.expected->entries()).eigenvector, budget, s));
                break;
            }
            case Strategy::sbm_reconstructed: {
                if (!inputs.group_labels)
                    throw std::invalid_argument("heuristic_suite: sbm_reconstructed needs group labels");
                const BlockEstimate blocks = block_probabilities(game.adjacency(), *inputs.group_labels, false);
                const Eigen::MatrixXd tiled = tile_block_matrix(blocks.probabilities, *inputs.group_labels);
                out.push_back(proportional_intervention(first_eigenvector(tiled).eigenvector, budget, s));
                break;
            }
            case Strategy::optimal:
                out.push_back(optimal_intervention(game, budget));
                break;
            case Strategy::custom:
                throw std::invalid_argument("heuristic_suite: custom interventions are built by the caller");
        }
    }
    return out;
}

RatioResult competitive_ratio(const GameInstance& game, const Intervention& y, const Intervention& y_star) {
    RatioResult out;
    out.welfare = welfare_after(game, y.y);
    out.optimal_welfare = welfare_after(game, y_star.y);
    if (out.optimal_welfare <= 0.0)
        throw std::domain_error("competitive_ratio: optimal welfare is zero (b = 0 with zero budget)");
    out.ratio = out.welfare / out.optimal_welfare;
    return out;
}

double cosine_ratio_lower_bound(double gamma) {
    if (gamma < -1.0 || gamma > 1.0) throw std::invalid_argument("cosine_ratio_lower_bound: gamma outside [-1,1]");
    return 1.0 - 4.0 * std::sqrt(2.0 * (1.0 - gamma));
}

double blind_ratio_upper_bound(double gamma, double alpha1, double alpha2) {
    if (!(alpha1 >= alpha2 && alpha2 > 0.0))
        throw std::invalid_argument("blind_ratio_upper_bound: need alpha_1 >= alpha_2 > 0");
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("blind_ratio_upper_bound: gamma outside [0,1]");
    const double a = alpha2 / alpha1;
    return gamma * gamma * (1.0 - a) + a + 2.0 * std::sqrt(a);
}

double gw_budget_threshold(const Eigen::VectorXd& b, double beta, double dtilde, double eps) {
    if (!(beta > 0.0 && dtilde > 0.0)) throw std::invalid_argument("gw_budget_threshold: beta, dtilde must be positive");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("gw_budget_threshold: eps must lie in (0,1)");
    const double denom = eps * beta * dtilde;
    return 256.0 * b.squaredNorm() / (denom * denom);
}

}  // namespace netgame
