#include "netgame/estimation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netgame/spectral.hpp"

namespace netgame {

namespace {

int group_count(const std::vector<int>& labels) {
    int m = 0;
    for (int l : labels) {
        if (l < 0) throw std::invalid_argument("estimation: group labels must be nonnegative");
        m = std::max(m, l + 1);
    }
    return m;
}

std::vector<std::vector<int>> group_members(const std::vector<int>& labels, int m) {
    std::vector<std::vector<int>> members(m);
    for (std::size_t v = 0; v < labels.size(); ++v) members[labels[v]].push_back(static_cast<int>(v));
    for (const auto& g : members)
        if (g.empty()) throw std::invalid_argument("estimation: empty group in label vector");
    return members;
}

}  // namespace

NeighborOracle::NeighborOracle(const Graph& g, std::uint64_t seed) : g_(&g), rng_(seed) {
    neighbors_.resize(g.size());
    for (int v = 0; v < g.size(); ++v) neighbors_[v] = g.neighbors(v);
}

int NeighborOracle::query(int v) {
    if (v < 0 || v >= g_->size()) throw std::out_of_range("NeighborOracle::query: vertex out of range");
    ++queries_;
    const auto& nbrs = neighbors_[v];
    if (nbrs.empty()) return -1;
    return nbrs[rng_.uniform_int(nbrs.size())];
}

EstimationResult estimate_degrees_edge_queries(EdgeOracle& oracle, double eps, double delta, std::uint64_t seed) {
    const int n = oracle.size();
    if (n < 2) throw std::invalid_argument("estimate_degrees_edge_queries: need at least two vertices");
    if (!(eps > 0.0 && eps < 1.0 && delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("estimate_degrees_edge_queries: eps, delta must lie in (0,1)");

    const auto k = static_cast<std::uint64_t>(
        std::ceil(std::log(2.0 * n / delta) / (2.0 * eps * eps)));
    const std::uint64_t before = oracle.queries();
    Rng rng(seed);

    EstimationResult out;
    out.method = "degrees_edge_queries";
    out.epsilon = eps;
    out.delta = delta;
    out.vector_estimate.resize(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t positive = 0;
        for (std::uint64_t t = 0; t < k; ++t) {
            // uniform partner j != i, repeats allowed
            auto j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - 1)));
            if (j >= i) ++j;
            if (oracle.query(i, j)) ++positive;
        }
        out.vector_estimate[i] =
            static_cast<double>(n - 1) * static_cast<double>(positive) / static_cast<double>(k);
    }
    out.queries_used = oracle.queries() - before;
    return out;
}

int mixing_steps_default(int n, double eps, double c_mix) {
    if (n < 2) throw std::invalid_argument("mixing_steps_default: need n >= 2");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("mixing_steps_default: eps must lie in (0,1)");
    return static_cast<int>(std::ceil(c_mix * std::log(static_cast<double>(n) / eps)));
}

EstimationResult random_walk_sampler(NeighborOracle& oracle, int start_vertex, int n_samples, int mixing_steps) {
    const int n = oracle.size();
    if (start_vertex < 0 || start_vertex >= n)
        throw std::out_of_range("random_walk_sampler: start vertex out of range");
    if (n_samples <= 0 || mixing_steps <= 0)
        throw std::invalid_argument("random_walk_sampler: sample and step counts must be positive");

    const std::uint64_t before = oracle.queries();
    EstimationResult out;
    out.method = "random_walk";
    out.vector_estimate = Eigen::VectorXd::Zero(n);

    int position = start_vertex;
    for (int s = 0; s < n_samples; ++s) {
        for (int t = 0; t < mixing_steps; ++t) {
            const int next = oracle.query(position);
            if (next < 0) throw std::domain_error("random_walk_sampler: walk trapped at an isolated vertex");
            position = next;
        }
        out.vector_estimate[position] += 1.0;
    }
    out.vector_estimate /= static_cast<double>(n_samples);
    out.queries_used = oracle.queries() - before;
    return out;
}

BlockEstimate block_probabilities(const Eigen::MatrixXd& adjacency, const std::vector<int>& labels,
                                  bool self_loops_allowed) {
    const auto n = static_cast<int>(adjacency.rows());
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("block_probabilities: label vector length mismatch");
    const int m = group_count(labels);
    const auto members = group_members(labels, m);

    BlockEstimate out;
    out.probabilities = Eigen::MatrixXd::Zero(m, m);
    for (int gi = 0; gi < m; ++gi) {
        for (int gj = gi; gj < m; ++gj) {
            double edges = 0.0;
            double pairs = 0.0;
            if (gi == gj) {
                const auto& g = members[gi];
                const auto s = static_cast<double>(g.size());
                pairs = self_loops_allowed ? s * (s + 1.0) / 2.0 : s * (s - 1.0) / 2.0;
                for (std::size_t a = 0; a < g.size(); ++a)
                    for (std::size_t b = self_loops_allowed ? a : a + 1; b < g.size(); ++b)
                        if (adjacency(g[a], g[b]) != 0.0) edges += 1.0;
            } else {
                pairs = static_cast<double>(members[gi].size()) * static_cast<double>(members[gj].size());
                for (int u : members[gi])
                    for (int v : members[gj])
                        if (adjacency(u, v) != 0.0) edges += 1.0;
            }
            if (pairs == 0.0) {
                out.flags.push_back("group " + std::to_string(gi) +
                                    ": no admissible pairs, within-group frequency undefined (set to 0)");
                continue;
            }
            out.probabilities(gi, gj) = edges / pairs;
            out.probabilities(gj, gi) = out.probabilities(gi, gj);
        }
    }
    return out;
}

BlockEstimate block_probabilities(const Graph& g, const std::vector<int>& labels) {
    return block_probabilities(g.adjacency_matrix(), labels, g.allows_self_loops());
}

Eigen::MatrixXd tile_block_matrix(const Eigen::MatrixXd& block_probs, const std::vector<int>& labels) {
    const auto n = static_cast<int>(labels.size());
    Eigen::MatrixXd tiled(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tiled(i, j) = block_probs(labels[i], labels[j]);
    tiled.diagonal().setZero();
    return tiled;
}

Eigen::MatrixXd empirical_block_matrix(const Graph& g, const std::vector<int>& labels) {
    return tile_block_matrix(block_probabilities(g, labels).probabilities, labels);
}

EstimationResult estimate_sbm_edge_queries(EdgeOracle& oracle, const std::vector<int>& labels, double eps,
                                           double delta, std::uint64_t seed) {
    if (!(eps > 0.0 && eps < 1.0 && delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("estimate_sbm_edge_queries: eps, delta must lie in (0,1)");
    const int m = group_count(labels);
    const auto members = group_members(labels, m);
    const auto k = static_cast<std::uint64_t>(
        std::ceil(std::log(2.0 * m * m / delta) / (2.0 * eps * eps)));
    const std::uint64_t before = oracle.queries();
    Rng rng(seed);

    EstimationResult out;
    out.method = "sbm_edge_queries";
    out.epsilon = eps;
    out.delta = delta;
    out.matrix_estimate = Eigen::MatrixXd::Zero(m, m);

    for (int gi = 0; gi < m; ++gi) {
        for (int gj = gi; gj < m; ++gj) {
            if (gi == gj && members[gi].size() < 2) {
                out.notes.push_back("group " + std::to_string(gi) +
                                    ": size 1, within-group probability not estimable (set to 0)");
                continue;
            }
            std::uint64_t positive = 0;
            for (std::uint64_t t = 0; t < k; ++t) {
                int u;
                int v;
                if (gi == gj) {
                    const auto s = members[gi].size();
                    const auto ui = rng.uniform_int(s);
                    auto vi = rng.uniform_int(s - 1);
                    if (vi >= ui) ++vi;  // uniform over distinct index pairs
                    u = members[gi][ui];
                    v = members[gi][vi];
                } else {
                    u = members[gi][rng.uniform_int(members[gi].size())];
                    v = members[gj][rng.uniform_int(members[gj].size())];
                }
                if (oracle.query(u, v)) ++positive;
            }
            const double p = static_cast<double>(positive) / static_cast<double>(k);
            out.matrix_estimate(gi, gj) = p;
            out.matrix_estimate(gj, gi) = p;
        }
    }
    out.queries_used = oracle.queries() - before;
    return out;
}

EstimationResult estimate_sbm_neighbor_queries(NeighborOracle& oracle, const std::vector<int>& labels,
                                               int samples_per_group, std::uint64_t seed) {
    if (samples_per_group <= 0)
        throw std::invalid_argument("estimate_sbm_neighbor_queries: sample count must be positive");
    const int m = group_count(labels);
    const auto members = group_members(labels, m);
    const std::uint64_t before = oracle.queries();
    Rng rng(seed);

    EstimationResult out;
    out.method = "sbm_neighbor_queries";

    // q(i, j): fraction of neighbor answers from group-i vertices that land in
    // group j. Estimates p_ij s_j / c_i with c_i = sum_k p_ik s_k.
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m, m);
    std::vector<std::int64_t> answered(m, 0);
    for (int gi = 0; gi < m; ++gi) {
        for (int t = 0; t < samples_per_group; ++t) {
            const int v = members[gi][rng.uniform_int(members[gi].size())];
            const int u = oracle.query(v);
            if (u < 0) continue;  // isolated vertex drawn: query spent, no sample
            q(gi, labels[u]) += 1.0;
            ++answered[gi];
        }
        if (answered[gi] == 0)
            throw std::domain_error("estimate_sbm_neighbor_queries: group " + std::to_string(gi) +
                                    " produced no neighbor answers");
        q.row(gi) /= static_cast<double>(answered[gi]);
    }

    // de-bias by target group size: r(i,j) = q(i,j)/s_j estimates p_ij / c_i
    Eigen::MatrixXd r = q;
    for (int gj = 0; gj < m; ++gj) r.col(gj) /= static_cast<double>(members[gj].size());

    // Scale recovery. x_i = log c_i satisfies x_j - x_i = log r(i,j) - log r(j,i)
    // for every pair observed in both directions; solve the normal equations of
    // that constraint set (a graph Laplacian) with a per-component gauge.
    std::vector<int> comp(m, -1);
    {
        int next = 0;
        for (int s = 0; s < m; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = next;
            while (!stack.empty()) {
                const int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < m; ++j) {
                    if (comp[j] < 0 && r(i, j) > 0.0 && r(j, i) > 0.0) {
                        comp[j] = next;
                        stack.push_back(j);
                    }
                }
            }
            ++next;
        }
        if (next > 1)
            out.notes.push_back("symmetry-constraint graph has " + std::to_string(next) +
                                " components; scales are only consistent within components");
    }

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j || !(r(i, j) > 0.0 && r(j, i) > 0.0)) continue;
            const double d = std::log(r(i, j)) - std::log(r(j, i));  // = x_j - x_i
            lap(i, i) += 1.0;
            lap(i, j) -= 1.0;
            rhs(i) -= d;
            lap(j, j) += 1.0;
            lap(j, i) -= 1.0;
            rhs(j) += d;
        }
    }
    // gauge: pin the first member of every component
    for (int c = 0;; ++c) {
        int pin = -1;
        for (int i = 0; i < m; ++i)
            if (comp[i] == c) {
                pin = i;
                break;
            }
        if (pin < 0) break;
        lap.row(pin).setZero();
        lap(pin, pin) = 1.0;
        rhs(pin) = 0.0;
    }
    const Eigen::VectorXd x = lap.fullPivLu().solve(rhs);

    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (r(i, j) > 0.0) p(i, j) = r(i, j) * std::exp(x(i));  // ~ p_ij up to one global factor
        }
    // exact zeros stay zero; average the two estimates of each entry
    Eigen::MatrixXd sym = 0.5 * (p + p.transpose());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (p(i, j) == 0.0 && p(j, i) == 0.0) sym(i, j) = 0.0;

    const double top = sym.maxCoeff();
    if (top > 0.0) sym /= top;
    out.matrix_estimate = sym;
    out.queries_used = oracle.queries() - before;
    return out;
}

Intervention sbm_intervention_from_estimate(const Eigen::MatrixXd& block_probs, const std::vector<int>& group_sizes,
                                            double budget) {
    if (block_probs.rows() != block_probs.cols() ||
        block_probs.rows() != static_cast<Eigen::Index>(group_sizes.size()))
        throw std::invalid_argument("sbm_intervention_from_estimate: size mismatch");
    if (block_probs.cwiseAbs().maxCoeff() == 0.0)
        throw std::invalid_argument("sbm_intervention_from_estimate: zero block matrix");
    std::vector<int> labels;
    for (std::size_t g = 0; g < group_sizes.size(); ++g)
        labels.insert(labels.end(), group_sizes[g], static_cast<int>(g));
    const Eigen::MatrixXd tiled = tile_block_matrix(block_probs, labels);
    return proportional_intervention(first_eigenvector(tiled).eigenvector, budget, Strategy::sbm_reconstructed);
}

}  // namespace netgame
