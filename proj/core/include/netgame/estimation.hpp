#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/interventions.hpp"
#include "netgame/rng.hpp"

namespace netgame {

/// Answers "is there an edge between u and v?" against a hidden graph,
/// counting every query. Stateful: use one oracle per worker.
class EdgeOracle {
  public:
    explicit EdgeOracle(const Graph& g) : g_(&g) {}

    bool query(int u, int v) {
        ++queries_;
        return g_->edge(u, v);
    }
    std::uint64_t queries() const { return queries_; }
    int size() const { return g_->size(); }

  private:
    const Graph* g_;
    std::uint64_t queries_ = 0;
};

/// Answers "give me a uniformly random neighbor of v" against a hidden graph.
/// A vertex with no neighbors yields the distinct no-neighbor answer (-1).
class NeighborOracle {
  public:
    NeighborOracle(const Graph& g, std::uint64_t seed);

    /// Uniform neighbor of v, or -1 when v is isolated. Counts one query.
    int query(int v);
    std::uint64_t queries() const { return queries_; }
    int size() const { return g_->size(); }

  private:
    const Graph* g_;
    Rng rng_;
    std::uint64_t queries_ = 0;
    std::vector<std::vector<int>> neighbors_;
};

struct EstimationResult {
    Eigen::VectorXd vector_estimate;  ///< degree or stationary estimates
    Eigen::MatrixXd matrix_estimate;  ///< block probability estimates
    std::uint64_t queries_used = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::string method;
    std::vector<std::string> notes;
};

/// Per-vertex degree estimation from edge queries: each vertex flips
/// k = ceil(ln(2n/delta) / (2 eps^2)) coins against uniformly drawn partners
/// (with replacement) and scales the positive fraction by n - 1. Uses exactly
/// n * k queries; every estimate is within eps (n-1) of the true degree with
/// probability at least 1 - delta.
EstimationResult estimate_degrees_edge_queries(EdgeOracle& oracle, double eps, double delta, std::uint64_t seed);

/// Default walk length between recorded samples: ceil(c_mix * ln(n / eps)).
int mixing_steps_default(int n, double eps, double c_mix = 10.0);

/// Stationary-distribution estimate from a neighbor-query random walk:
/// record the position after every mixing_steps queries, n_samples times.
/// The estimate converges to degree / total degree on the start vertex's
/// component. Throws std::domain_error when the start vertex is isolated.
EstimationResult random_walk_sampler(NeighborOracle& oracle, int start_vertex, int n_samples, int mixing_steps);

struct BlockEstimate {
    Eigen::MatrixXd probabilities;        ///< m x m edge frequencies
    std::vector<std::string> flags;       ///< undefined blocks, scale ambiguity
};

/// Per-group-pair empirical edge frequencies of a realized graph: edges
/// between the groups over admissible pairs (s_i s_j across groups,
/// s_i (s_i - 1)/2 within a group when self-loops are absent). A size-1 group
/// without self-loops has an undefined within-group frequency: entry 0 plus a
/// flag.
BlockEstimate block_probabilities(const Graph& g, const std::vector<int>& labels);
BlockEstimate block_probabilities(const Eigen::MatrixXd& adjacency, const std::vector<int>& labels,
                                  bool self_loops_allowed);

/// The n x n block-constant matrix tiling per-pair frequencies over the
/// group layout, diagonal zeroed.
Eigen::MatrixXd tile_block_matrix(const Eigen::MatrixXd& block_probs, const std::vector<int>& labels);

/// block_probabilities tiled to n x n (the graph-reconstruction target).
Eigen::MatrixXd empirical_block_matrix(const Graph& g, const std::vector<int>& labels);

/// Block-probability estimation from edge queries: for each group pair,
/// k = ceil(ln(2 m^2 / delta) / (2 eps^2)) queries on freshly drawn uniform
/// vertex pairs (distinct vertices within a group). Each entry is within eps
/// of the graph's empirical block frequency with probability >= 1 - delta.
EstimationResult estimate_sbm_edge_queries(EdgeOracle& oracle, const std::vector<int>& labels, double eps,
                                           double delta, std::uint64_t seed);

/// Block-probability estimation from neighbor queries, up to global scale:
/// per-group neighbor frequencies are de-biased by group size, and the row
/// scales are recovered from the symmetry constraints
/// log r_ij - log r_ji = log c_j - log c_i by least squares over the graph of
/// nonzero entries (per-component gauge; multiple components are flagged).
/// Output is normalized to maximum entry 1; zero observed frequencies stay 0.
EstimationResult estimate_sbm_neighbor_queries(NeighborOracle& oracle, const std::vector<int>& labels,
                                               int samples_per_group, std::uint64_t seed);

/// Tiles an estimated block matrix to n x n, takes its dominant eigenvector
/// and spends the budget proportionally. Invariant under global rescaling of
/// the estimate.
Intervention sbm_intervention_from_estimate(const Eigen::MatrixXd& block_probs, const std::vector<int>& group_sizes,
                                            double budget);

}  // namespace netgame
