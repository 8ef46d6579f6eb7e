#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

/// Explicit edge-probability matrix.
struct IndependentEdgesSpec {
    Eigen::MatrixXd probabilities;
};

/// Graph with given expected degrees w (Chung-Lu): edge (i,j) included with
/// probability w_i * w_j / sum(w). Requires w positive, sorted descending and
/// w_1 <= sqrt(sum(w)) so that every probability is in [0,1].
struct GWSpec {
    Eigen::VectorXd weights;
};

struct GNPSpec {
    int n = 0;
    double p = 0.0;
};

/// Power-law expected degrees w_i = c * (i + i0)^(-1/(sigma-1)), i = 1..n.
/// Pair probabilities w_i w_j / sum(w) saturate at 1 when the sequence is
/// steep enough to exceed it.
struct PowerLawSpec {
    int n = 0;
    double sigma = 0.0;
    double c = 0.0;
    double i0 = 0.0;
};

/// Stochastic block model: m groups of given sizes, edge probability between
/// a group-i and a group-j vertex is P(i,j).
struct SBMSpec {
    std::vector<int> group_sizes;
    Eigen::MatrixXd group_probabilities;

    /// 0-based group label per vertex, groups laid out contiguously.
    std::vector<int> labels() const;
};

class GraphModel {
  public:
    using Spec = std::variant<IndependentEdgesSpec, GWSpec, GNPSpec, PowerLawSpec, SBMSpec>;

    /// Validates the family invariants; throws std::invalid_argument with the
    /// failing condition.
    GraphModel(Spec spec, bool allow_self_loops = false);

    bool allows_self_loops() const { return allow_self_loops_; }
    const Spec& spec() const { return spec_; }
    int size() const;
    std::string family_name() const;

  private:
    Spec spec_;
    bool allow_self_loops_;
};

/// Edge-probability matrix of the model; diagonal zeroed when self-loops are
/// disabled. SBM tiles the group matrix over the block layout.
ExpectedMatrix expected_matrix(const GraphModel& model);

/// w_i = c * (i + i0)^(-1/(sigma-1)) for i = 1..n. Requires sigma > 2, c > 0,
/// i0 >= 0. The result may violate w_1 <= sqrt(sum(w)) for steep sequences:
/// the GW constructor rejects such vectors, while the power-law model family
/// saturates the affected pair probabilities at 1.
Eigen::VectorXd power_law_weights(int n, double sigma, double c, double i0);

struct PowerLawFit {
    double c = 0.0;
    double i0 = 0.0;
};

/// Solves c*(1+i0)^(-1/(sigma-1)) = d_max and c*(n+i0)^(-1/(sigma-1)) = d_min
/// for real i0 >= 0 by bisection, then c. Throws std::domain_error when the
/// required i0 would be negative (d_max/d_min ratio too steep for n).
PowerLawFit power_law_from_degrees(int n, double sigma, double d_max, double d_min);

/// Samples a realized graph: one independent Bernoulli draw per unordered
/// vertex pair (plus the diagonal when self-loops are allowed), consumed in
/// row-major upper-triangular order from a single seeded stream. Identical
/// (model, seed) pairs produce identical graphs on every platform.
Graph sample(const GraphModel& model, std::uint64_t seed);

}  // namespace netgame
