#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace netgame {

/// Undirected realized graph on n vertices with a dense symmetric 0/1
/// adjacency structure. Vertex labels are 0-based contiguous integers.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n, bool allow_self_loops = false);

    int size() const { return n_; }
    bool allows_self_loops() const { return allow_self_loops_; }

    bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }

    /// Sets or clears the undirected edge {i, j}. Self-loops require the flag.
    void set_edge(int i, int j, bool present = true);

    /// Number of distinct edges; a self-loop counts as one edge.
    long long edge_count() const;

    /// Adjacency as a dense real matrix (entries 0.0 / 1.0).
    Eigen::MatrixXd adjacency_matrix() const;

    std::vector<int> neighbors(int v) const;

  private:
    int n_ = 0;
    bool allow_self_loops_ = false;
    std::vector<std::uint8_t> adj_;
};

/// Per-vertex edge counts; a self-loop contributes 1 to its endpoint.
std::vector<int> degree_vector(const Graph& g);

/// Symmetric matrix of edge-inclusion probabilities in [0,1].
class ExpectedMatrix {
  public:
    ExpectedMatrix() = default;

    /// Validates symmetry (within symmetry_tol) and entry range; throws
    /// std::invalid_argument describing the first violation.
    explicit ExpectedMatrix(Eigen::MatrixXd entries, double symmetry_tol = 1e-9);

    int size() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const { return entries_; }
    double operator()(int i, int j) const { return entries_(i, j); }

  private:
    Eigen::MatrixXd entries_;
};

/// Row sums of an expected matrix: per-vertex expected degrees.
Eigen::VectorXd expected_degree_vector(const ExpectedMatrix& m);

/// Largest expected degree max_i sum_j entries(i, j).
double max_expected_degree(const ExpectedMatrix& m);

enum class MatrixViolation { none, not_square, asymmetry, out_of_range, not_finite };

struct ValidationReport {
    MatrixViolation kind = MatrixViolation::none;
    int row = -1;
    int col = -1;
    double value = 0.0;

    bool ok() const { return kind == MatrixViolation::none; }
    std::string describe() const;
};

/// Checks a candidate probability matrix: square, finite entries, symmetric
/// within symmetry_tol, all entries in [0,1]. Reports the first violating
/// index pair; never throws.
ValidationReport validate_probability_matrix(const Eigen::MatrixXd& m, double symmetry_tol = 1e-9);

struct ComponentResult {
    std::vector<int> vertices;  ///< original labels, ascending
    Graph subgraph;             ///< induced subgraph; index k maps to vertices[k]
};

/// Maximum-cardinality connected component; ties broken by the smallest
/// contained vertex index. Empty graph yields an empty vertex set.
ComponentResult largest_connected_component(const Graph& g);

/// Component label for every vertex, labels assigned in discovery order
/// (BFS from vertex 0 upward). Second member is the component count.
std::pair<std::vector<int>, int> connected_components(const Graph& g);

}  // namespace netgame
