#include "netgame/graph.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace netgame {

Graph::Graph(int n, bool allow_self_loops)
    : n_(n), allow_self_loops_(allow_self_loops), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("Graph: vertex count must be nonnegative");
}

void Graph::set_edge(int i, int j, bool present) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("Graph::set_edge: vertex out of range");
    if (i == j && present && !allow_self_loops_)
        throw std::invalid_argument("Graph::set_edge: self-loops are disabled for this graph");
    adj_[static_cast<std::size_t>(i) * n_ + j] = present ? 1 : 0;
    adj_[static_cast<std::size_t>(j) * n_ + i] = present ? 1 : 0;
}

long long Graph::edge_count() const {
    long long count = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (edge(i, j)) ++count;
    return count;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (edge(i, j)) a(i, j) = 1.0;
    return a;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (edge(v, j)) out.push_back(j);
    return out;
}

std::vector<int> degree_vector(const Graph& g) {
    const int n = g.size();
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) ++d;
        deg[i] = d;  // self-loop counts once: it appears once in row i
    }
    return deg;
}

ExpectedMatrix::ExpectedMatrix(Eigen::MatrixXd entries, double symmetry_tol) : entries_(std::move(entries)) {
    const ValidationReport report = validate_probability_matrix(entries_, symmetry_tol);
    if (!report.ok()) throw std::invalid_argument("ExpectedMatrix: " + report.describe());
}

Eigen::VectorXd expected_degree_vector(const ExpectedMatrix& m) {
    return m.entries().rowwise().sum();
}

double max_expected_degree(const ExpectedMatrix& m) {
    if (m.size() == 0) return 0.0;
    return expected_degree_vector(m).maxCoeff();
}

std::string ValidationReport::describe() const {
    switch (kind) {
        case MatrixViolation::none:
            return "ok";
        case MatrixViolation::not_square:
            return "matrix is not square";
        case MatrixViolation::asymmetry:
            return "asymmetric at (" + std::to_string(row) + "," + std::to_string(col) + ")";
        case MatrixViolation::out_of_range:
            return "entry " + std::to_string(value) + " outside [0,1] at (" + std::to_string(row) + "," +
                   std::to_string(col) + ")";
        case MatrixViolation::not_finite:
            return "non-finite entry at (" + std::to_string(row) + "," + std::to_string(col) + ")";
    }
    return "unknown";
}

ValidationReport validate_probability_matrix(const Eigen::MatrixXd& m, double symmetry_tol) {
    ValidationReport report;
    if (m.rows() != m.cols()) {
        report.kind = MatrixViolation::not_square;
        return report;
    }
    const int n = static_cast<int>(m.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (!std::isfinite(v)) {
                report.kind = MatrixViolation::not_finite;
                report.row = i;
                report.col = j;
                report.value = v;
                return report;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > symmetry_tol) {
                report.kind = MatrixViolation::asymmetry;
                report.row = i;
                report.col = j;
                report.value = m(i, j) - m(j, i);
                return report;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v < 0.0 || v > 1.0) {
                report.kind = MatrixViolation::out_of_range;
                report.row = i;
                report.col = j;
                report.value = v;
                return report;
            }
        }
    }
    return report;
}

std::pair<std::vector<int>, int> connected_components(const Graph& g) {
    const int n = g.size();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (int u : g.neighbors(v)) {
                if (label[u] < 0) {
                    label[u] = next;
                    frontier.push(u);
                }
            }
        }
        ++next;
    }
    return {label, next};
}

ComponentResult largest_connected_component(const Graph& g) {
    ComponentResult result;
    result.subgraph = Graph(0, g.allows_self_loops());
    const auto [label, count] = connected_components(g);
    if (count == 0) return result;

    std::vector<int> size(count, 0);
    std::vector<int> first_vertex(count, g.size());
    for (int v = 0; v < g.size(); ++v) {
        ++size[label[v]];
        if (v < first_vertex[label[v]]) first_vertex[label[v]] = v;
    }
    int best = 0;
    for (int c = 1; c < count; ++c) {
        if (size[c] > size[best] || (size[c] == size[best] && first_vertex[c] < first_vertex[best])) best = c;
    }
    for (int v = 0; v < g.size(); ++v)
        if (label[v] == best) result.vertices.push_back(v);

    const int m = static_cast<int>(result.vertices.size());
    std::vector<int> to_local(g.size(), -1);
    for (int k = 0; k < m; ++k) to_local[result.vertices[k]] = k;
    result.subgraph = Graph(m, g.allows_self_loops());
    for (int k = 0; k < m; ++k) {
        const int v = result.vertices[k];
        for (int u : g.neighbors(v))
            if (to_local[u] >= 0 && to_local[u] >= k) result.subgraph.set_edge(k, to_local[u]);
    }
    return result;
}

}  // namespace netgame
