#include <doctest.h>

#include <queue>

#include "netgame/graph.hpp"
#include "netgame/rng.hpp"
#include "test_util.hpp"

using namespace netgame;

TEST_CASE("degree vector basics") {
    Graph empty(3);
    CHECK(degree_vector(empty) == std::vector<int>{0, 0, 0});

    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.set_edge(i, j);
    CHECK(degree_vector(k4) == std::vector<int>{3, 3, 3, 3});

    Graph path(3);
    path.set_edge(0, 1);
    path.set_edge(1, 2);
    CHECK(degree_vector(path) == std::vector<int>{1, 2, 1});
}

TEST_CASE("self-loop counts once toward degree") {
    Graph g(2, true);
    g.set_edge(0, 0);
    g.set_edge(0, 1);
    CHECK(degree_vector(g) == std::vector<int>{2, 1});
    CHECK(g.edge_count() == 2);

    Graph no_loops(2);
    CHECK_THROWS_AS(no_loops.set_edge(1, 1), std::invalid_argument);
}

TEST_CASE("degree sum identity") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g(12, true);
        long long loops = 0;
        for (int i = 0; i < 12; ++i) {
            for (int j = i; j < 12; ++j) {
                if (rng.bernoulli(0.3)) {
                    g.set_edge(i, j);
                    if (i == j) ++loops;
                }
            }
        }
        long long total = 0;
        for (int d : degree_vector(g)) total += d;
        CHECK(total == 2 * (g.edge_count() - loops) + loops);
    }
}

TEST_CASE("expected degree vector") {
    CHECK(expected_degree_vector(ExpectedMatrix(Eigen::MatrixXd::Zero(4, 4))).isZero());

    // rank-one w w^T / sum(w) rows sum back to w
    Eigen::VectorXd w(3);
    w << 2, 1, 1;
    ExpectedMatrix gw(w * w.transpose() / w.sum());
    CHECK((expected_degree_vector(gw) - w).cwiseAbs().maxCoeff() <= 1e-12);

    Eigen::MatrixXd uniform = Eigen::MatrixXd::Constant(10, 10, 0.1);
    uniform.diagonal().setZero();
    const Eigen::VectorXd deg = expected_degree_vector(ExpectedMatrix(uniform));
    for (int i = 0; i < 10; ++i) CHECK(deg[i] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(max_expected_degree(ExpectedMatrix(uniform)) == doctest::Approx(0.9));
}

TEST_CASE("probability matrix validation") {
    CHECK(validate_probability_matrix(Eigen::MatrixXd::Identity(3, 3)).ok());

    Eigen::MatrixXd range = Eigen::MatrixXd::Zero(2, 2);
    range(0, 1) = 1.5;
    range(1, 0) = 1.5;
    auto report = validate_probability_matrix(range);
    CHECK(report.kind == MatrixViolation::out_of_range);
    CHECK(report.row == 0);
    CHECK(report.col == 1);

    Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
    asym(0, 1) = 0.2;
    asym(1, 0) = 0.3;
    CHECK(validate_probability_matrix(asym, 1e-9).kind == MatrixViolation::asymmetry);
    CHECK(validate_probability_matrix(asym, 0.5).ok());

    Eigen::MatrixXd nan = Eigen::MatrixXd::Zero(2, 2);
    nan(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK(validate_probability_matrix(nan).kind == MatrixViolation::not_finite);

    CHECK(validate_probability_matrix(Eigen::MatrixXd::Zero(2, 3)).kind == MatrixViolation::not_square);
    CHECK_THROWS_AS(ExpectedMatrix{range}, std::invalid_argument);
}

namespace {

bool reachable_set_matches(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) return true;
    std::vector<bool> seen(g.size(), false);
    std::queue<int> frontier;
    frontier.push(vertices.front());
    seen[vertices.front()] = true;
    int found = 0;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        ++found;
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                frontier.push(u);
            }
        }
    }
    if (found != static_cast<int>(vertices.size())) return false;
    for (int v : vertices)
        if (!seen[v]) return false;
    return true;
}

}  // namespace

TEST_CASE("largest connected component") {
    Graph triangle(3);
    triangle.set_edge(0, 1);
    triangle.set_edge(1, 2);
    triangle.set_edge(0, 2);
    CHECK(largest_connected_component(triangle).vertices == std::vector<int>{0, 1, 2});

    Graph with_isolated(4);
    with_isolated.set_edge(0, 1);
    with_isolated.set_edge(1, 2);
    with_isolated.set_edge(0, 2);
    CHECK(largest_connected_component(with_isolated).vertices == std::vector<int>{0, 1, 2});

    // two components of equal size: smallest contained index wins
    Graph pairs(4);
    pairs.set_edge(2, 3);
    pairs.set_edge(0, 1);
    const auto result = largest_connected_component(pairs);
    CHECK(result.vertices == std::vector<int>{0, 1});
    CHECK(result.subgraph.size() == 2);
    CHECK(result.subgraph.edge(0, 1));

    CHECK(largest_connected_component(Graph(0)).vertices.empty());
}

TEST_CASE("largest component is mutually reachable, checked by independent BFS") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = netgame::testing::random_graph(15, 0.12, rng);
        const auto result = largest_connected_component(g);
        CHECK(reachable_set_matches(g, result.vertices));
        // induced subgraph preserves adjacency under the index mapping
        for (std::size_t a = 0; a < result.vertices.size(); ++a)
            for (std::size_t b = 0; b < result.vertices.size(); ++b)
                CHECK(result.subgraph.edge(static_cast<int>(a), static_cast<int>(b)) ==
                      g.edge(result.vertices[a], result.vertices[b]));
    }
}
