#include "netgame/girvan_newman.hpp"

#include <algorithm>
#include <queue>
#include <stack>
#include <stdexcept>

#include "netgame/estimation.hpp"

namespace netgame {

std::map<std::pair<int, int>, double> edge_betweenness(const Graph& g) {
    const int n = g.size();
    std::map<std::pair<int, int>, double> score;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) score[{i, j}] = 0.0;

    std::vector<double> sigma(n);
    std::vector<int> dist(n);
    std::vector<double> delta(n);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            order.push_back(v);
            for (int w : g.neighbors(v)) {
                if (w == v) continue;  // self-loops carry no shortest paths
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    frontier.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (int v : preds[w]) {
                const double share = sigma[v] / sigma[w] * (1.0 + delta[w]);
                score[{std::min(v, w), std::max(v, w)}] += share;
                delta[v] += share;
            }
        }
    }
    // each unordered pair was counted from both endpoints
    for (auto& [edge, value] : score) value *= 0.5;
    return score;
}

namespace {

int big_cluster_count(const std::vector<int>& labels, int count, int min_size) {
    std::vector<int> sizes(count, 0);
    for (int l : labels) ++sizes[l];
    int big = 0;
    for (int s : sizes)
        if (s >= min_size) ++big;
    return big;
}

}  // namespace

std::vector<int> girvan_newman_groups(const Graph& g, const GirvanNewmanOptions& options) {
    if (g.size() == 0) return {};
    Graph work = g;

    while (true) {
        const auto [labels, count] = connected_components(work);
        if (count >= options.max_clusters ||
            big_cluster_count(labels, count, options.min_cluster_size) >= options.min_big_clusters)
            return labels;

        const auto scores = edge_betweenness(work);
        if (scores.empty()) return labels;  // no edges left, every vertex isolated

        std::pair<int, int> target = scores.begin()->first;
        double best = scores.begin()->second;
        for (const auto& [edge, value] : scores) {
            if (value > best + 1e-9) {
                best = value;
                target = edge;
            }
            // ties keep the lexicographically smallest pair (map order)
        }
        work.set_edge(target.first, target.second, false);
    }
}

ExpectedMatrix fit_sbm_from_groups(const Graph& g, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != g.size())
        throw std::invalid_argument("fit_sbm_from_groups: label vector length mismatch");
    return ExpectedMatrix(empirical_block_matrix(g, labels));
}

}  // namespace netgame
