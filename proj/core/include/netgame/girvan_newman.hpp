#pragma once

#include <map>
#include <utility>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

/// Shortest-path edge betweenness of an unweighted graph (Brandes
/// accumulation over all-source BFS). Each unordered vertex pair contributes
/// once, split equally among its shortest paths; keys are (u, v) with u < v.
std::map<std::pair<int, int>, double> edge_betweenness(const Graph& g);

struct GirvanNewmanOptions {
    int min_big_clusters = 10;  ///< stop once this many clusters have >= min_cluster_size vertices
    int min_cluster_size = 5;
    int max_clusters = 50;      ///< or stop once there are this many clusters in total
};

/// Divisive clustering: repeatedly remove the highest-betweenness edge (ties
/// to the lexicographically smallest endpoint pair) and recompute, until the
/// stop rule holds. Returns per-vertex component labels at the stopping
/// point; an input that already satisfies the rule is returned unchanged.
std::vector<int> girvan_newman_groups(const Graph& g, const GirvanNewmanOptions& options = {});

/// Block edge-frequency matrix of the labelled graph tiled to n x n with the
/// diagonal zeroed: the fitted expected matrix of an SBM with these groups.
ExpectedMatrix fit_sbm_from_groups(const Graph& g, const std::vector<int>& labels);

}  // namespace netgame
