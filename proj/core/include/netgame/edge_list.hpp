#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

enum class Indexing { zero_based, one_based };

struct EdgeListResult {
    Graph graph;
    std::vector<long long> original_labels;  ///< original label of internal vertex i
};

/// Parses "u v" lines (whitespace or comma separated), ignoring blank lines
/// and '#' comments. Labels are remapped to contiguous 0-based vertices in
/// first-appearance order; duplicate edges collapse; the graph is
/// symmetrized. Self-loop lines are rejected unless allow_self_loops is set.
/// Throws DataError naming the offending line on malformed input or an empty
/// file.
EdgeListResult load_edge_list(const std::string& path, Indexing indexing = Indexing::zero_based,
                              bool allow_self_loops = false);
EdgeListResult load_edge_list_stream(std::istream& in, const std::string& name, Indexing indexing,
                                     bool allow_self_loops);

/// Writes one "u v" line per edge (i <= j, row-major order).
void save_edge_list(const Graph& g, const std::string& path, Indexing indexing = Indexing::zero_based);

}  // namespace netgame
