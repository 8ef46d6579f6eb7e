#include "netgame/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "netgame/errors.hpp"

namespace netgame {

namespace {

bool parse_label(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

}  // namespace

EdgeListResult load_edge_list_stream(std::istream& in, const std::string& name, Indexing indexing,
                                     bool allow_self_loops) {
    std::vector<std::pair<long long, long long>> edges;
    std::unordered_map<long long, int> remap;
    std::vector<long long> labels;

    const auto intern = [&](long long label) {
        const auto [it, inserted] = remap.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& ch : line)
            if (ch == ',' || ch == '\t') ch = ' ';
        std::istringstream fields(line);
        std::string a;
        if (!(fields >> a)) continue;  // blank
        if (a[0] == '#') continue;
        std::string b;
        std::string extra;
        long long u = 0;
        long long v = 0;
        if (!(fields >> b) || (fields >> extra) || !parse_label(a, u) || !parse_label(b, v))
            throw DataError(name + ":" + std::to_string(line_no) + ": expected two integer labels");
        if (indexing == Indexing::one_based) {
            --u;
            --v;
        }
        if (u < 0 || v < 0)
            throw DataError(name + ":" + std::to_string(line_no) + ": negative vertex label");
        if (u == v && !allow_self_loops)
            throw DataError(name + ":" + std::to_string(line_no) + ": self-loop not permitted");
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw DataError(name + ": no edges found");

    for (const auto& [u, v] : edges) {
        intern(u);
        intern(v);
    }
    EdgeListResult out;
    out.graph = Graph(static_cast<int>(labels.size()), allow_self_loops);
    out.original_labels = labels;
    for (const auto& [u, v] : edges) out.graph.set_edge(remap.at(u), remap.at(v));
    return out;
}

EdgeListResult load_edge_list(const std::string& path, Indexing indexing, bool allow_self_loops) {
    std::ifstream in(path);
    if (!in) throw DataError(path + ": cannot open for reading");
    return load_edge_list_stream(in, path, indexing, allow_self_loops);
}

void save_edge_list(const Graph& g, const std::string& path, Indexing indexing) {
    std::ofstream out(path);
    if (!out) throw DataError(path + ": cannot open for writing");
    const long long offset = indexing == Indexing::one_based ? 1 : 0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i; j < g.size(); ++j)
            if (g.edge(i, j)) out << i + offset << ' ' << j + offset << '\n';
}

}  // namespace netgame
