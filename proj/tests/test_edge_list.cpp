#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "netgame/edge_list.hpp"
#include "netgame/errors.hpp"
#include "test_util.hpp"

using namespace netgame;

namespace {

EdgeListResult parse(const std::string& text, Indexing indexing = Indexing::zero_based, bool loops = false) {
    std::istringstream in(text);
    return load_edge_list_stream(in, "test", indexing, loops);
}

}  // namespace

TEST_CASE("edge list parsing") {
    const EdgeListResult path = parse("0 1\n1 2\n");
    CHECK(degree_vector(path.graph) == std::vector<int>{1, 2, 1});

    // duplicates collapse; comments and blanks are skipped; commas allowed
    const EdgeListResult dup = parse("# comment\n0 1\n\n0,1\n1\t2\n");
    CHECK(dup.graph.edge_count() == 2);

    CHECK_THROWS_AS(parse("a b\n"), DataError);
    CHECK_THROWS_AS(parse("0 1 2\n"), DataError);
    CHECK_THROWS_AS(parse(""), DataError);
    CHECK_THROWS_AS(parse("0 0\n"), DataError);
    CHECK_NOTHROW(parse("0 0\n", Indexing::zero_based, true));
    CHECK_THROWS_AS(parse("0 1\n", Indexing::one_based), DataError);  // labels drop below zero

    // arbitrary labels remap to contiguous ids, preserving the originals
    const EdgeListResult relabeled = parse("10 30\n30 7\n");
    CHECK(relabeled.graph.size() == 3);
    CHECK(relabeled.original_labels == std::vector<long long>{10, 30, 7});

    const EdgeListResult one_based = parse("1 2\n2 3\n", Indexing::one_based);
    CHECK(degree_vector(one_based.graph) == std::vector<int>{1, 2, 1});
}

TEST_CASE("edge list round trip") {
    Rng rng(101);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = netgame::testing::random_graph(14, 0.3, rng);
        if (g.edge_count() == 0) g.set_edge(0, 1);
        const std::string path = "roundtrip_test_graph.txt";
        save_edge_list(g, path);
        const EdgeListResult loaded = load_edge_list(path);
        std::remove(path.c_str());

        // vertices with edges come back under their own labels
        REQUIRE(loaded.graph.size() <= g.size());
        std::vector<int> back(g.size(), -1);
        for (int k = 0; k < loaded.graph.size(); ++k) back[loaded.original_labels[k]] = k;
        for (int i = 0; i < g.size(); ++i) {
            for (int j = 0; j < g.size(); ++j) {
                const bool expected = g.edge(i, j);
                const bool actual =
                    back[i] >= 0 && back[j] >= 0 && loaded.graph.edge(back[i], back[j]);
                CHECK(expected == actual);
            }
        }
    }
}
