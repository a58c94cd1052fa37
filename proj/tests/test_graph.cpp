#include <sstream>

#include "doctest.h"
#include "majvote/graph.hpp"

using namespace majvote;

TEST_CASE("build_graph families") {
    CHECK(build_graph(GraphFamily::Empty, 3).edge_count() == 0);

    const Graph ring = build_graph(GraphFamily::ChainPBC, 5);
    const std::vector<Edge> expected{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(ring.edges() == expected);

    CHECK(build_graph(GraphFamily::Complete, 4).edge_count() == 6);
    CHECK(build_graph(GraphFamily::Complete, 4).edges().size() == 6);
}

TEST_CASE("edge counts match closed forms") {
    for (int n = 3; n <= 30; ++n) {
        CHECK(build_graph(GraphFamily::Empty, n).edge_count() == 0);
        CHECK(build_graph(GraphFamily::Chain, n).edge_count() == static_cast<std::size_t>(n - 1));
        CHECK(build_graph(GraphFamily::ChainPBC, n).edge_count() == static_cast<std::size_t>(n));
        const Graph complete = build_graph(GraphFamily::Complete, n);
        CHECK(complete.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(complete.edges().size() == complete.edge_count());
    }
}

TEST_CASE("chain families form a path and a single cycle") {
    for (int n : {3, 4, 9}) {
        const Graph path = build_graph(GraphFamily::Chain, n);
        const Graph cycle = build_graph(GraphFamily::ChainPBC, n);
        int ends = 0;
        for (const auto& nb : path.adjacency()) {
            CHECK(nb.size() <= 2);
            ends += nb.size() == 1;
        }
        CHECK(ends == 2);
        for (const auto& nb : cycle.adjacency()) CHECK(nb.size() == 2);
    }
}

TEST_CASE("complete graph equals all pairs as an edge list") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(j, i);  // reversed on purpose
        const Graph custom = from_edge_list(n, pairs);
        CHECK(custom.family() == GraphFamily::Custom);
        CHECK(custom.same_edges(build_graph(GraphFamily::Complete, n)));
    }
}

TEST_CASE("n=3 ring coincides with the complete graph but keeps its tag") {
    const Graph ring = build_graph(GraphFamily::ChainPBC, 3);
    CHECK(ring.family() == GraphFamily::ChainPBC);
    CHECK(ring.same_edges(build_graph(GraphFamily::Complete, 3)));
}

TEST_CASE("build_graph rejects bad sizes") {
    CHECK_THROWS_AS(build_graph(GraphFamily::Empty, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(GraphFamily::Chain, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(GraphFamily::ChainPBC, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(GraphFamily::Custom, 4), std::invalid_argument);
}

TEST_CASE("from_edge_list") {
    CHECK(from_edge_list(3, {{0, 1}}).edge_count() == 1);
    CHECK(from_edge_list(3, {{0, 1}, {1, 0}}).edge_count() == 1);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), std::out_of_range);
    CHECK_THROWS_AS(from_edge_list(2, {{-1, 1}}), std::out_of_range);
}

TEST_CASE("graph text format") {
    std::istringstream in(
        "# a five-cycle\n"
        "5\n"
        "0 1\n"
        "1 2  # inline comment\n"
        "\n"
        "2 3\n3 4\n4 0\n");
    const Graph g = read_graph(in);
    CHECK(g.n() == 5);
    CHECK(g.family() == GraphFamily::Custom);
    CHECK(g.same_edges(build_graph(GraphFamily::ChainPBC, 5)));

    std::istringstream bad("3\n0 1 2\n");
    CHECK_THROWS_AS(read_graph(bad), std::invalid_argument);
    std::istringstream loop("3\n1 1\n");
    CHECK_THROWS_AS(read_graph(loop), std::invalid_argument);
    std::istringstream nothing("# only comments\n");
    CHECK_THROWS_AS(read_graph(nothing), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
    for (auto f : {GraphFamily::Empty, GraphFamily::Chain, GraphFamily::ChainPBC, GraphFamily::Complete,
                   GraphFamily::Custom})
        CHECK(parse_graph_family(to_string(f)) == f);
    CHECK_THROWS(parse_graph_family("star"));
}
