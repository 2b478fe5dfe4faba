#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "cutcomplex/graph.hpp"

using namespace cutcomplex;

TEST_CASE("complete graphs") {
    Graph g = complete(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(g.has_edge(u, v) == (u != v));
    CHECK(complete(1).edge_count() == 0);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("paths and cycles") {
    Graph p = path(4);
    CHECK(p.edge_count() == 3);
    CHECK(p.has_edge(0, 1));
    CHECK(p.has_edge(2, 3));
    CHECK_FALSE(p.has_edge(0, 3));
    CHECK_FALSE(p.has_edge(0, 2));

    Graph c = cycle(4);
    CHECK(c.edge_count() == 4);
    CHECK(c.has_edge(0, 3));
    CHECK_FALSE(c.has_edge(0, 2));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("cycle powers") {
    Graph g = cycle_power(8, 3);
    CHECK(g.vertex_count() == 8);
    // vertex 0 is adjacent to everything within circular distance 3
    CHECK(g.neighbors(0) == VertexSet{1, 2, 3, 5, 6, 7});
    CHECK(g.edge_count() == 8 * 3);

    // n <= 2p+1 collapses to the complete graph
    CHECK(cycle_power(7, 3) == complete(7));
    CHECK(cycle_power(7, 5) == complete(7));

    // p = 1 is the plain cycle
    CHECK(cycle_power(6, 1) == cycle(6));

    CHECK_THROWS_AS(cycle_power(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(cycle_power(5, 0), std::invalid_argument);
}

TEST_CASE("circulants") {
    CHECK(circulant(8, {1, 2, 3}) == cycle_power(8, 3));
    CHECK(circulant(8, {3, 1, 2}) == cycle_power(8, 3));  // order irrelevant
    CHECK(circulant(6, {1}) == cycle(6));

    // single antipodal shift: perfect matching
    Graph m = circulant(6, {3});
    CHECK(m.edge_count() == 3);
    CHECK(m.has_edge(0, 3));
    CHECK(m.has_edge(1, 4));
    CHECK_FALSE(m.has_edge(0, 1));

    CHECK_THROWS_AS(circulant(6, {}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(6, {0}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(6, {6}), std::invalid_argument);
}

TEST_CASE("cartesian products use the flat row-major encoding") {
    // K3 x P2: vertex (i, j) = 2*i + j
    Graph g = cartesian_product(complete(3), path(2));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 3 * 1 + 2 * 3);  // m*E(P) + n*E(K)
    CHECK(g.has_edge(0, 1));                 // (0,0)-(0,1): path edge
    CHECK(g.has_edge(0, 2));                 // (0,0)-(1,0): complete edge
    CHECK(g.has_edge(0, 4));                 // (0,0)-(2,0)
    CHECK_FALSE(g.has_edge(0, 3));           // (0,0)-(1,1): differs in both
    CHECK_FALSE(g.has_edge(1, 4));           // (0,1)-(2,0)

    // K2 x P2 is a 4-cycle
    CHECK(cartesian_product(complete(2), path(2)).edge_count() == 4);

    // K2 x C4 is the cube graph: 3-regular on 8 vertices
    Graph q = cartesian_product(complete(2), cycle(4));
    CHECK(q.vertex_count() == 8);
    CHECK(q.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(q.neighbors(v).count() == 3);
}

TEST_CASE("induced-subgraph predicates") {
    Graph p = path(4);
    CHECK(is_complete_on(p, VertexSet{}));
    CHECK(is_complete_on(p, VertexSet{2}));
    CHECK(is_complete_on(p, VertexSet{1, 2}));
    CHECK_FALSE(is_complete_on(p, VertexSet{0, 2}));
    CHECK_FALSE(is_complete_on(p, VertexSet{0, 1, 2}));
    CHECK(is_complete_on(complete(5), VertexSet{0, 2, 4}));

    CHECK(is_connected_on(p, VertexSet{}));
    CHECK(is_connected_on(p, VertexSet{3}));
    CHECK(is_connected_on(p, VertexSet{0, 1, 2}));
    CHECK_FALSE(is_connected_on(p, VertexSet{0, 2}));
    CHECK_FALSE(is_connected_on(p, VertexSet{0, 1, 3}));
    CHECK(is_connected_on(cycle(5), VertexSet{0, 1, 4}));
}

TEST_CASE("edge-list round trip") {
    Graph g = cartesian_product(complete(3), cycle(4));
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge-list parse errors carry line numbers") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_with("", "missing");
    fails_with("abc\n", "line 1");
    fails_with("3 1\n0 0\n", "line 2");              // loop
    fails_with("3 2\n0 1\n0 1\n", "line 3");         // duplicate
    fails_with("3 1\n0 5\n", "line 2");              // out of range
    fails_with("3 2\n0 1\n", "declared 2");          // too few edges
    fails_with("3 1\n0 1\n2 1\n", "line 3");         // more than declared
    fails_with("3 1\n0 x\n", "line 2");              // malformed token
    fails_with("3 1 7\n0 1\n", "line 1");            // trailing header token
}

TEST_CASE("edge-list file round trip") {
    Graph g = cycle_power(9, 2);
    std::string path = "test_graph_roundtrip.edges";
    {
        std::ofstream out(path);
        write_edge_list(out, g);
    }
    CHECK(read_edge_list_file(path) == g);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_edge_list_file("no_such_file.edges"),
                    std::runtime_error);
}
