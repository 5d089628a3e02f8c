#include <chroma/generators.hpp>
#include <chroma/graph.hpp>
#include <chroma/io.hpp>
#include <chroma/rng.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace chroma;

TEST_CASE("from_edge_list normalizes, deduplicates, and validates") {
    Graph g = from_edge_list(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(2) == 1);

    CHECK_THROWS_AS(from_edge_list(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("adjacency rows stay sorted") {
    Graph g = from_edge_list(5, {{0, 4}, {0, 2}, {0, 1}, {0, 3}});
    CHECK(g.adj[0] == VertexSet{1, 2, 3, 4});
}

TEST_CASE("without_edge removes exactly one edge") {
    Graph k4 = complete(4);
    Graph g = without_edge(k4, 2, 0);
    CHECK(g.edge_count() == 5);
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 1));
    CHECK_THROWS_AS(without_edge(g, 0, 2), std::invalid_argument);
}

TEST_CASE("induced_subgraph keeps exactly the internal edges") {
    Graph g = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
    InducedSubgraph s = induced_subgraph(g, {4, 1, 2, 4});
    CHECK(s.to_host == VertexSet{1, 2, 4});
    CHECK(s.graph.n == 3);
    CHECK(s.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(s.to_sub[1] == 0);
    CHECK(s.to_sub[4] == 2);
    CHECK(s.to_sub[0] == -1);

    CHECK_THROWS_AS(induced_subgraph(g, {0, 6}), std::invalid_argument);
    CHECK(induced_subgraph(g, {}).graph.n == 0);
}

TEST_CASE("induced_subgraph matches the definition on random graphs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(8, 0.4, rng.next());
        VertexSet members;
        for (int v = 0; v < g.n; ++v)
            if (rng.next_below(2)) members.push_back(v);
        InducedSubgraph s = induced_subgraph(g, members);
        REQUIRE(s.graph.n == static_cast<int>(s.to_host.size()));
        for (int i = 0; i < s.graph.n; ++i)
            for (int j = i + 1; j < s.graph.n; ++j)
                CHECK(s.graph.has_edge(i, j) == g.has_edge(s.to_host[i], s.to_host[j]));
    }
}

TEST_CASE("connected_components orders by smallest member") {
    Graph g = from_edge_list(7, {{5, 6}, {0, 3}, {1, 2}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == VertexSet{0, 3});
    CHECK(comps[1] == VertexSet{1, 2});
    CHECK(comps[2] == VertexSet{4});
    CHECK(comps[3] == VertexSet{5, 6});

    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK(is_connected(cycle(5)));
}

TEST_CASE("adjacency_masks mirror the adjacency lists") {
    Graph g = from_edge_list(4, {{0, 1}, {1, 3}});
    auto m = adjacency_masks(g);
    CHECK(m[0] == 0b0010);
    CHECK(m[1] == 0b1001);
    CHECK(m[2] == 0);
    CHECK(m[3] == 0b0010);
    CHECK_THROWS_AS(adjacency_masks(Graph(65)), std::invalid_argument);
}

TEST_CASE("vertex set helpers") {
    CHECK(set_normalized({3, 1, 3, 2, 1}) == VertexSet{1, 2, 3});
    CHECK(set_contains({1, 4, 9}, 4));
    CHECK_FALSE(set_contains({1, 4, 9}, 5));
}

TEST_CASE("generator shapes") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(1).edge_count() == 0);
    CHECK(path(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(cycle(3) == complete(3));
    CHECK(cycle(5).edge_count() == 5);
    CHECK(empty_graph(3).edge_count() == 0);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(complete(-1), std::invalid_argument);

    Graph j = join(cycle(5), complete(5));
    CHECK(j.n == 10);
    CHECK(j.edge_count() == 5 + 10 + 25);
    for (int a = 0; a < 5; ++a)
        for (int b = 5; b < 10; ++b) CHECK(j.has_edge(a, b));
}

TEST_CASE("petersen graph is cubic with 15 edges and no triangle") {
    Graph p = petersen();
    REQUIRE(p.n == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    for (auto [u, v] : p.edges())
        for (int w = 0; w < 10; ++w)
            if (w != u && w != v) CHECK_FALSE((p.has_edge(u, w) && p.has_edge(v, w)));
}

TEST_CASE("mycielski construction") {
    // K2 lifts to C5
    Graph m1 = mycielski(complete(2));
    CHECK(m1.n == 5);
    CHECK(m1.edge_count() == 5);
    auto comps = connected_components(m1);
    REQUIRE(comps.size() == 1);
    for (int v = 0; v < 5; ++v) CHECK(m1.degree(v) == 2);

    Graph m2 = mycielski_iterate(2);
    CHECK(m2.n == 11);
    CHECK(m2.edge_count() == 20);
    for (auto [u, v] : m2.edges())
        for (int w = 0; w < m2.n; ++w)
            if (w != u && w != v) CHECK_FALSE((m2.has_edge(u, w) && m2.has_edge(v, w)));
}

TEST_CASE("subdivided complete graph is bipartite-like: one mid vertex per edge") {
    Graph s = subdivided_complete(5);
    CHECK(s.n == 5 + 10);
    CHECK(s.edge_count() == 20);
    for (int mid = 5; mid < 15; ++mid) CHECK(s.degree(mid) == 2);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) CHECK_FALSE(s.has_edge(a, b));
}

TEST_CASE("erdos_renyi is seed-deterministic with exact density endpoints") {
    CHECK(erdos_renyi(6, 0.0, 7).edge_count() == 0);
    CHECK(erdos_renyi(6, 1.0, 7) == complete(6));
    CHECK(erdos_renyi(9, 0.5, 123) == erdos_renyi(9, 0.5, 123));
    CHECK(erdos_renyi(9, 0.5, 123) != erdos_renyi(9, 0.5, 124));
    CHECK_THROWS_AS(erdos_renyi(5, -0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("splitmix64 matches the published reference stream") {
    SplitMix64 r(0);
    CHECK(r.next() == 0xE220A8397B1DCDAFull);
    CHECK(r.next() == 0x6E789E6AA1B965F4ull);
    CHECK(r.next() == 0x06C45D188009454Full);

    SplitMix64 d(42);
    double x = d.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);

    CHECK(derive_seed(1, 11) == 0x9AFCD44D14CF8BFEull);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("dimacs round trip") {
    Graph g = petersen();
    ParsedGraph back = parse_dimacs(serialize_dimacs(g));
    CHECK(back.graph == g);
    CHECK(back.duplicate_edges == 0);
    CHECK(back.declared_edges == 15);
}

TEST_CASE("dimacs parsing details") {
    ParsedGraph p = parse_dimacs("c hello\np edge 3 2\ne 1 2\ne 2 3\ne 3 2\n");
    CHECK(p.graph.n == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(p.duplicate_edges == 1);
    CHECK(p.declared_edges == 2);

    CHECK_THROWS_AS(parse_dimacs(""), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("e 1 2\np edge 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\np edge 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p clq 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\nx 1 2\n"), ParseError);

    try {
        parse_dimacs("c ok\np edge 3 1\ne 1 oops\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("edge list round trip and errors") {
    Graph g = from_edge_list(4, {{0, 1}, {2, 3}});
    ParsedGraph back = parse_edge_list(serialize_edge_list(g));
    CHECK(back.graph == g);

    ParsedGraph blank = parse_edge_list("\n  \n3\n\n0 1\n");
    CHECK(blank.graph.n == 3);
    CHECK(blank.graph.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-2\n"), ParseError);
}

TEST_CASE("format sniffing picks dimacs for c/p prefixes") {
    CHECK(parse_graph_auto("p edge 2 1\ne 1 2\n").graph == complete(2));
    CHECK(parse_graph_auto("  \n2\n0 1\n").graph == complete(2));
    CHECK(parse_graph_auto("c x\np edge 2 0\n").graph.n == 2);
}
