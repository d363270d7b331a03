#include <doctest.h>

#include <random>

#include "cliquepoly/errors.hpp"
#include "cliquepoly/graph.hpp"
#include "cliquepoly/search.hpp"

using namespace cliquepoly;

namespace {

const Graph kTriangle = Graph::complete(3);

Graph two_k2() { return Graph::from_edges(4, {Edge{0, 1}, Edge{2, 3}}); }

} // namespace

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("n 3\n0 1\n0 2\n1 2") == kTriangle);
    CHECK(parse_edge_list("# comment\nn 3   # trailing\n\n0 1\n0 2 # x\n1 2\n") == kTriangle);

    Graph single = parse_edge_list("n 1");
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);

    Graph g = parse_edge_list("n 4\n0 1\n2 3");
    CHECK(g == two_k2());
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("edge list errors name the line") {
    auto line_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("n 3\n0 1\n0 x") == 3);
    CHECK(line_of("n 3\n0 3") == 2);
    CHECK(line_of("n 3\n1 1") == 2);
    CHECK(line_of("n 3\n0 1\n\n0 1") == 4);
    CHECK(line_of("0 1") == 1);
    CHECK(line_of("n 3\n0 1 2") == 2);
    CHECK(line_of("n 65") == 1);
    CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
}

TEST_CASE("graph6 known encodings") {
    CHECK(encode_graph6(kTriangle) == "Bw");
    CHECK(parse_graph6("Bw") == kTriangle);
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(Graph::complete(4)) == "C~");
    CHECK(parse_graph6("Bw\n") == kTriangle);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // missing body
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B "), ParseError);     // byte below 63
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);     // padding bit set
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);    // multi-byte size field
    CHECK_THROWS_AS(encode_graph6(Graph(63)), ScaleError);
}

TEST_CASE("graph6 round trip over every labeled graph up to n = 5") {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask : enumerate_edge_masks(n)) {
            const Graph g = graph_from_edge_mask(n, mask);
            REQUIRE(parse_graph6(encode_graph6(g)) == g);
        }
}

TEST_CASE("graph6 round trip on random graphs with 6 <= n <= 8 and at n = 62") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + trial % 3;
        const Graph g = sample_gnp(n, 0.2 + 0.3 * (trial % 3), rng);
        REQUIRE(parse_graph6(encode_graph6(g)) == g);
    }
    const Graph big = sample_gnp(62, 0.5, rng);
    CHECK(parse_graph6(encode_graph6(big)) == big);
}

TEST_CASE("delete_edges") {
    Graph reduced = delete_edges(kTriangle, {Edge{0, 1}, Edge{0, 2}});
    CHECK(reduced.order() == 3);
    CHECK(reduced.edges() == EdgeSet{Edge{1, 2}});
    CHECK(delete_edges(kTriangle, {}) == kTriangle);
    CHECK(delete_edges(kTriangle, kTriangle.edges()) == Graph(3));
    CHECK_THROWS_AS(delete_edges(two_k2(), {Edge{0, 2}}), DomainError);
}

TEST_CASE("support_vertices") {
    CHECK(support_vertices({Edge{0, 1}, Edge{0, 2}}) == VertexSet{0, 1, 2});
    CHECK(support_vertices({}).empty());
    CHECK(support_vertices({Edge{0, 1}, Edge{2, 3}}) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("common_neighborhood") {
    auto ab = common_neighborhood(kTriangle, VertexSet{0, 1});
    CHECK(ab.graph == Graph(1));
    CHECK(ab.labels == std::vector<int>{2});

    auto abc = common_neighborhood(kTriangle, VertexSet{0, 1, 2});
    CHECK(abc.graph.order() == 0);

    auto k4 = common_neighborhood(Graph::complete(4), VertexSet{0, 1});
    CHECK(k4.graph == Graph::complete(2));
    CHECK(k4.labels == std::vector<int>{2, 3});

    // Empty anchor: the whole graph.
    CHECK(common_neighborhood(two_k2(), VertexSet{}).graph == two_k2());
    CHECK_THROWS_AS(common_neighborhood(kTriangle, VertexSet{5}), DomainError);
}

TEST_CASE("edge_induced_is_complete") {
    CHECK(edge_induced_is_complete({Edge{0, 1}}));
    CHECK_FALSE(edge_induced_is_complete({Edge{0, 1}, Edge{0, 2}}));
    CHECK(edge_induced_is_complete({Edge{0, 1}, Edge{0, 2}, Edge{1, 2}}));
    CHECK_FALSE(edge_induced_is_complete({Edge{0, 1}, Edge{2, 3}}));
    CHECK_FALSE(edge_induced_is_complete({Edge{0, 1}, Edge{0, 2}, Edge{0, 3}}));
    CHECK_FALSE(edge_induced_is_complete({}));
    CHECK(edge_induced_is_complete(Graph::complete(6).edges()));
}

TEST_CASE("vertex_induced_is_clique") {
    CHECK(vertex_induced_is_clique(kTriangle, VertexSet{0, 1, 2}));
    CHECK_FALSE(vertex_induced_is_clique(two_k2(), VertexSet{0, 1, 2, 3}));
    CHECK(vertex_induced_is_clique(two_k2(), VertexSet{}));
    CHECK(vertex_induced_is_clique(two_k2(), VertexSet{3}));
}

TEST_CASE("graph invariants hold over all labeled graphs with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask : enumerate_edge_masks(n)) {
            const Graph g = graph_from_edge_mask(n, mask);
            for (int i = 0; i < n; ++i) {
                REQUIRE_FALSE(g.adjacent(i, i));
                REQUIRE(g.neighbors(i).subset_of(g.vertices()));
                for (int j = 0; j < n; ++j) REQUIRE(g.adjacent(i, j) == g.adjacent(j, i));
            }

            // M sampled from the edge set: deletion keeps order, drops exactly |M| edges,
            // and a complete M spans a clique.
            const EdgeSet edges = g.edges();
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << edges.size()); sub += 3) {
                std::vector<Edge> pick;
                for (std::size_t k = 0; k < edges.size(); ++k)
                    if ((sub >> k) & 1U) pick.push_back(edges[k]);
                const EdgeSet m(pick);
                const Graph reduced = delete_edges(g, m);
                REQUIRE(reduced.order() == n);
                REQUIRE(reduced.edge_count() == g.edge_count() - static_cast<int>(m.size()));
                if (edge_induced_is_complete(m)) REQUIRE(vertex_induced_is_clique(g, support_vertices(m)));
            }

            // Shrinking common neighborhoods as the anchor grows.
            for (std::uint64_t w2 = 0; w2 < (std::uint64_t{1} << n); ++w2)
                for (std::uint64_t w1 = w2;; w1 = (w1 - 1) & w2) {
                    REQUIRE(common_neighbors(g, VertexSet(w2)).subset_of(common_neighbors(g, VertexSet(w1))));
                    if (w1 == 0) break;
                }
        }
    }
}

TEST_CASE("EdgeSet parsing and canonical form") {
    EdgeSet s = EdgeSet::parse("1-0, 0-2");
    CHECK(s.to_string() == "0-1,0-2");
    CHECK(EdgeSet::parse("").empty());
    CHECK_THROWS_AS(EdgeSet::parse("0-1,1-0"), ParseError);
    CHECK_THROWS_AS(EdgeSet::parse("0-0"), ParseError);
    CHECK_THROWS_AS(EdgeSet::parse("0-1,"), ParseError);
    CHECK_THROWS_AS(EdgeSet::parse("01"), ParseError);
    CHECK(EdgeSet{Edge{2, 1}, Edge{1, 2}}.size() == 1);
}
