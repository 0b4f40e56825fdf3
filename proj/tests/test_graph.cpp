#include <random>
#include <stdexcept>

#include "doctest.h"
#include "indpoly/graph.hpp"
#include "indpoly/vertex_set.hpp"

using namespace indpoly;

namespace {

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

// Reference long-form graph6 encoder, written against the published format
// independently of the production decoder.
std::string reference_long_form(const Graph& g) {
    int n = g.n();
    std::string s;
    s.push_back(static_cast<char>(126));
    s.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    s.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    s.push_back(static_cast<char>(63 + (n & 63)));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) s.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return s;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s;
    CHECK(s.empty());
    CHECK(s.lowest() == -1);
    s.set(3).set(17).set(60);
    CHECK(s.count() == 3);
    CHECK(s.test(17));
    CHECK_FALSE(s.test(16));
    CHECK(s.lowest() == 3);
    CHECK(s.highest() == 60);
    CHECK(s.to_vector() == std::vector<int>{3, 17, 60});

    VertexSet full = VertexSet::full(8);
    CHECK(full.count() == 8);
    CHECK((full - s).count() == 7);
    CHECK((full & s).count() == 1);
    CHECK((full | s).count() == 10);
    CHECK(full.contains(VertexSet::single(7)));
    CHECK_FALSE(full.contains(VertexSet::single(8)));
}

TEST_CASE("vertex set spills past 64 bits and stays normalized") {
    VertexSet s;
    s.set(5).set(64).set(130);
    CHECK(s.count() == 3);
    CHECK(s.highest() == 130);
    CHECK(s.to_vector() == std::vector<int>{5, 64, 130});

    // Clearing high bits must restore equality with a single-word set.
    s.reset(130);
    s.reset(64);
    CHECK(s == VertexSet::single(5));
    CHECK(s.hash() == VertexSet::single(5).hash());

    VertexSet big = VertexSet::full(130);
    CHECK(big.count() == 130);
    CHECK((big - VertexSet::full(64)).count() == 66);
    CHECK(big.contains(VertexSet::single(129)));

    VertexSet a = VertexSet::single(100);
    VertexSet b = VertexSet::single(101);
    CHECK((a & b).empty());
    CHECK((a ^ a).empty());
    CHECK((a | b).count() == 2);
}

TEST_CASE("from_edge_list validates and dedups") {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);

    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(-1, {}), std::invalid_argument);
}

TEST_CASE("graph constructor rejects asymmetry") {
    std::vector<VertexSet> adj(2);
    adj[0].set(1);
    CHECK_THROWS_AS(Graph(2, adj), std::invalid_argument);
}

TEST_CASE("complement") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(complement(k3).edge_count() == 0);

    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    Graph cp3 = complement(p3);
    CHECK(cp3.edge_count() == 1);
    CHECK(cp3.has_edge(0, 2));
    CHECK(cp3.degree(1) == 0);

    Graph empty5 = Graph::from_edge_list(5, {});
    CHECK(complement(empty5).edge_count() == 10);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 70), 50, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    VertexSet keep;
    keep.set(0).set(1).set(2);
    CHECK(induced(p4, keep) == p3);
    CHECK(induced(p4, p4.vertex_set()) == p4);

    Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    VertexSet two;
    two.set(1).set(3);
    CHECK(induced(k4, two) == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(induced(k4, VertexSet{}).n() == 0);
}

TEST_CASE("closed neighborhood") {
    Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    VertexSet w = VertexSet::single(1);
    VertexSet expected;
    expected.set(0).set(1).set(2);
    CHECK(closed_neighborhood(p4, w) == expected);
    CHECK(closed_neighborhood(p4, VertexSet{}).empty());

    Graph k4 = complement(Graph::from_edge_list(4, {}));
    CHECK(closed_neighborhood(k4, VertexSet::single(2)) == k4.vertex_set());
}

TEST_CASE("components") {
    Graph g = Graph::from_edge_list(3, {{0, 1}});
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    VertexSet first;
    first.set(0).set(1);
    CHECK(comps[0] == first);
    CHECK(comps[1] == VertexSet::single(2));

    CHECK(components(Graph::from_edge_list(3, {})).size() == 3);
    CHECK(components(Graph::from_edge_list(0, {})).empty());

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph h = random_graph(1 + static_cast<int>(rng() % 12), 25, rng);
        auto blocks = components(h);
        VertexSet all;
        int total = 0;
        for (const auto& b : blocks) {
            CHECK((all & b).empty());
            all = all | b;
            total += b.count();
        }
        CHECK(all == h.vertex_set());
        CHECK(total == h.n());
    }
}

TEST_CASE("is_tree") {
    CHECK(is_tree(Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
    CHECK_FALSE(is_tree(Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(is_tree(Graph::from_edge_list(1, {})));
    CHECK_FALSE(is_tree(Graph::from_edge_list(2, {})));
    CHECK_FALSE(is_tree(Graph::from_edge_list(0, {})));
}

TEST_CASE("edge list text round trip") {
    Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(parse_edge_list_text(to_edge_list_text(p4)) == p4);
    CHECK(parse_edge_list_text("# comment\n3\n\n0 1\n# more\n1 2\n") ==
          Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
    CHECK(parse_edge_list_text("0\n").n() == 0);

    CHECK_THROWS(parse_edge_list_text(""));
    CHECK_THROWS(parse_edge_list_text("2\n0\n"));
    CHECK_THROWS(parse_edge_list_text("2\n0 1 9\n"));
    CHECK_THROWS(parse_edge_list_text("x\n"));
    CHECK_THROWS(parse_edge_list_text("2\n0 2\n"));
}

TEST_CASE("graph6 known strings") {
    CHECK(parse_graph6("?").n() == 0);
    CHECK(parse_graph6("@") == Graph::from_edge_list(1, {}));
    CHECK(parse_graph6("A_") == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(parse_graph6("A?") == Graph::from_edge_list(2, {}));
    CHECK(encode_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");
    CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
    CHECK(encode_graph6(Graph::from_edge_list(0, {})) == "?");
    CHECK(parse_graph6(">>graph6<<A_\n") == Graph::from_edge_list(2, {{0, 1}}));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        int n = static_cast<int>(rng() % 63);
        Graph g = random_graph(n, 10 + static_cast<int>(rng() % 80), rng);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long form ingestion") {
    std::mt19937_64 rng(29);
    for (int n : {63, 64, 100}) {
        Graph g = random_graph(n, 20, rng);
        CHECK(parse_graph6(reference_long_form(g)) == g);
    }
    CHECK_THROWS_AS(encode_graph6(random_graph(63, 10, rng)), std::invalid_argument);
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS(parse_graph6(""));
    CHECK_THROWS(parse_graph6("B"));        // truncated payload
    CHECK_THROWS(parse_graph6("A_?"));      // trailing characters
    CHECK_THROWS(parse_graph6("A "));       // character below offset
    CHECK_THROWS(parse_graph6("Ao"));       // nonzero padding bits
    CHECK_THROWS(parse_graph6("~~????"));   // >= 2^18 vertices
    CHECK_THROWS(parse_graph6("~??"));      // truncated long-form header
    CHECK_THROWS(parse_graph6("~??@"));     // long form used for n < 63
}

TEST_CASE("disjoint union") {
    Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    Graph k1 = Graph::from_edge_list(1, {});
    Graph u = disjoint_union(k2, k1);
    CHECK(u.n() == 3);
    CHECK(u.edge_count() == 1);
    CHECK(u.has_edge(0, 1));
    CHECK(u.degree(2) == 0);
    // Same structure as the complement of the path 0-1-2 up to relabeling.
    Graph cp3 = complement(Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
    CHECK(components(u).size() == components(cp3).size());
    CHECK(u.edge_count() == cp3.edge_count());
}
