#include <random>
#include <stdexcept>

#include "doctest.h"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/verify.hpp"

using namespace indpoly;

namespace {

IntPolynomial poly(std::vector<BigInt> c) { return IntPolynomial(std::move(c)); }

// All labeled trees on n vertices via every Prüfer sequence.
template <typename F>
void for_each_labeled_tree(int n, F&& fn) {
    if (n <= 2) {
        fn(path(n));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int v : seq) ++degree[static_cast<std::size_t>(v)];
        std::vector<std::pair<int, int>> edges;
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int v : seq) {
            for (int leaf = 0; leaf < n; ++leaf) {
                if (!used[static_cast<std::size_t>(leaf)] && degree[static_cast<std::size_t>(leaf)] == 1) {
                    edges.emplace_back(leaf, v);
                    used[static_cast<std::size_t>(leaf)] = true;
                    --degree[static_cast<std::size_t>(v)];
                    break;
                }
            }
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v) {
            if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
        }
        edges.emplace_back(rest[0], rest[1]);
        fn(Graph::from_edge_list(n, edges));

        std::size_t pos = 0;
        while (pos < seq.size() && seq[pos] == n - 1) seq[pos++] = 0;
        if (pos == seq.size()) break;
        ++seq[pos];
    }
}

}  // namespace

TEST_CASE("brute force on small graphs") {
    CHECK(brute_force_polynomial(complete(3)) == poly({1, 3}));
    CHECK(brute_force_polynomial(path(4)) == poly({1, 4, 3}));
    CHECK(brute_force_polynomial(path(0)) == IntPolynomial::one());
    CHECK(brute_force_polynomial(Graph::from_edge_list(4, {})) == poly({1, 4, 6, 4, 1}));
}

TEST_CASE("brute force guard") {
    Graph g = Graph::from_edge_list(11, {});
    CHECK_THROWS_AS(brute_force_polynomial(g, 10), std::invalid_argument);
    CHECK(brute_force_polynomial(g, 11).degree() == 11);
}

TEST_CASE("engine matches oracle on every labeled tree up to 7 vertices") {
    for (int n = 0; n <= 7; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            CHECK(independence_polynomial(t) == brute_force_polynomial(t));
        });
    }
}

TEST_CASE("engine matches oracle on random graphs") {
    std::mt19937_64 rng(41);
    const int densities[] = {10, 25, 50, 75, 90};
    for (int trial = 0; trial < 250; ++trial) {
        int n = static_cast<int>(rng() % 13);
        Graph g = verify::random_gnp(n, densities[trial % 5], rng);
        CHECK(independence_polynomial(g) == brute_force_polynomial(g));
    }
}

TEST_CASE("frozen polynomials") {
    CHECK(independence_polynomial(big_star({{1, 1, 5}})) == poly({1, 8, 21, 21, 8, 1}));
    CHECK(independence_polynomial(big_star({{1, 1, 1, 3, 3, 5}})) ==
          poly({1, 15, 91, 296, 577, 714, 575, 296, 91, 15, 1}));
    CHECK(independence_polynomial(complete_minus_edge(3)) == poly({1, 3, 1}));
    CHECK(independence_polynomial(path(5)) == poly({1, 5, 6, 1}));
}

TEST_CASE("value at -1") {
    CHECK(eval_minus_one(path(6)) == 1);
    CHECK(eval_minus_one(complete(3)) == -2);
    CHECK(eval_minus_one(path(0)) == 1);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = verify::random_gnp(static_cast<int>(rng() % 12), 40, rng);
        CHECK(eval_minus_one(g) == independence_polynomial(g).eval(-1));
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(complete(6)) == 1);
    CHECK(independence_number(path(5)) == 3);
    CHECK(independence_number(big_star({{2, 2, 2}})) == 4);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = verify::random_gnp(static_cast<int>(rng() % 14), 35, rng);
        CHECK(max_independent_set_size(g) == independence_number(g));
    }
}

TEST_CASE("invariant report") {
    InvariantReport k2 = report(complete(2));
    CHECK(k2.alpha == 1);
    CHECK(k2.value_at_minus_one == -1);
    CHECK(k2.pseudo_gorenstein_star);
    CHECK_FALSE(k2.symmetric);
    CHECK(k2.multiplicity == 0);
    CHECK(k2.h.a_invariant == 0);

    InvariantReport p4 = report(path(4));
    CHECK(p4.multiplicity == 1);
    CHECK(p4.h.a_invariant == -1);
    CHECK_FALSE(p4.pseudo_gorenstein_star);

    InvariantReport star = report(big_star({{1, 1, 5}}));
    CHECK(star.symmetric);
    CHECK(star.value_at_minus_one == 0);
    CHECK(star.h.a_invariant == -star.multiplicity);

    InvariantReport nothing = report(path(0));
    CHECK(nothing.alpha == 0);
    CHECK(nothing.value_at_minus_one == 1);
    CHECK(nothing.pseudo_gorenstein_star);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        InvariantReport r = report(verify::random_gnp(static_cast<int>(rng() % 11), 50, rng));
        CHECK(r.alpha == r.poly.degree());
        CHECK(r.value_at_minus_one == r.poly.eval(-1));
        CHECK(r.h.a_invariant == -r.multiplicity);
    }
}

TEST_CASE("deletion recursion identity") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = verify::random_gnp(n, 40, rng);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        Graph minus_v = induced(g, g.vertex_set().without(v));
        Graph minus_nv = induced(g, g.vertex_set() - closed_neighborhood(g, VertexSet::single(v)));
        CHECK(independence_polynomial(g) ==
              independence_polynomial(minus_v) + independence_polynomial(minus_nv).times_x());
    }
}

TEST_CASE("disjoint union multiplicativity") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Graph a = verify::random_gnp(1 + static_cast<int>(rng() % 7), 45, rng);
        Graph b = verify::random_gnp(1 + static_cast<int>(rng() % 7), 45, rng);
        CHECK(independence_polynomial(disjoint_union(a, b)) ==
              independence_polynomial(a) * independence_polynomial(b));
    }
}

TEST_CASE("independent set enumeration agrees with the oracle") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = verify::random_gnp(static_cast<int>(rng() % 10), 40, rng);
        std::vector<BigInt> counts(static_cast<std::size_t>(g.n()) + 1);
        for_each_independent_set(g, [&](const VertexSet& s) { ++counts[static_cast<std::size_t>(s.count())]; });
        CHECK(IntPolynomial(std::move(counts)) == brute_force_polynomial(g));
    }
}
