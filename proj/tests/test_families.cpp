#include <stdexcept>

#include "doctest.h"
#include "indpoly/chordal.hpp"
#include "indpoly/closed_forms.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"

using namespace indpoly;

namespace {

IntPolynomial poly(std::vector<BigInt> c) { return IntPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("paths and cliques") {
    CHECK(path(0).n() == 0);
    CHECK(independence_polynomial(path(0)) == IntPolynomial::one());
    CHECK(path(1).n() == 1);
    CHECK(path(4) == Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete_minus_edge(4).edge_count() == 5);
    CHECK_FALSE(complete_minus_edge(4).has_edge(0, 1));
    // K_3 minus an edge is a path on three vertices.
    CHECK(independence_polynomial(complete_minus_edge(3)) == independence_polynomial(path(3)));
    CHECK(independence_polynomial(complete_minus_edge(2)) == poly({1, 2, 1}));

    CHECK_THROWS_AS(path(-1), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_minus_edge(1), std::invalid_argument);
}

TEST_CASE("big star construction") {
    Graph star = big_star({{1, 1, 1}});
    CHECK(star.n() == 4);
    CHECK(star.degree(0) == 3);
    CHECK(independence_polynomial(star) == poly({1, 4, 3, 1}));
    CHECK(star.labels()[0] == "x");

    Graph g115 = big_star({{1, 1, 5}});
    CHECK(g115.n() == 8);
    CHECK(independence_polynomial(g115) == poly({1, 8, 21, 21, 8, 1}));
    CHECK(is_tree(g115));

    CHECK(independence_number(big_star({{2, 2, 2}})) == 4);

    CHECK_THROWS_AS(big_star({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(big_star({{1, 0, 1}}), std::invalid_argument);
}

TEST_CASE("whisker construction") {
    Graph k2 = complete(2);
    Graph w = whisker({k2, {2, 2}});
    CHECK(w.n() == 6);
    CHECK(independence_polynomial(w) == poly({1, 6, 10, 6, 1}));

    Graph unchanged = whisker({k2, {0, 0}});
    CHECK(unchanged == k2);

    CHECK(whisker({complete(1), {1}}) == complete(2));
    CHECK(whisker({path(3), {0, 1, 0}}).n() == 4);

    CHECK_THROWS_AS(whisker({k2, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(whisker({k2, {1, -1}}), std::invalid_argument);
}

TEST_CASE("caterpillar construction") {
    Graph k13 = caterpillar({3, {0, 1, 0}});
    CHECK(k13 == Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(independence_polynomial(k13) == poly({1, 4, 3, 1}));
    Graph p4 = caterpillar({2, {1, 1}});
    CHECK(independence_polynomial(p4) == independence_polynomial(path(4)));
    CHECK(caterpillar({5, {0, 0, 0, 0, 0}}) == path(5));

    CHECK_THROWS_AS(caterpillar({0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(caterpillar({2, {1}}), std::invalid_argument);
}

TEST_CASE("two clique construction") {
    Graph g = two_clique({5, 2, 1});
    CHECK(g.n() == 5);
    CHECK(independence_polynomial(g) == poly({1, 5, 5}));
    CHECK(is_chordal(g));
    CHECK(components(g).size() == 1);
    CHECK(eval_minus_one(two_clique({3, 1, 1})) == -1);
    CHECK(independence_number(two_clique({4, 2, 2})) <= 2);

    CHECK_THROWS_AS(two_clique({2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(two_clique({5, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(two_clique({5, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(two_clique({5, 2, 0}), std::invalid_argument);
}

TEST_CASE("clique bouquet construction") {
    Graph k3 = clique_bouquet({{2}});
    CHECK(k3.n() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(eval_minus_one(k3) == -2);

    Graph h55 = clique_bouquet({{5, 5}});
    CHECK(h55.n() == 11);
    CHECK(eval_minus_one(h55) == 15);
    CHECK(is_chordal(h55));

    CHECK(clique_bouquet({{1, 1, 1}}) == big_star({{1, 1, 1}}));

    CHECK_THROWS_AS(clique_bouquet({{}}), std::invalid_argument);
    CHECK_THROWS_AS(clique_bouquet({{2, 0}}), std::invalid_argument);
}

TEST_CASE("cochordal symmetric witness") {
    CHECK(cochordal_symmetric_witness(2, 0) == Graph::from_edge_list(2, {}));
    CHECK(independence_polynomial(cochordal_symmetric_witness(2, 0)) == poly({1, 2, 1}));
    CHECK(independence_polynomial(cochordal_symmetric_witness(2, 1)) == poly({1, 3, 1}));
    CHECK(independence_polynomial(cochordal_symmetric_witness(3, 2)) == poly({1, 5, 5, 1}));
    CHECK(is_cochordal(cochordal_symmetric_witness(3, 1)));
    CHECK(is_cochordal(cochordal_symmetric_witness(5, 4)));

    // (1+x)^d + m x (1+x)^(d-2), expanded independently; each witness is
    // cochordal with a symmetric unimodal polynomial of the stated shape.
    for (int d = 2; d <= 6; ++d) {
        for (int m = 0; m <= 5; ++m) {
            Graph w36 = cochordal_symmetric_witness(d, m);
            IntPolynomial p36 = independence_polynomial(w36);
            IntPolynomial expected =
                IntPolynomial::one_plus_x_power(d) +
                (IntPolynomial::constant(m) * IntPolynomial::one_plus_x_power(d - 2)).times_x();
            CHECK(p36 == expected);
            CHECK(is_cochordal(w36));
            CHECK(is_symmetric(p36));
            CHECK(cochordal_symmetric_form(p36) == BigInt(m));
            CHECK(is_unimodal(p36));
        }
    }

    CHECK_THROWS_AS(cochordal_symmetric_witness(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cochordal_symmetric_witness(3, -1), std::invalid_argument);
}

TEST_CASE("exponential witness case table") {
    CHECK(exponential_witness_params(6).radii == std::vector<int>{5});
    CHECK(exponential_witness_params(7).radii == std::vector<int>{3, 3});
    CHECK(exponential_witness_params(11).radii == std::vector<int>{5, 5});
    CHECK(exponential_witness_params(12).radii == std::vector<int>{5, 3, 3});
    CHECK(exponential_witness_params(3).radii == std::vector<int>{2});
    CHECK(exponential_witness_params(4).radii == std::vector<int>{3});
    CHECK(exponential_witness_params(5).radii == std::vector<int>{4});
    CHECK(exponential_witness_params(8).radii == std::vector<int>{5, 2});

    for (int n = 3; n <= 30; ++n) {
        CHECK(exponential_witness(n).n() == n);
    }
    CHECK(eval_minus_one(exponential_witness(6)) == -5);
    CHECK(eval_minus_one(exponential_witness(11)) == 15);

    CHECK_THROWS_AS(exponential_witness(2), std::invalid_argument);
}

TEST_CASE("family vertex counts") {
    CHECK(big_star({{3, 4, 5, 6}}).n() == 1 + 18);
    CHECK(whisker({path(4), {1, 2, 0, 3}}).n() == 4 + 6);
    CHECK(clique_bouquet({{2, 3, 4}}).n() == 1 + 9);
    CHECK(two_clique({9, 4, 3}).n() == 9);
    CHECK(cochordal_symmetric_witness(6, 3).n() == 4 + 5);
}
