#ifndef INDPOLY_ENGINE_HPP
#define INDPOLY_ENGINE_HPP

#include <stdexcept>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// 2^30 subsets is the desk-scale ceiling for the brute-force oracle.
inline constexpr int kBruteForceGuard = 30;

// Oracle: enumerates all 2^n vertex subsets by bitmask and counts the
// independent ones by size. Intentionally naive; everything faster is
// checked against it.
IntPolynomial brute_force_polynomial(const Graph& g, int guard = kBruteForceGuard);

// Exact independence polynomial via the vertex-deletion recursion
// P(G) = P(G - v) + x P(G - N[v]), with connected components split off and
// multiplied, the pivot chosen as a maximum-degree vertex of the current
// component (lowest index on ties), and results memoized by the bitset of
// surviving original vertices. The memo table lives and dies with each
// call.
IntPolynomial independence_polynomial(const Graph& g);

// Degree of the independence polynomial.
int independence_number(const Graph& g);

// Size of a maximum independent set by direct branching search; must agree
// with independence_number.
int max_independent_set_size(const Graph& g);

// P_G(-1) by the same recursion specialized to integer values; no
// polynomial allocation.
BigInt eval_minus_one(const Graph& g);

struct InvariantReport {
    IntPolynomial poly;
    int alpha = 0;
    BigInt value_at_minus_one;
    int multiplicity = 0;
    HData h;
    bool pseudo_gorenstein_star = false;
    bool symmetric = false;
};

InvariantReport report(const Graph& g);

// Visits every independent set of g exactly once (including the empty
// set), in no particular order.
template <typename F>
void for_each_independent_set(const Graph& g, F&& fn) {
    struct Walker {
        const Graph& g;
        F& fn;
        void walk(VertexSet current, VertexSet allowed) {
            fn(static_cast<const VertexSet&>(current));
            while (!allowed.empty()) {
                int v = allowed.lowest();
                allowed.reset(v);
                walk(current.with(v), allowed - g.neighbors(v));
            }
        }
    };
    Walker w{g, fn};
    w.walk(VertexSet{}, g.vertex_set());
}

}  // namespace indpoly

#endif
