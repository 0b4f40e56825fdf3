#ifndef INDPOLY_FAMILIES_HPP
#define INDPOLY_FAMILIES_HPP

#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// q >= 3 paths of arms[i] >= 1 vertices each, glued at one shared center.
struct BigStarParams {
    std::vector<int> arms;
};

// Base graph plus leaf_counts[i] pendant vertices attached to base vertex i.
struct WhiskerSpec {
    Graph base;
    std::vector<int> leaf_counts;
};

// Central path of `spine` >= 1 vertices with leaf_counts[i] legs on vertex i.
struct CaterpillarSpec {
    int spine = 0;
    std::vector<int> leaf_counts;
};

// Cliques on a and n-a vertices with t bridge edges out of one
// distinguished vertex of the first clique; n >= 3, 1 <= a <= n/2,
// 1 <= t <= n-a.
struct TwoCliqueParams {
    int n = 0;
    int a = 0;
    int t = 0;
};

// Cliques K_{r_i+1} sharing one identified vertex; all r_i >= 1.
struct BouquetParams {
    std::vector<int> radii;
};

void validate(const BigStarParams& p);
void validate(const WhiskerSpec& spec);
void validate(const CaterpillarSpec& spec);
void validate(const TwoCliqueParams& p);
void validate(const BouquetParams& p);

// P_0 is the empty graph.
Graph path(int n);
Graph complete(int n);
// Complete graph with the edge {0,1} removed.
Graph complete_minus_edge(int n);

// Vertex 0 is the center; arm i occupies the next arms[i] indices in path
// order starting from the vertex adjacent to the center.
Graph big_star(const BigStarParams& p);

// Base vertices keep their indices; leaves are appended grouped by base
// vertex in ascending order.
Graph whisker(const WhiskerSpec& spec);

// whisker(path(spine), leaf_counts): spine vertices 0..spine-1 first.
Graph caterpillar(const CaterpillarSpec& spec);

// First clique on 0..a-1 (distinguished vertex 0), second on a..n-1;
// bridges {0, a+j} for 0 <= j < t.
Graph two_clique(const TwoCliqueParams& p);

// Vertex 0 is the common vertex; clique i occupies the next radii[i]
// indices.
Graph clique_bouquet(const BouquetParams& p);

// (d-2) isolated vertices followed by a complete graph on m+2 vertices
// with one edge removed; its independence polynomial is
// (1+x)^d + m x (1+x)^(d-2). Requires d >= 2, m >= 0.
Graph cochordal_symmetric_witness(int d, int m);

// Clique bouquet on n >= 3 vertices whose |P(-1)| is at least
// 4^floor((n-1)/5) - 1. The radius multiset depends on (n-1) mod 5.
BouquetParams exponential_witness_params(int n);
Graph exponential_witness(int n);

}  // namespace indpoly

#endif
