#ifndef INDPOLY_CHORDAL_HPP
#define INDPOLY_CHORDAL_HPP

#include <optional>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

// All maximal cliques via pivoted Bron-Kerbosch, sorted by least element,
// then size, then lexicographically. Guard: n <= 30.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Maximum cardinality search followed by the perfect-elimination check:
// the earlier-visited neighbors of every vertex must form a clique.
bool is_chordal(const Graph& g);

bool is_cochordal(const Graph& g);

struct LeafOrder {
    std::vector<VertexSet> facets;
    // Permutation of facet indices; for every prefix, the last facet is a
    // leaf of the subcomplex the prefix generates.
    std::vector<int> order;
};

// Greedy reverse construction: repeatedly removes a facet that is a leaf
// of the remaining facet set (lowest index on ties). Succeeds exactly on
// quasi-forests; leaves of quasi-forests persist under facet deletion, so
// the greedy choice loses nothing. Facets must be pairwise incomparable.
std::optional<LeafOrder> leaf_order(std::vector<VertexSet> facets);

// b-sequence of the independence polynomial of a cochordal graph with
// alpha >= 1; every entry is strictly positive (violations throw).
std::vector<BigInt> b_sequence_of_cochordal(const Graph& g);

// Number of connected components of the complement. For cochordal G this
// equals 1 - P_G(-1).
int complement_component_count(const Graph& g);

// Minimum vertex cut size by brute force over subsets; 0 for disconnected
// input, n-1 for complete graphs by convention. Guard: n <= 16.
int vertex_connectivity(const Graph& g);

// Minimum number of vertices whose deletion leaves a forest, by
// increasing-size subset search. Guard: n <= 16.
int decycling_number(const Graph& g);

}  // namespace indpoly

#endif
