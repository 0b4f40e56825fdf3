#ifndef INDPOLY_GRAPH_HPP
#define INDPOLY_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "indpoly/vertex_set.hpp"

namespace indpoly {

// Finite simple graph on vertices 0..n-1 with one neighborhood bitset per
// vertex. Instances are immutable after construction and safe to share
// between threads. Display labels are optional; vertex indices are the
// identity used everywhere else.
class Graph {
public:
    Graph() = default;

    // Validates: symmetric adjacency, no self-loops, all bits < n.
    Graph(int n, std::vector<VertexSet> adj, std::vector<std::string> labels = {});

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> labels = {});

    int n() const { return n_; }
    const VertexSet& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    long long edge_count() const;
    VertexSet vertex_set() const { return VertexSet::full(n_); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Structural equality on the labeled vertex set; display labels are
    // ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

Graph complement(const Graph& g);

// Induced subgraph on `keep`, relabeled in ascending original index.
Graph induced(const Graph& g, const VertexSet& keep);

// N[W] = W together with every neighbor of W.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& w);

// Connected components as a partition of the vertex set, ordered by least
// vertex.
std::vector<VertexSet> components(const Graph& g);

// Components of the subgraph induced on `sub`, without relabeling.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub);

bool is_tree(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// Edge-list text format: first line `n`, then one `u v` pair per line;
// blank lines and lines starting with `#` are ignored.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);

// graph6 codec. Decoding accepts the short form (n < 63) and the long
// form (63 <= n < 2^18); encoding emits the short form only.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

}  // namespace indpoly

#endif
