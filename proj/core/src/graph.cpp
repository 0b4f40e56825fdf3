#include "indpoly/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace indpoly {

Graph::Graph(int n, std::vector<VertexSet> adj, std::vector<std::string> labels)
    : n_(n), adj_(std::move(adj)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (adj_.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("Graph: adjacency size mismatch");
    }
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("Graph: label count mismatch");
    }
    VertexSet universe = VertexSet::full(n_);
    for (int v = 0; v < n_; ++v) {
        const VertexSet& row = adj_[static_cast<std::size_t>(v)];
        if (!universe.contains(row)) throw std::invalid_argument("Graph: neighbor out of range");
        if (row.test(v)) throw std::invalid_argument("Graph: self-loop");
    }
    for (int v = 0; v < n_; ++v) {
        adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
            if (!adj_[static_cast<std::size_t>(u)].test(v)) {
                throw std::invalid_argument("Graph: adjacency not symmetric");
            }
        });
    }
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("from_edge_list: negative vertex count");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("from_edge_list: endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("from_edge_list: self-loop");
        adj[static_cast<std::size_t>(u)].set(v);
        adj[static_cast<std::size_t>(v)].set(u);
    }
    return Graph(n, std::move(adj), std::move(labels));
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const { return neighbors(u).test(v); }

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph complement(const Graph& g) {
    int n = g.n();
    VertexSet universe = VertexSet::full(n);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)] = (universe - g.neighbors(v)).without(v);
    }
    return Graph(n, std::move(adj), g.labels());
}

Graph induced(const Graph& g, const VertexSet& keep) {
    if (!g.vertex_set().contains(keep)) throw std::invalid_argument("induced: vertex out of range");
    std::vector<int> old_ids = keep.to_vector();
    std::vector<int> rank(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) rank[static_cast<std::size_t>(old_ids[i])] = static_cast<int>(i);

    std::vector<VertexSet> adj(old_ids.size());
    for (std::size_t i = 0; i < old_ids.size(); ++i) {
        (g.neighbors(old_ids[i]) & keep).for_each([&](int u) {
            adj[i].set(rank[static_cast<std::size_t>(u)]);
        });
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.reserve(old_ids.size());
        for (int v : old_ids) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
    }
    return Graph(static_cast<int>(old_ids.size()), std::move(adj), std::move(labels));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
    if (!g.vertex_set().contains(w)) throw std::invalid_argument("closed_neighborhood: vertex out of range");
    VertexSet out = w;
    w.for_each([&](int v) { out = out | g.neighbors(v); });
    return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& sub) {
    std::vector<VertexSet> out;
    VertexSet remaining = sub;
    while (!remaining.empty()) {
        VertexSet comp;
        VertexSet fringe = VertexSet::single(remaining.lowest());
        while (!fringe.empty()) {
            int u = fringe.lowest();
            comp.set(u);
            fringe = (fringe | (g.neighbors(u) & remaining)) - comp;
        }
        out.push_back(comp);
        remaining = remaining - comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertex_set()); }

bool is_tree(const Graph& g) {
    if (g.n() == 0) return false;
    return components(g).size() == 1 && g.edge_count() == g.n() - 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < a.n(); ++v) {
        a.neighbors(v).for_each([&](int u) {
            if (u > v) edges.emplace_back(v, u);
        });
    }
    for (int v = 0; v < b.n(); ++v) {
        b.neighbors(v).for_each([&](int u) {
            if (u > v) edges.emplace_back(a.n() + v, a.n() + u);
        });
    }
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        labels = a.labels();
        labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    }
    return Graph::from_edge_list(a.n() + b.n(), edges, std::move(labels));
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_n = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        if (!have_n) {
            if (!(fields >> n)) throw std::runtime_error("edge list: bad vertex count on line " + std::to_string(line_no));
            std::string extra;
            if (fields >> extra) throw std::runtime_error("edge list: trailing tokens on line " + std::to_string(line_no));
            have_n = true;
            continue;
        }
        int u = 0;
        int v = 0;
        if (!(fields >> u >> v)) throw std::runtime_error("edge list: bad edge on line " + std::to_string(line_no));
        std::string extra;
        if (fields >> extra) throw std::runtime_error("edge list: trailing tokens on line " + std::to_string(line_no));
        edges.emplace_back(u, v);
    }
    if (!have_n) throw std::runtime_error("edge list: missing vertex count");
    return Graph::from_edge_list(n, edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (int v = 0; v < g.n(); ++v) {
        g.neighbors(v).for_each([&](int u) {
            if (u > v) out += std::to_string(v) + " " + std::to_string(u) + "\n";
        });
    }
    return out;
}

}  // namespace indpoly
