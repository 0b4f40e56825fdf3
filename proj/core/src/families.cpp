#include "indpoly/families.hpp"

#include <stdexcept>
#include <string>

namespace indpoly {

namespace {

std::string arm_label(int arm, int pos) {
    return "x" + std::to_string(pos) + "^(" + std::to_string(arm) + ")";
}

}  // namespace

void validate(const BigStarParams& p) {
    if (p.arms.size() < 3) throw std::invalid_argument("big star: needs at least 3 arms");
    for (int a : p.arms) {
        if (a < 1) throw std::invalid_argument("big star: arm lengths must be positive");
    }
}

void validate(const WhiskerSpec& spec) {
    if (spec.leaf_counts.size() != static_cast<std::size_t>(spec.base.n())) {
        throw std::invalid_argument("whisker: one leaf count per base vertex required");
    }
    for (int f : spec.leaf_counts) {
        if (f < 0) throw std::invalid_argument("whisker: leaf counts must be non-negative");
    }
}

void validate(const CaterpillarSpec& spec) {
    if (spec.spine < 1) throw std::invalid_argument("caterpillar: spine must have at least one vertex");
    if (spec.leaf_counts.size() != static_cast<std::size_t>(spec.spine)) {
        throw std::invalid_argument("caterpillar: one leaf count per spine vertex required");
    }
    for (int f : spec.leaf_counts) {
        if (f < 0) throw std::invalid_argument("caterpillar: leaf counts must be non-negative");
    }
}

void validate(const TwoCliqueParams& p) {
    if (p.n < 3) throw std::invalid_argument("two clique: n must be at least 3");
    if (p.a < 1 || p.a > p.n / 2) throw std::invalid_argument("two clique: a out of range");
    if (p.t < 1 || p.t > p.n - p.a) throw std::invalid_argument("two clique: t out of range");
}

void validate(const BouquetParams& p) {
    if (p.radii.empty()) throw std::invalid_argument("bouquet: needs at least one clique");
    for (int r : p.radii) {
        if (r < 1) throw std::invalid_argument("bouquet: radii must be positive");
    }
}

Graph path(int n) {
    if (n < 0) throw std::invalid_argument("path: negative length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edge_list(n, edges);
}

Graph complete_minus_edge(int n) {
    if (n < 2) throw std::invalid_argument("complete_minus_edge: needs at least two vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (i == 0 && j == 1) continue;
            edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph big_star(const BigStarParams& p) {
    validate(p);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels{"x"};
    int next = 1;
    for (std::size_t i = 0; i < p.arms.size(); ++i) {
        int len = p.arms[i];
        edges.emplace_back(0, next);
        for (int j = 1; j < len; ++j) edges.emplace_back(next + j - 1, next + j);
        for (int j = 0; j < len; ++j) labels.push_back(arm_label(static_cast<int>(i) + 1, j + 1));
        next += len;
    }
    return Graph::from_edge_list(next, edges, std::move(labels));
}

Graph whisker(const WhiskerSpec& spec) {
    validate(spec);
    int base_n = spec.base.n();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < base_n; ++v) {
        spec.base.neighbors(v).for_each([&](int u) {
            if (u > v) edges.emplace_back(v, u);
        });
    }
    std::vector<std::string> labels;
    if (!spec.base.labels().empty()) {
        labels = spec.base.labels();
    } else {
        for (int v = 0; v < base_n; ++v) labels.push_back("x" + std::to_string(v + 1));
    }
    int next = base_n;
    for (int v = 0; v < base_n; ++v) {
        for (int k = 0; k < spec.leaf_counts[static_cast<std::size_t>(v)]; ++k) {
            edges.emplace_back(v, next);
            labels.push_back("l" + std::to_string(v + 1) + "." + std::to_string(k + 1));
            ++next;
        }
    }
    return Graph::from_edge_list(next, edges, std::move(labels));
}

Graph caterpillar(const CaterpillarSpec& spec) {
    validate(spec);
    return whisker(WhiskerSpec{path(spec.spine), spec.leaf_counts});
}

Graph two_clique(const TwoCliqueParams& p) {
    validate(p);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < p.a; ++i) {
        labels.push_back("u" + std::to_string(i + 1));
        for (int j = i + 1; j < p.a; ++j) edges.emplace_back(i, j);
    }
    for (int i = p.a; i < p.n; ++i) {
        labels.push_back("v" + std::to_string(i - p.a + 1));
        for (int j = i + 1; j < p.n; ++j) edges.emplace_back(i, j);
    }
    for (int j = 0; j < p.t; ++j) edges.emplace_back(0, p.a + j);
    return Graph::from_edge_list(p.n, edges, std::move(labels));
}

Graph clique_bouquet(const BouquetParams& p) {
    validate(p);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels{"x"};
    int next = 1;
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        int r = p.radii[i];
        for (int j = 0; j < r; ++j) {
            edges.emplace_back(0, next + j);
            for (int k = j + 1; k < r; ++k) edges.emplace_back(next + j, next + k);
            labels.push_back(arm_label(static_cast<int>(i) + 1, j + 1));
        }
        next += r;
    }
    return Graph::from_edge_list(next, edges, std::move(labels));
}

Graph cochordal_symmetric_witness(int d, int m) {
    if (d < 2) throw std::invalid_argument("cochordal witness: d must be at least 2");
    if (m < 0) throw std::invalid_argument("cochordal witness: m must be non-negative");
    return disjoint_union(Graph::from_edge_list(d - 2, {}), complete_minus_edge(m + 2));
}

BouquetParams exponential_witness_params(int n) {
    if (n < 3) throw std::invalid_argument("exponential witness: n must be at least 3");
    int q = (n - 1) / 5;
    int r = (n - 1) % 5;
    BouquetParams p;
    switch (r) {
        case 0:
            p.radii.assign(static_cast<std::size_t>(q), 5);
            break;
        case 1:
            p.radii.assign(static_cast<std::size_t>(q - 1), 5);
            p.radii.push_back(3);
            p.radii.push_back(3);
            break;
        default:
            p.radii.assign(static_cast<std::size_t>(q), 5);
            p.radii.push_back(r);
            break;
    }
    return p;
}

Graph exponential_witness(int n) { return clique_bouquet(exponential_witness_params(n)); }

}  // namespace indpoly
