#include "indpoly/chordal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "indpoly/engine.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P | X covering most of P.
    int pivot = -1;
    int covered = -1;
    (p | x).for_each([&](int u) {
        int c = (g.neighbors(u) & p).count();
        if (c > covered) {
            covered = c;
            pivot = u;
        }
    });
    VertexSet candidates = p - g.neighbors(pivot);
    candidates.for_each([&](int v) {
        bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.reset(v);
        x.set(v);
    });
}

bool clique_lexicographic_less(const VertexSet& a, const VertexSet& b) {
    if (a.lowest() != b.lowest()) return a.lowest() < b.lowest();
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
}

// F is a leaf of the facet family `active` when some branch B covers every
// intersection of F with the other facets.
bool is_leaf_of(const std::vector<VertexSet>& facets, const std::vector<int>& active, int f) {
    if (active.size() == 1) return true;
    for (int b : active) {
        if (b == f) continue;
        bool branch_ok = true;
        for (int h : active) {
            if (h == f || h == b) continue;
            if (!(facets[static_cast<std::size_t>(b)])
                     .contains(facets[static_cast<std::size_t>(f)] & facets[static_cast<std::size_t>(h)])) {
                branch_ok = false;
                break;
            }
        }
        if (branch_ok) return true;
    }
    return false;
}

long long edges_within(const Graph& g, const VertexSet& sub) {
    long long twice = 0;
    sub.for_each([&](int v) { twice += (g.neighbors(v) & sub).count(); });
    return twice / 2;
}

bool is_forest_within(const Graph& g, const VertexSet& sub) {
    long long vertices = sub.count();
    long long comps = static_cast<long long>(components_within(g, sub).size());
    return edges_within(g, sub) == vertices - comps;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    if (g.n() > 30) throw std::invalid_argument("maximal_cliques: more than 30 vertices");
    if (g.n() == 0) return {};
    std::vector<VertexSet> out;
    bron_kerbosch(g, VertexSet{}, g.vertex_set(), VertexSet{}, out);
    std::sort(out.begin(), out.end(), clique_lexicographic_less);
    return out;
}

bool is_chordal(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> visit_order;
    visit_order.reserve(static_cast<std::size_t>(n));
    VertexSet visited;

    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited.test(v)) continue;
            if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        }
        visit_order.push_back(best);
        visited.set(best);
        (g.neighbors(best) - visited).for_each([&](int u) { ++weight[static_cast<std::size_t>(u)]; });
    }

    // Reversing a maximum cardinality search order yields a perfect
    // elimination order iff the graph is chordal, i.e. the earlier-visited
    // neighbors of each vertex must be pairwise adjacent.
    VertexSet earlier;
    for (int v : visit_order) {
        VertexSet back = g.neighbors(v) & earlier;
        bool clique = true;
        back.for_each([&](int u) {
            if (!g.neighbors(u).contains(back.without(u))) clique = false;
        });
        if (!clique) return false;
        earlier.set(v);
    }
    return true;
}

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

std::optional<LeafOrder> leaf_order(std::vector<VertexSet> facets) {
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (i != j && facets[i].contains(facets[j])) {
                throw std::invalid_argument("leaf_order: facets must be pairwise incomparable");
            }
        }
    }

    std::vector<int> active(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) active[i] = static_cast<int>(i);

    std::vector<int> order(facets.size());
    for (std::size_t remaining = facets.size(); remaining > 0; --remaining) {
        int found = -1;
        for (int f : active) {
            if (is_leaf_of(facets, active, f)) {
                found = f;
                break;
            }
        }
        if (found == -1) return std::nullopt;
        order[remaining - 1] = found;
        active.erase(std::find(active.begin(), active.end(), found));
    }
    return LeafOrder{std::move(facets), std::move(order)};
}

std::vector<BigInt> b_sequence_of_cochordal(const Graph& g) {
    if (!is_cochordal(g)) throw std::invalid_argument("b_sequence_of_cochordal: graph is not cochordal");
    IntPolynomial p = independence_polynomial(g);
    if (p.degree() < 1) throw std::invalid_argument("b_sequence_of_cochordal: independence number must be >= 1");
    std::vector<BigInt> b = b_sequence(p);
    for (const BigInt& entry : b) {
        if (entry <= 0) throw std::logic_error("b_sequence_of_cochordal: positivity violated");
    }
    return b;
}

int complement_component_count(const Graph& g) {
    return static_cast<int>(components(complement(g)).size());
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n > 16) throw std::invalid_argument("vertex_connectivity: more than 16 vertices");
    if (n == 0 || components(g).size() != 1) return 0;

    VertexSet all = g.vertex_set();
    for (int k = 1; k <= n - 2; ++k) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            VertexSet cut;
            for (int v = 0; v < n; ++v) {
                if ((mask >> v) & 1) cut.set(v);
            }
            if (components_within(g, all - cut).size() > 1) return k;
        }
    }
    return n - 1;  // no cut set exists: complete graph convention
}

int decycling_number(const Graph& g) {
    int n = g.n();
    if (n > 16) throw std::invalid_argument("decycling_number: more than 16 vertices");
    VertexSet all = g.vertex_set();
    if (is_forest_within(g, all)) return 0;

    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    for (int k = 1; k <= n; ++k) {
        for (std::uint32_t mask : by_size[static_cast<std::size_t>(k)]) {
            VertexSet removed;
            for (int v = 0; v < n; ++v) {
                if ((mask >> v) & 1) removed.set(v);
            }
            if (is_forest_within(g, all - removed)) return k;
        }
    }
    return n;
}

}  // namespace indpoly
