#include "indpoly/engine.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace indpoly {

namespace {

// Maximum-degree vertex of the component, lowest index on ties.
int pick_pivot(const Graph& g, const VertexSet& comp) {
    int best = -1;
    int best_deg = -1;
    comp.for_each([&](int v) {
        int d = (g.neighbors(v) & comp).count();
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    });
    return best;
}

using PolyMemo = std::unordered_map<VertexSet, IntPolynomial, VertexSetHash>;
using IntMemo = std::unordered_map<VertexSet, BigInt, VertexSetHash>;
using SizeMemo = std::unordered_map<VertexSet, int, VertexSetHash>;

IntPolynomial poly_rec(const Graph& g, const VertexSet& s, PolyMemo& memo) {
    if (s.empty()) return IntPolynomial::one();
    if (auto it = memo.find(s); it != memo.end()) return it->second;

    IntPolynomial result;
    auto comps = components_within(g, s);
    if (comps.size() > 1) {
        result = IntPolynomial::one();
        for (const VertexSet& c : comps) result = result * poly_rec(g, c, memo);
    } else {
        int v = pick_pivot(g, s);
        VertexSet survivors = (s - g.neighbors(v)).without(v);
        result = poly_rec(g, s.without(v), memo) + poly_rec(g, survivors, memo).times_x();
    }
    memo.emplace(s, result);
    return result;
}

BigInt value_rec(const Graph& g, const VertexSet& s, IntMemo& memo) {
    if (s.empty()) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;

    BigInt result;
    auto comps = components_within(g, s);
    if (comps.size() > 1) {
        result = 1;
        for (const VertexSet& c : comps) result *= value_rec(g, c, memo);
    } else {
        int v = pick_pivot(g, s);
        VertexSet survivors = (s - g.neighbors(v)).without(v);
        result = value_rec(g, s.without(v), memo) - value_rec(g, survivors, memo);
    }
    memo.emplace(s, result);
    return result;
}

int size_rec(const Graph& g, const VertexSet& s, SizeMemo& memo) {
    if (s.empty()) return 0;
    if (auto it = memo.find(s); it != memo.end()) return it->second;

    int result = 0;
    auto comps = components_within(g, s);
    if (comps.size() > 1) {
        for (const VertexSet& c : comps) result += size_rec(g, c, memo);
    } else {
        int v = pick_pivot(g, s);
        VertexSet survivors = (s - g.neighbors(v)).without(v);
        result = std::max(size_rec(g, s.without(v), memo), 1 + size_rec(g, survivors, memo));
    }
    memo.emplace(s, result);
    return result;
}

}  // namespace

IntPolynomial brute_force_polynomial(const Graph& g, int guard) {
    int n = g.n();
    if (n > guard) {
        throw std::invalid_argument("brute_force_polynomial: " + std::to_string(n) +
                                    " vertices exceeds guard " + std::to_string(guard));
    }
    if (n > 62) throw std::invalid_argument("brute_force_polynomial: bitmask enumeration is limited to 62 vertices");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).low64();

    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool independent = true;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
            if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask) {
                independent = false;
                break;
            }
        }
        if (independent) ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
    return IntPolynomial(std::move(counts));
}

IntPolynomial independence_polynomial(const Graph& g) {
    PolyMemo memo;
    return poly_rec(g, g.vertex_set(), memo);
}

int independence_number(const Graph& g) { return independence_polynomial(g).degree(); }

int max_independent_set_size(const Graph& g) {
    SizeMemo memo;
    return size_rec(g, g.vertex_set(), memo);
}

BigInt eval_minus_one(const Graph& g) {
    IntMemo memo;
    return value_rec(g, g.vertex_set(), memo);
}

InvariantReport report(const Graph& g) {
    InvariantReport r;
    r.poly = independence_polynomial(g);
    r.alpha = r.poly.degree();
    r.value_at_minus_one = r.poly.eval(-1);
    r.multiplicity = multiplicity_at_minus_one(r.poly);
    r.h = h_transform(r.poly, r.alpha);
    BigInt sign = r.alpha % 2 == 0 ? 1 : -1;
    r.pseudo_gorenstein_star = (r.value_at_minus_one == sign);
    r.symmetric = is_symmetric(r.poly);
    return r;
}

}  // namespace indpoly
