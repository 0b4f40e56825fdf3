#include "indpoly/verify.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "indpoly/chordal.hpp"
#include "indpoly/closed_forms.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly::verify {

namespace {

constexpr int kDensityPercents[] = {15, 30, 50, 70, 85};

void fail(SweepResult& r, const std::string& what) {
    ++r.failures;
    if (r.first_counterexample.empty()) r.first_counterexample = what;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

BigInt sign_of_parity(int k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); }

// Non-decreasing length-q sequences over lo..hi.
template <typename F>
void for_each_multiset(int q, int lo, int hi, F&& f) {
    std::vector<int> buf(static_cast<std::size_t>(q));
    auto rec = [&](auto&& self, int pos, int min_value) -> void {
        if (pos == q) {
            f(buf);
            return;
        }
        for (int v = min_value; v <= hi; ++v) {
            buf[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, lo);
}

// Non-decreasing sequences of positive parts with sum in 1..max_sum.
template <typename F>
void for_each_partition_up_to(int max_sum, F&& f) {
    std::vector<int> buf;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (!buf.empty()) f(buf);
        for (int part = min_part; part <= remaining; ++part) {
            buf.push_back(part);
            self(self, remaining - part, part);
            buf.pop_back();
        }
    };
    rec(rec, max_sum, 1);
}

// The sign of a big star's value at -1 as stated by the +1/-1
// classification (conditions on mod-3 classes plus a mod-6 parity); used
// as a cross-check against the three-case theorem formula.
int big_star_corollary_sign(const BigStarParams& p) {
    int c[6] = {0, 0, 0, 0, 0, 0};
    for (int a : p.arms) ++c[a % 6];
    bool any_one_mod3 = c[1] + c[4] > 0;
    bool any_two_mod3 = c[2] + c[5] > 0;
    if (!any_one_mod3 && any_two_mod3) return (c[2] + c[3]) % 2 == 0 ? 1 : -1;
    if (!any_two_mod3 && any_one_mod3) return (c[3] + c[4]) % 2 == 1 ? 1 : -1;
    return 0;
}

}  // namespace

Graph random_gnp(int n, int edge_percent, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (static_cast<int>(rng() % 100) < edge_percent) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n <= 1) return Graph::from_edge_list(n, {});
    if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (int& x : prufer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : prufer) ++degree[static_cast<std::size_t>(v)];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : prufer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    int u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return Graph::from_edge_list(n, edges);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            if ((mask >> t) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

SweepResult run_paths(const Bounds& bounds) {
    SweepResult r;
    r.suite = "paths";
    for (int n = 0; n <= bounds.path_max_n; ++n) {
        ++r.checked;
        int closed = path_minus_one(n);
        if (n >= 2 && closed != path_minus_one(n - 1) - path_minus_one(n - 2)) {
            fail(r, "recurrence breaks at n=" + std::to_string(n));
        }
        Graph g = path(n);
        if (eval_minus_one(g) != closed) fail(r, "engine value differs at n=" + std::to_string(n));
        if (path_polynomial(n) != independence_polynomial(g)) {
            fail(r, "path polynomial differs at n=" + std::to_string(n));
        }
    }
    return r;
}

SweepResult run_big_stars(const Bounds& bounds) {
    SweepResult r;
    r.suite = "big-stars";
    std::vector<std::string> symmetric_instances;
    for (int q = 3; q <= bounds.max_q; ++q) {
        for_each_multiset(q, 1, bounds.max_arm, [&](const std::vector<int>& arms) {
            ++r.checked;
            BigStarParams params{arms};
            std::string tag = "G(" + join_ints(arms) + ")";
            Graph g = big_star(params);

            int expected_n = 1;
            for (int a : arms) expected_n += a;
            if (g.n() != expected_n) fail(r, tag + ": vertex count");

            IntPolynomial p = independence_polynomial(g);
            if (big_star_poly_formula(params) != p) fail(r, tag + ": product formula");
            BigInt value = p.eval(-1);
            if (BigInt(big_star_minus_one(params)) != value) fail(r, tag + ": value at -1");
            if (big_star_corollary_sign(params) != big_star_minus_one(params)) {
                fail(r, tag + ": sign corollary disagrees with case formula");
            }
            if (big_star_alpha(params) != p.degree()) fail(r, tag + ": alpha");
            bool engine_pg = value == sign_of_parity(p.degree());
            if (big_star_pseudo_gorenstein(params) != engine_pg) fail(r, tag + ": pseudo-Gorenstein*");
            bool engine_symmetric = is_symmetric(p);
            if (big_star_is_symmetric(params) != engine_symmetric) fail(r, tag + ": symmetry criterion");
            if (engine_symmetric) symmetric_instances.push_back(join_ints(arms));
            if (g.n() <= 18 && brute_force_polynomial(g) != p) fail(r, tag + ": oracle mismatch");
        });
    }
    // The unique symmetric big star has arms {1,1,5}; assert exactly that
    // whenever the swept box can see it.
    std::vector<std::string> expected_symmetric;
    if (bounds.max_arm >= 5 && bounds.max_q >= 3) expected_symmetric.push_back("1,1,5");
    if (symmetric_instances != expected_symmetric) {
        std::string found;
        for (const auto& inst : symmetric_instances) found += (found.empty() ? "" : "; ") + inst;
        fail(r, "symmetric big stars found: [" + found + "]");
    }
    r.notes.push_back("symmetric instances: " + std::to_string(symmetric_instances.size()));
    return r;
}

SweepResult run_caterpillars(const Bounds& bounds) {
    SweepResult r;
    r.suite = "caterpillars";
    for (int n = 1; n <= bounds.caterpillar_spine; ++n) {
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        while (true) {
            ++r.checked;
            CaterpillarSpec spec{n, f};
            std::string tag = "cat(" + std::to_string(n) + ";" + join_ints(f) + ")";
            Graph g = caterpillar(spec);

            IntPolynomial p = independence_polynomial(g);
            CaterpillarGaps gaps = caterpillar_gaps(spec);

            BigInt value = p.eval(-1);
            if (BigInt(caterpillar_minus_one(spec)) != value) fail(r, tag + ": value at -1");
            if (caterpillar_alpha(spec) != p.degree()) fail(r, tag + ": alpha");
            bool engine_pg = value == sign_of_parity(p.degree());
            if (caterpillar_pseudo_gorenstein(spec) != engine_pg) fail(r, tag + ": pseudo-Gorenstein*");

            bool ell_one_mod3 = false;
            for (int l : gaps.ell) ell_one_mod3 = ell_one_mod3 || (l % 3 == 1);
            if ((value == 0) != (gaps.has_consecutive || ell_one_mod3)) {
                fail(r, tag + ": zero classification");
            }
            if (value != 0 && value != sign_of_parity(gaps.r + gaps.lambda)) {
                fail(r, tag + ": sign (-1)^(r+lambda)");
            }

            bool all_positive = std::all_of(f.begin(), f.end(), [](int x) { return x >= 1; });
            if (all_positive && caterpillar_symmetric_criterion(spec) != is_symmetric(p)) {
                fail(r, tag + ": symmetry criterion");
            }
            if (g.n() <= 18 && brute_force_polynomial(g) != p) fail(r, tag + ": oracle mismatch");

            // next leaf vector in mixed radix
            int pos = 0;
            while (pos < n && f[static_cast<std::size_t>(pos)] == bounds.caterpillar_legs) {
                f[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == n) break;
            ++f[static_cast<std::size_t>(pos)];
        }
    }
    return r;
}

SweepResult run_whiskers(const Bounds& bounds) {
    SweepResult r;
    r.suite = "whiskers";
    std::mt19937_64 rng(bounds.seed ^ 0x77aa55ULL);
    for (int iter = 0; iter < bounds.whisker_count; ++iter) {
        int base_n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bounds.whisker_base));
        int density = kDensityPercents[iter % std::size(kDensityPercents)];
        Graph base = random_gnp(base_n, density, rng);
        std::string tag = "whisker#" + std::to_string(iter);
        ++r.checked;

        std::vector<int> f(static_cast<std::size_t>(base_n));
        int total = 0;
        for (int& x : f) {
            x = static_cast<int>(rng() % static_cast<std::uint64_t>(bounds.whisker_legs + 1));
            total += x;
        }
        WhiskerSpec spec{base, f};
        Graph g = whisker(spec);
        if (g.n() != base_n + total) fail(r, tag + ": vertex count");

        IntPolynomial p = independence_polynomial(g);
        if (whisker_polynomial(spec) != p) fail(r, tag + ": sum formula");
        if (whisker_minus_one(spec) != p.eval(-1)) fail(r, tag + ": value at -1");
        if (whisker_alpha(spec) != p.degree()) fail(r, tag + ": alpha");
        if (g.n() <= 18 && brute_force_polynomial(g) != p) fail(r, tag + ": oracle mismatch");

        // Full-support variants: symmetry holds iff every vertex gets two
        // leaves.
        std::vector<int> f_pos(static_cast<std::size_t>(base_n));
        for (int& x : f_pos) x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bounds.whisker_legs));
        WhiskerSpec positive{base, f_pos};
        bool criterion = whisker_symmetric_criterion(positive);
        if (criterion != is_symmetric(independence_polynomial(whisker(positive)))) {
            fail(r, tag + ": symmetry criterion (random full support)");
        }
        WhiskerSpec two_each{base, std::vector<int>(static_cast<std::size_t>(base_n), 2)};
        if (!whisker_symmetric_criterion(two_each)) fail(r, tag + ": two-leaf criterion");
        if (!is_symmetric(independence_polynomial(whisker(two_each)))) {
            fail(r, tag + ": two-leaf polynomial not palindromic");
        }
    }
    return r;
}

SweepResult run_cochordal(const Bounds& bounds) {
    SweepResult r;
    r.suite = "cochordal";
    for (int n = 0; n <= bounds.cochordal_n; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            Graph gc = complement(g);
            if (!is_chordal(gc)) continue;
            ++r.checked;
            std::string tag = "cochordal n=" + std::to_string(n) + " mask=" + std::to_string(mask);

            IntPolynomial p = independence_polynomial(g);
            int d = p.degree();
            int k = static_cast<int>(components(gc).size());
            if (p.eval(-1) != 1 - k) fail(r, tag + ": value != 1-k");

            if (d >= 1) {
                std::vector<BigInt> b = b_sequence(p);
                for (const BigInt& entry : b) {
                    if (entry <= 0) fail(r, tag + ": non-positive b-sequence entry");
                }
            }
            if (d >= 1 && is_symmetric(p)) {
                if (d == 1 && n != 1) fail(r, tag + ": symmetric with alpha 1 beyond K_1");
                if (d >= 2) {
                    auto m = cochordal_symmetric_form(p);
                    if (!m) {
                        fail(r, tag + ": symmetric polynomial not of witness shape");
                    } else {
                        IntPolynomial rebuilt =
                            IntPolynomial::one_plus_x_power(d) +
                            (IntPolynomial::constant(*m) * IntPolynomial::one_plus_x_power(d - 2)).times_x();
                        if (rebuilt != p) fail(r, tag + ": witness shape does not rebuild");
                    }
                    if (!is_unimodal(p)) fail(r, tag + ": symmetric but not unimodal");
                }
            }
            if (n >= 2 && mask != 0 && k == 1) {
                if (vertex_connectivity(gc) != multiplicity_at_minus_one(p)) {
                    fail(r, tag + ": multiplicity != complement connectivity");
                }
            }
        }
    }
    return r;
}

SweepResult run_range(const Bounds& bounds) {
    SweepResult r;
    r.suite = "range";
    for (int n = bounds.range_lo; n <= bounds.range_hi; ++n) {
        ValueInterval interval = alpha2_value_range(n);
        std::set<long long> realized;
        for (int a = 1; a <= n / 2; ++a) {
            for (int t = 1; t <= n - a; ++t) {
                ++r.checked;
                TwoCliqueParams params{n, a, t};
                std::string tag = "G_" + std::to_string(n) + "(" + std::to_string(a) + "," + std::to_string(t) + ")";
                long long value = two_clique_minus_one(params);
                realized.insert(value);

                Graph g = two_clique(params);
                IntPolynomial p = independence_polynomial(g);
                if (p.eval(-1) != value) fail(r, tag + ": engine value differs");
                if (p.degree() > 2) fail(r, tag + ": alpha exceeds 2");
                if (!is_chordal(g)) fail(r, tag + ": not chordal");
                if (components(g).size() != 1) fail(r, tag + ": not connected");
                if (g.n() <= 18 && brute_force_polynomial(g) != p) fail(r, tag + ": oracle mismatch");
            }
        }
        bool exact = static_cast<long long>(realized.size()) == interval.hi - interval.lo + 1;
        for (long long v : realized) exact = exact && interval.contains(v);
        if (!exact) fail(r, "n=" + std::to_string(n) + ": realized set is not the full interval");
        for (long long v = interval.lo; v <= interval.hi; ++v) {
            TwoCliqueParams params = realize_value(n, v);
            if (two_clique_minus_one(params) != v) {
                fail(r, "n=" + std::to_string(n) + ": realize_value(" + std::to_string(v) + ") wrong");
            }
        }
    }

    // Exhaustive cross-check over every labeled connected graph with
    // alpha <= 2.
    for (int n = std::max(3, bounds.range_lo); n <= std::min(bounds.range_exhaustive_hi, bounds.range_hi); ++n) {
        ValueInterval interval = alpha2_value_range(n);
        std::set<long long> seen;
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (components(g).size() != 1) continue;
            if (max_independent_set_size(g) > 2) continue;
            ++r.checked;
            long long value = eval_minus_one(g).convert_to<long long>();
            if (!interval.contains(value)) {
                fail(r, "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + ": value outside interval");
            }
            seen.insert(value);
        }
        if (static_cast<long long>(seen.size()) != interval.hi - interval.lo + 1) {
            fail(r, "n=" + std::to_string(n) + ": exhaustive sweep does not cover the interval");
        }
    }
    return r;
}

SweepResult run_bouquets(const Bounds& bounds) {
    SweepResult r;
    r.suite = "bouquets";
    for_each_partition_up_to(bounds.bouquet_sum, [&](const std::vector<int>& radii) {
        ++r.checked;
        BouquetParams params{radii};
        std::string tag = "H(" + join_ints(radii) + ")";
        Graph g = clique_bouquet(params);

        int expected_n = 1;
        for (int x : radii) expected_n += x;
        if (g.n() != expected_n) fail(r, tag + ": vertex count");

        IntPolynomial p = independence_polynomial(g);
        if (bouquet_poly_formula(params) != p) fail(r, tag + ": polynomial formula");
        if (bouquet_minus_one(params) != p.eval(-1)) fail(r, tag + ": value at -1");
        if (!is_chordal(g)) fail(r, tag + ": not chordal");
        if (components(g).size() != 1) fail(r, tag + ": not connected");
        if (g.n() <= 18 && brute_force_polynomial(g) != p) fail(r, tag + ": oracle mismatch");
    });

    for (int n = 3; n <= bounds.witness_hi; ++n) {
        ++r.checked;
        Graph g = exponential_witness(n);
        std::string tag = "witness n=" + std::to_string(n);
        if (g.n() != n) fail(r, tag + ": vertex count");
        BigInt value = eval_minus_one(g);
        BigInt bound = (BigInt(1) << (2 * ((n - 1) / 5))) - 1;  // 4^floor((n-1)/5) - 1
        if (abs(value) < bound) fail(r, tag + ": exponential bound violated");
        if (!is_chordal(g)) fail(r, tag + ": not chordal");
        if (components(g).size() != 1) fail(r, tag + ": not connected");
    }
    return r;
}

SweepResult run_trees(const Bounds& bounds) {
    SweepResult r;
    r.suite = "trees";
    std::mt19937_64 rng(bounds.seed ^ 0x7ee5ULL);
    for (int iter = 0; iter < bounds.tree_count; ++iter) {
        ++r.checked;
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bounds.tree_max_n));
        Graph t = random_tree(n, rng);
        std::string tag = "tree#" + std::to_string(iter) + " n=" + std::to_string(n);
        if (!is_tree(t)) fail(r, tag + ": generator produced a non-tree");
        BigInt value = eval_minus_one(t);
        if (value < -1 || value > 1) fail(r, tag + ": value " + value.str() + " outside {-1,0,1}");
        if (n <= 10 && brute_force_polynomial(t) != independence_polynomial(t)) {
            fail(r, tag + ": oracle mismatch");
        }
    }
    return r;
}

SweepResult run_engstrom(const Bounds& bounds) {
    SweepResult r;
    r.suite = "engstrom";
    std::mt19937_64 rng(bounds.seed ^ 0xe95ULL);
    for (int iter = 0; iter < bounds.engstrom_count; ++iter) {
        ++r.checked;
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bounds.engstrom_max_n));
        Graph g = random_gnp(n, kDensityPercents[iter % std::size(kDensityPercents)], rng);
        BigInt value = eval_minus_one(g);
        BigInt bound = BigInt(1) << decycling_number(g);
        if (abs(value) > bound) {
            fail(r, "gnp#" + std::to_string(iter) + ": |P(-1)| exceeds 2^decycling");
        }
    }
    return r;
}

SweepResult run_oracle(const Bounds& bounds) {
    SweepResult r;
    r.suite = "oracle";
    std::mt19937_64 rng(bounds.seed ^ 0x0aceULL);
    for (int iter = 0; iter < bounds.oracle_count; ++iter) {
        ++r.checked;
        int n = static_cast<int>(rng() % static_cast<std::uint64_t>(bounds.oracle_max_n + 1));
        Graph g = random_gnp(n, kDensityPercents[iter % std::size(kDensityPercents)], rng);
        std::string tag = "oracle#" + std::to_string(iter) + " n=" + std::to_string(n);

        IntPolynomial p = independence_polynomial(g);
        if (brute_force_polynomial(g) != p) fail(r, tag + ": engine != brute force");
        if (max_independent_set_size(g) != p.degree()) fail(r, tag + ": alpha search disagrees");

        int mult = multiplicity_at_minus_one(p);
        HData h = h_transform(p, p.degree());
        if (h.h.degree() != p.degree() - mult) fail(r, tag + ": deg h != alpha - M");
        if (h.h.coeff(p.degree()) != sign_of_parity(p.degree()) * p.eval(-1)) {
            fail(r, tag + ": h leading coefficient identity");
        }
        if (h.a_invariant != -mult) fail(r, tag + ": a-invariant != -M");
    }

    for (int iter = 0; iter < bounds.identity_count; ++iter) {
        ++r.checked;
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_gnp(n, kDensityPercents[iter % std::size(kDensityPercents)], rng);
        IntPolynomial lhs = independence_polynomial(g);
        for (int v = 0; v < n; ++v) {
            Graph without_v = induced(g, g.vertex_set().without(v));
            Graph without_nbhd =
                induced(g, g.vertex_set() - closed_neighborhood(g, VertexSet::single(v)));
            IntPolynomial rhs =
                independence_polynomial(without_v) + independence_polynomial(without_nbhd).times_x();
            if (lhs != rhs) {
                fail(r, "deletion#" + std::to_string(iter) + " v=" + std::to_string(v) +
                            ": deletion recursion identity");
                break;
            }
        }
    }

    for (int iter = 0; iter < bounds.identity_count; ++iter) {
        ++r.checked;
        int n1 = 1 + static_cast<int>(rng() % 8);
        int n2 = 1 + static_cast<int>(rng() % 8);
        Graph a = random_gnp(n1, kDensityPercents[iter % std::size(kDensityPercents)], rng);
        Graph b = random_gnp(n2, kDensityPercents[(iter + 2) % std::size(kDensityPercents)], rng);
        if (independence_polynomial(disjoint_union(a, b)) !=
            independence_polynomial(a) * independence_polynomial(b)) {
            fail(r, "union#" + std::to_string(iter) + ": multiplicativity");
        }
    }
    return r;
}

std::vector<SweepResult> run_all(const Bounds& bounds) {
    return {run_paths(bounds),   run_big_stars(bounds), run_caterpillars(bounds),
            run_whiskers(bounds), run_cochordal(bounds), run_range(bounds),
            run_bouquets(bounds), run_trees(bounds),     run_engstrom(bounds),
            run_oracle(bounds)};
}

}  // namespace indpoly::verify
