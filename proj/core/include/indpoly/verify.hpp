#ifndef INDPOLY_VERIFY_HPP
#define INDPOLY_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly::verify {

// Sweep sizes. The defaults are the documented verification box: every
// closed form is compared against the engine (and, where small enough,
// against the brute-force oracle) over these parameter ranges.
struct Bounds {
    int max_q = 5;                // big stars: 3..max_q arms
    int max_arm = 7;              // big stars: arm lengths 1..max_arm

    int caterpillar_spine = 6;    // spines 1..this
    int caterpillar_legs = 2;     // leg counts 0..this per spine vertex

    int whisker_count = 200;      // random bases
    int whisker_base = 8;         // base sizes 1..this
    int whisker_legs = 3;         // leaf counts 0..this

    int cochordal_n = 7;          // all graphs on up to this many vertices

    int range_lo = 3;             // alpha<=2 realizability interval sweep
    int range_hi = 12;
    int range_exhaustive_hi = 6;  // exhaustive connected-graph cross-check

    int bouquet_sum = 16;         // radius multisets with sum up to this
    int witness_hi = 17;          // exponential witnesses on 3..this vertices

    int tree_count = 500;
    int tree_max_n = 16;

    int engstrom_count = 200;
    int engstrom_max_n = 12;

    int oracle_count = 1000;      // engine vs brute force
    int oracle_max_n = 14;
    int identity_count = 200;     // deletion recursion / multiplicativity

    int path_max_n = 60;

    std::uint64_t seed = 0x01db0a93u;
};

struct SweepResult {
    std::string suite;
    long long checked = 0;
    long long failures = 0;
    std::string first_counterexample;
    std::vector<std::string> notes;
    bool ok() const { return failures == 0; }
};

SweepResult run_paths(const Bounds& bounds);
SweepResult run_big_stars(const Bounds& bounds);
SweepResult run_caterpillars(const Bounds& bounds);
SweepResult run_whiskers(const Bounds& bounds);
SweepResult run_cochordal(const Bounds& bounds);
SweepResult run_range(const Bounds& bounds);
SweepResult run_bouquets(const Bounds& bounds);
SweepResult run_trees(const Bounds& bounds);
SweepResult run_engstrom(const Bounds& bounds);
SweepResult run_oracle(const Bounds& bounds);

// Every sweep above, in a fixed order.
std::vector<SweepResult> run_all(const Bounds& bounds);

// Deterministic random instances (all randomness flows through `rng`).
Graph random_gnp(int n, int edge_percent, std::mt19937_64& rng);
Graph random_tree(int n, std::mt19937_64& rng);

// Graph on n vertices whose strict upper triangle is given by the low
// n(n-1)/2 bits of `mask`, pair (i,j) ordered by j then i.
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace indpoly::verify

#endif
