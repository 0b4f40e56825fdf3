// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion is exact (integer arithmetic throughout) and carries a
// wall-clock budget that is enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "indpoly/closed_forms.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/verify.hpp"

namespace {

using indpoly::BigInt;
using indpoly::IntPolynomial;

struct Outcome {
    bool pass = true;
    long long checked = 0;
    std::string detail;
};

Outcome from_sweeps(const std::vector<indpoly::verify::SweepResult>& sweeps) {
    Outcome out;
    for (const auto& s : sweeps) {
        out.checked += s.checked;
        if (!s.ok()) {
            out.pass = false;
            if (out.detail.empty()) out.detail = s.suite + ": " + s.first_counterexample;
        }
    }
    return out;
}

Outcome criterion_golden_polynomial() {
    Outcome out;
    IntPolynomial expected(std::vector<BigInt>{1, 15, 91, 296, 577, 714, 575, 296, 91, 15, 1});
    indpoly::BigStarParams params{{1, 1, 1, 3, 3, 5}};
    out.checked = 2;
    if (indpoly::independence_polynomial(indpoly::big_star(params)) != expected) {
        out.pass = false;
        out.detail = "engine polynomial differs on the 15-vertex big star";
    } else if (indpoly::big_star_poly_formula(params) != expected) {
        out.pass = false;
        out.detail = "product formula differs on the 15-vertex big star";
    }
    return out;
}

}  // namespace

int main() {
    indpoly::verify::Bounds bounds;  // defaults are the acceptance boxes

    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };

    const std::vector<Criterion> criteria = {
        {1, "golden-polynomial", 1.0, criterion_golden_polynomial},
        {2, "big-star-box", 60.0, [&] { return from_sweeps({indpoly::verify::run_big_stars(bounds)}); }},
        {3, "caterpillar-box", 60.0,
         [&] { return from_sweeps({indpoly::verify::run_caterpillars(bounds)}); }},
        {4, "whisker-theorems", 60.0,
         [&] { return from_sweeps({indpoly::verify::run_whiskers(bounds)}); }},
        {5, "alpha2-realizability", 210.0,
         [&] { return from_sweeps({indpoly::verify::run_range(bounds)}); }},
        {6, "exponential-bound", 10.0,
         [&] { return from_sweeps({indpoly::verify::run_bouquets(bounds)}); }},
        {7, "cochordal-suite", 180.0,
         [&] { return from_sweeps({indpoly::verify::run_cochordal(bounds)}); }},
        {8, "oracle-and-properties", 300.0,
         [&] {
             return from_sweeps({indpoly::verify::run_oracle(bounds), indpoly::verify::run_trees(bounds),
                                 indpoly::verify::run_engstrom(bounds)});
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_budget = elapsed <= c.budget_seconds;
        bool pass = outcome.pass && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %d %-22s %s  (checked=%lld, %.2fs, budget %.0fs)%s%s\n", c.id, c.name,
                    pass ? "PASS" : "FAIL", outcome.checked, elapsed, c.budget_seconds,
                    outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
        if (!in_budget && outcome.pass) std::printf("    over budget\n");
    }
    return failures == 0 ? 0 : 1;
}
