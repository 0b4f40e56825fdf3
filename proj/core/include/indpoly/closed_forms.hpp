#ifndef INDPOLY_CLOSED_FORMS_HPP
#define INDPOLY_CLOSED_FORMS_HPP

#include <optional>
#include <vector>

#include "indpoly/families.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Closed-form values and classifications, implemented as pure functions of
// the family parameters so that each one can be tested against the engine.
// None of them computes the independence polynomial of the graph they
// describe; the whisker formulas recurse into the base graph only.

// P_{P_n}(-1): 1 for n = 0,5; 0 for n = 1,4; -1 for n = 2,3 (mod 6).
int path_minus_one(int n);

// Exact path polynomial P_{P_n}(x) by the two-term recursion
// P_n = P_{n-1} + x P_{n-2} with P_0 = 1, P_1 = 1 + x.
IntPolynomial path_polynomial(int n);

// prod_i P_{P_{n_i}}(x) + x prod_i P_{P_{n_i - 1}}(x).
IntPolynomial big_star_poly_formula(const BigStarParams& p);

// Case split on the counts c_k of arms congruent to k mod 6:
// (-1)^(c2+c3) when c1 = c4 = 0 and c2 + c5 > 0;
// (-1)^(c3+c4+1) when c2 = c5 = 0 and c1 + c4 > 0; 0 otherwise.
int big_star_minus_one(const BigStarParams& p);

// sum_i floor(n_i / 2) + max(1, #odd arms).
int big_star_alpha(const BigStarParams& p);

bool big_star_pseudo_gorenstein(const BigStarParams& p);

// True iff the arm multiset is {1, 1, 5}.
bool big_star_is_symmetric(const BigStarParams& p);

// sum over independent S of the base of x^|S| (1+x)^(sum_{i not in S} f_i).
// The base is enumerated exhaustively; at most 25 base vertices.
IntPolynomial whisker_polynomial(const WhiskerSpec& spec);

// 0 when the supported set C = {i : f_i > 0} is not independent in the
// base; otherwise (-1)^|C| P_{H - N[C]}(-1).
BigInt whisker_minus_one(const WhiskerSpec& spec);

// sum_i f_i + alpha(H - C).
int whisker_alpha(const WhiskerSpec& spec);

// Requires every f_i >= 1; true iff all f_i = 2. When true, additionally
// expands the sum formula and confirms it is palindromic.
bool whisker_symmetric_criterion(const WhiskerSpec& spec);

struct CaterpillarGaps {
    int r = 0;                 // number of leg positions
    std::vector<int> b;        // 1-indexed leg positions, ascending
    std::vector<int> m;        // bare-gap lengths m_0..m_r
    std::vector<int> ell;      // pruned gap lengths ell_0..ell_r
    int lambda = 0;            // #{j : ell_j = 2 or 3 (mod 6)}
    bool has_consecutive = false;
};

// Gap encoding of a caterpillar: m_0 = b_1 - 1, m_j = b_{j+1} - b_j - 1,
// m_r = n - b_r; ell trims one endpoint per adjacent leg position. With no
// legs at all: r = 0 and m_0 = ell_0 = n.
CaterpillarGaps caterpillar_gaps(const CaterpillarSpec& spec);

// 0 when two leg positions are adjacent, else (-1)^r prod_j p_{ell_j}.
int caterpillar_minus_one(const CaterpillarSpec& spec);

// sum_i f_i + sum_j ceil(m_j / 2).
int caterpillar_alpha(const CaterpillarSpec& spec);

bool caterpillar_pseudo_gorenstein(const CaterpillarSpec& spec);

// Requires every spine vertex to carry a leg; true iff all f_i = 2.
bool caterpillar_symmetric_criterion(const CaterpillarSpec& spec);

// (a-1)(n-a-1) - t.
long long two_clique_minus_one(const TwoCliqueParams& p);

struct ValueInterval {
    long long lo = 0;
    long long hi = 0;
    bool contains(long long v) const { return lo <= v && v <= hi; }
};

// [-(n-1), floor((n-2)^2 / 4) - 1]: the values P_G(-1) attained by
// connected graphs on n vertices with independence number at most 2.
ValueInterval alpha2_value_range(int n);

// Lexicographically smallest (a, t) with (a-1)(n-a-1) - t = v.
TwoCliqueParams realize_value(int n, long long v);

// prod_i (1 - r_i) - 1.
BigInt bouquet_minus_one(const BouquetParams& p);

// x + prod_i (1 + r_i x).
IntPolynomial bouquet_poly_formula(const BouquetParams& p);

// Recovers m >= 0 such that p = (1+x)^d + m x (1+x)^(d-2) by exact
// division, or nothing when p is not of that shape. Requires d >= 2.
std::optional<BigInt> cochordal_symmetric_form(const IntPolynomial& p);

// Single peak, plateaus allowed: coefficients never strictly increase
// after a strict decrease.
bool is_unimodal(const IntPolynomial& p);

}  // namespace indpoly

#endif
