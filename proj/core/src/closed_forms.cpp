#include "indpoly/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "indpoly/engine.hpp"

namespace indpoly {

namespace {

constexpr std::array<int, 6> kPathValueByResidue{1, 0, -1, -1, 0, 1};

struct Mod6Counts {
    std::array<int, 6> c{};
};

Mod6Counts arm_counts(const BigStarParams& p) {
    Mod6Counts out;
    for (int a : p.arms) ++out.c[static_cast<std::size_t>(a % 6)];
    return out;
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

int path_minus_one(int n) {
    if (n < 0) throw std::invalid_argument("path_minus_one: negative length");
    return kPathValueByResidue[static_cast<std::size_t>(n % 6)];
}

IntPolynomial path_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("path_polynomial: negative length");
    IntPolynomial prev = IntPolynomial::one();                            // P_0
    if (n == 0) return prev;
    IntPolynomial cur(std::vector<BigInt>{1, 1});                        // P_1
    IntPolynomial x(std::vector<BigInt>{0, 1});
    for (int k = 2; k <= n; ++k) {
        IntPolynomial next = cur + x * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial big_star_poly_formula(const BigStarParams& p) {
    validate(p);
    IntPolynomial with_center_removed = IntPolynomial::one();
    IntPolynomial with_neighborhood_removed = IntPolynomial::one();
    for (int a : p.arms) {
        with_center_removed = with_center_removed * path_polynomial(a);
        with_neighborhood_removed = with_neighborhood_removed * path_polynomial(a - 1);
    }
    return with_center_removed + with_neighborhood_removed.times_x();
}

int big_star_minus_one(const BigStarParams& p) {
    validate(p);
    Mod6Counts mc = arm_counts(p);
    const auto& c = mc.c;
    if (c[1] == 0 && c[4] == 0 && c[2] + c[5] > 0) return parity_sign(c[2] + c[3]);
    if (c[2] == 0 && c[5] == 0 && c[1] + c[4] > 0) return parity_sign(c[3] + c[4] + 1);
    return 0;
}

int big_star_alpha(const BigStarParams& p) {
    validate(p);
    int sum = 0;
    int odd = 0;
    for (int a : p.arms) {
        sum += a / 2;
        odd += a % 2;
    }
    return sum + std::max(1, odd);
}

bool big_star_pseudo_gorenstein(const BigStarParams& p) {
    validate(p);
    Mod6Counts mc = arm_counts(p);
    const auto& c = mc.c;
    bool any_one_mod3 = c[1] + c[4] > 0;
    bool any_two_mod3 = c[2] + c[5] > 0;
    int alpha = big_star_alpha(p);
    if (!any_one_mod3 && any_two_mod3 && (alpha & 1) == ((c[2] + c[3]) & 1)) return true;
    if (!any_two_mod3 && any_one_mod3 && (alpha & 1) == ((c[3] + c[4] + 1) & 1)) return true;
    return false;
}

bool big_star_is_symmetric(const BigStarParams& p) {
    validate(p);
    std::vector<int> arms = p.arms;
    std::sort(arms.begin(), arms.end());
    return arms == std::vector<int>{1, 1, 5};
}

IntPolynomial whisker_polynomial(const WhiskerSpec& spec) {
    validate(spec);
    if (spec.base.n() > 25) {
        throw std::invalid_argument("whisker_polynomial: base too large for enumeration");
    }
    int total_leaves = 0;
    for (int f : spec.leaf_counts) total_leaves += f;

    std::vector<IntPolynomial> pw(static_cast<std::size_t>(total_leaves) + 1);
    for (int k = 0; k <= total_leaves; ++k) pw[static_cast<std::size_t>(k)] = IntPolynomial::one_plus_x_power(k);

    IntPolynomial sum;
    for_each_independent_set(spec.base, [&](const VertexSet& s) {
        int removed = 0;
        s.for_each([&](int v) { removed += spec.leaf_counts[static_cast<std::size_t>(v)]; });
        sum = sum + pw[static_cast<std::size_t>(total_leaves - removed)].times_x(s.count());
    });
    return sum;
}

BigInt whisker_minus_one(const WhiskerSpec& spec) {
    validate(spec);
    VertexSet supported;
    for (int v = 0; v < spec.base.n(); ++v) {
        if (spec.leaf_counts[static_cast<std::size_t>(v)] > 0) supported.set(v);
    }
    bool independent = true;
    supported.for_each([&](int v) {
        if (spec.base.neighbors(v).intersects(supported)) independent = false;
    });
    if (!independent) return 0;

    VertexSet rest = spec.base.vertex_set() - closed_neighborhood(spec.base, supported);
    BigInt value = eval_minus_one(induced(spec.base, rest));
    return supported.count() % 2 == 0 ? value : BigInt(-value);
}

int whisker_alpha(const WhiskerSpec& spec) {
    validate(spec);
    int total_leaves = 0;
    VertexSet supported;
    for (int v = 0; v < spec.base.n(); ++v) {
        int f = spec.leaf_counts[static_cast<std::size_t>(v)];
        total_leaves += f;
        if (f > 0) supported.set(v);
    }
    VertexSet rest = spec.base.vertex_set() - supported;
    return total_leaves + max_independent_set_size(induced(spec.base, rest));
}

bool whisker_symmetric_criterion(const WhiskerSpec& spec) {
    validate(spec);
    bool all_two = true;
    for (int f : spec.leaf_counts) {
        if (f < 1) throw std::invalid_argument("whisker_symmetric_criterion: every vertex needs a leaf");
        if (f != 2) all_two = false;
    }
    if (all_two && !is_symmetric(whisker_polynomial(spec))) {
        throw std::logic_error("whisker_symmetric_criterion: two-leaf expansion is not palindromic");
    }
    return all_two;
}

CaterpillarGaps caterpillar_gaps(const CaterpillarSpec& spec) {
    validate(spec);
    CaterpillarGaps out;
    for (int i = 0; i < spec.spine; ++i) {
        if (spec.leaf_counts[static_cast<std::size_t>(i)] > 0) out.b.push_back(i + 1);
    }
    out.r = static_cast<int>(out.b.size());
    if (out.r == 0) {
        out.m = {spec.spine};
        out.ell = {spec.spine};
    } else {
        out.m.push_back(out.b.front() - 1);
        for (int j = 1; j < out.r; ++j) out.m.push_back(out.b[static_cast<std::size_t>(j)] - out.b[static_cast<std::size_t>(j - 1)] - 1);
        out.m.push_back(spec.spine - out.b.back());

        out.ell.push_back(std::max(out.m.front() - 1, 0));
        for (int j = 1; j < out.r; ++j) out.ell.push_back(std::max(out.m[static_cast<std::size_t>(j)] - 2, 0));
        out.ell.push_back(std::max(out.m.back() - 1, 0));

        for (int j = 1; j < out.r; ++j) {
            if (out.b[static_cast<std::size_t>(j)] == out.b[static_cast<std::size_t>(j - 1)] + 1) out.has_consecutive = true;
        }
    }
    for (int l : out.ell) {
        int res = l % 6;
        if (res == 2 || res == 3) ++out.lambda;
    }
    return out;
}

int caterpillar_minus_one(const CaterpillarSpec& spec) {
    CaterpillarGaps gaps = caterpillar_gaps(spec);
    if (gaps.has_consecutive) return 0;
    int prod = 1;
    for (int l : gaps.ell) prod *= path_minus_one(l);
    return parity_sign(gaps.r) * prod;
}

int caterpillar_alpha(const CaterpillarSpec& spec) {
    CaterpillarGaps gaps = caterpillar_gaps(spec);
    int total = 0;
    for (int f : spec.leaf_counts) total += f;
    for (int m : gaps.m) total += (m + 1) / 2;
    return total;
}

bool caterpillar_pseudo_gorenstein(const CaterpillarSpec& spec) {
    CaterpillarGaps gaps = caterpillar_gaps(spec);
    if (gaps.has_consecutive) return false;
    for (int l : gaps.ell) {
        if (l % 3 == 1) return false;
    }
    return (caterpillar_alpha(spec) & 1) == ((gaps.r + gaps.lambda) & 1);
}

bool caterpillar_symmetric_criterion(const CaterpillarSpec& spec) {
    validate(spec);
    bool all_two = true;
    for (int f : spec.leaf_counts) {
        if (f < 1) throw std::invalid_argument("caterpillar_symmetric_criterion: every spine vertex needs a leg");
        if (f != 2) all_two = false;
    }
    return all_two;
}

long long two_clique_minus_one(const TwoCliqueParams& p) {
    validate(p);
    return static_cast<long long>(p.a - 1) * (p.n - p.a - 1) - p.t;
}

ValueInterval alpha2_value_range(int n) {
    if (n < 3) throw std::invalid_argument("alpha2_value_range: n must be at least 3");
    long long span = static_cast<long long>(n - 2) * (n - 2);
    return ValueInterval{-(static_cast<long long>(n) - 1), span / 4 - 1};
}

TwoCliqueParams realize_value(int n, long long v) {
    if (!alpha2_value_range(n).contains(v)) {
        throw std::invalid_argument("realize_value: value outside the attainable interval");
    }
    for (int a = 1; a <= n / 2; ++a) {
        long long t = static_cast<long long>(a - 1) * (n - a - 1) - v;
        if (t >= 1 && t <= n - a) return TwoCliqueParams{n, a, static_cast<int>(t)};
    }
    throw std::logic_error("realize_value: interval overlap argument failed");
}

BigInt bouquet_minus_one(const BouquetParams& p) {
    validate(p);
    BigInt prod = 1;
    for (int r : p.radii) prod *= 1 - r;
    return prod - 1;
}

IntPolynomial bouquet_poly_formula(const BouquetParams& p) {
    validate(p);
    IntPolynomial prod = IntPolynomial::one();
    for (int r : p.radii) prod = prod * IntPolynomial(std::vector<BigInt>{1, r});
    return prod + IntPolynomial(std::vector<BigInt>{0, 1});
}

std::optional<BigInt> cochordal_symmetric_form(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 2) {
        throw std::invalid_argument("cochordal_symmetric_form: degree must be at least 2");
    }
    int d = p.degree();
    IntPolynomial rest = p - IntPolynomial::one_plus_x_power(d);
    if (rest.is_zero()) return BigInt(0);
    if (rest.coeff(0) != 0) return std::nullopt;

    // rest must be m * x * (1+x)^(d-2): peel off x, then divide by (1+x)
    // d-2 times with zero remainder, and end on a non-negative constant.
    std::vector<BigInt> c(rest.coeffs().begin() + 1, rest.coeffs().end());
    for (int step = 0; step < d - 2; ++step) {
        if (c.size() < 2) return std::nullopt;
        std::size_t deg = c.size() - 1;
        std::vector<BigInt> q(deg);
        q[deg - 1] = c[deg];
        for (std::size_t i = deg - 1; i >= 1; --i) q[i - 1] = c[i] - q[i];
        if (c[0] - q[0] != 0) return std::nullopt;
        c = std::move(q);
    }
    if (c.size() != 1 || c[0] < 0) return std::nullopt;
    return c[0];
}

bool is_unimodal(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_unimodal: zero polynomial");
    bool descending = false;
    for (int i = 1; i <= p.degree(); ++i) {
        if (p.coeff(i) > p.coeff(i - 1)) {
            if (descending) return false;
        } else if (p.coeff(i) < p.coeff(i - 1)) {
            descending = true;
        }
    }
    return true;
}

}  // namespace indpoly
