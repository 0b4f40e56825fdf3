#ifndef INDPOLY_POLYNOMIAL_HPP
#define INDPOLY_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "indpoly/bigint.hpp"

namespace indpoly {

// Dense univariate polynomial with exact integer coefficients; coeff(i) is
// the coefficient of x^i. The representation is trimmed, so the zero
// polynomial stores no coefficients at all and has no degree; operations
// that need a degree reject it explicitly.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial one() { return constant(1); }
    // (1 + x)^k
    static IntPolynomial one_plus_x_power(int k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the nonzero polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& x) const;

    // Multiply by x^k.
    IntPolynomial times_x(int k = 1) const;

    // "c0 + c1*x + c2*x^2" with zero terms skipped and signs normalized.
    std::string to_text() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Coefficients as decimal strings (constant term first), for JSON output.
std::vector<std::string> to_decimal_strings(const IntPolynomial& p);

// True iff the coefficient sequence is a palindrome. Rejects the zero
// polynomial.
bool is_symmetric(const IntPolynomial& p);

// Largest k such that (1+x)^k divides p, by repeated exact synthetic
// division at -1. Rejects the zero polynomial.
int multiplicity_at_minus_one(const IntPolynomial& p);

struct HData {
    IntPolynomial h;
    int alpha = 0;
    int a_invariant = 0;  // deg(h) - alpha
};

// h(t) = sum_i p_i t^i (1-t)^(alpha-i), expanded exactly. Requires
// alpha == deg(p). Cross-checks two identities before returning:
// deg(h) == alpha - multiplicity_at_minus_one(p) and the leading
// coefficient h_alpha == (-1)^alpha p(-1); violations throw.
HData h_transform(const IntPolynomial& p, int alpha);

// (b_1..b_d) with sum_{i=1..d} p_i (x-1)^{i-1} = sum_i b_i x^{i-1}.
// Requires constant term 1 and d = deg(p) >= 1.
std::vector<BigInt> b_sequence(const IntPolynomial& p);

// Inverse of b_sequence: recovers (g_1..g_d) from (b_1..b_d).
std::vector<BigInt> b_sequence_inverse(const std::vector<BigInt>& b);

}  // namespace indpoly

#endif
