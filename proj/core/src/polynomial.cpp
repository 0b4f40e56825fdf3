#include "indpoly/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace indpoly {

namespace {

const BigInt kZero = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::one_plus_x_power(int k) {
    if (k < 0) throw std::invalid_argument("one_plus_x_power: negative exponent");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
    c[0] = 1;
    for (int i = 1; i <= k; ++i) c[i] = c[i - 1] * (k - i + 1) / i;
    return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i > 0; --i) acc = acc * x + coeffs_[i - 1];
    return acc;
}

IntPolynomial IntPolynomial::times_x(int k) const {
    if (k < 0) throw std::invalid_argument("times_x: negative shift");
    if (is_zero() || k == 0) {
        IntPolynomial r = *this;
        return r;
    }
    std::vector<BigInt> c(coeffs_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += mag.str();
        if (i >= 1) out += "*x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) out.push_back(c.str());
    return out;
}

bool is_symmetric(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_symmetric: zero polynomial");
    int d = p.degree();
    for (int i = 0; 2 * i <= d; ++i) {
        if (p.coeff(i) != p.coeff(d - i)) return false;
    }
    return true;
}

int multiplicity_at_minus_one(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("multiplicity_at_minus_one: zero polynomial");
    std::vector<BigInt> c = p.coeffs();
    int count = 0;
    while (c.size() > 1) {
        // Synthetic division by (x + 1); remainder is the value at -1.
        std::size_t d = c.size() - 1;
        std::vector<BigInt> q(d);
        q[d - 1] = c[d];
        for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = c[i] - q[i];
        if (c[0] - q[0] != 0) break;
        c = std::move(q);
        ++count;
    }
    return count;
}

HData h_transform(const IntPolynomial& p, int alpha) {
    if (p.is_zero()) throw std::invalid_argument("h_transform: zero polynomial");
    if (alpha != p.degree()) throw std::invalid_argument("h_transform: alpha must equal deg(p)");

    // Powers of (1 - t) up to alpha.
    std::vector<IntPolynomial> pw(static_cast<std::size_t>(alpha) + 1);
    pw[0] = IntPolynomial::one();
    IntPolynomial one_minus_t(std::vector<BigInt>{1, -1});
    for (int k = 1; k <= alpha; ++k) pw[k] = pw[k - 1] * one_minus_t;

    IntPolynomial h;
    for (int i = 0; i <= alpha; ++i) {
        if (p.coeff(i) == 0) continue;
        h = h + (IntPolynomial::constant(p.coeff(i)) * pw[static_cast<std::size_t>(alpha - i)]).times_x(i);
    }

    int mult = multiplicity_at_minus_one(p);
    if (h.degree() != alpha - mult) {
        throw std::logic_error("h_transform: degree identity deg(h) == alpha - M violated");
    }
    BigInt expected_top = p.eval(-1);
    if (alpha % 2 != 0) expected_top = -expected_top;
    if (h.coeff(alpha) != expected_top) {
        throw std::logic_error("h_transform: leading coefficient identity violated");
    }
    return HData{std::move(h), alpha, (alpha - mult) - alpha};
}

std::vector<BigInt> b_sequence(const IntPolynomial& p) {
    if (p.is_zero() || p.coeff(0) != 1) {
        throw std::invalid_argument("b_sequence: constant term must be 1");
    }
    int d = p.degree();
    if (d < 1) throw std::invalid_argument("b_sequence: constant polynomial");

    IntPolynomial x_minus_one(std::vector<BigInt>{-1, 1});
    IntPolynomial acc = IntPolynomial::constant(p.coeff(d));
    for (int i = d - 1; i >= 1; --i) acc = acc * x_minus_one + IntPolynomial::constant(p.coeff(i));

    std::vector<BigInt> b(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) b[static_cast<std::size_t>(j)] = acc.coeff(j);
    return b;
}

std::vector<BigInt> b_sequence_inverse(const std::vector<BigInt>& b) {
    if (b.empty()) throw std::invalid_argument("b_sequence_inverse: empty sequence");
    std::size_t d = b.size();
    IntPolynomial x_plus_one(std::vector<BigInt>{1, 1});
    IntPolynomial acc = IntPolynomial::constant(b[d - 1]);
    for (std::size_t i = d - 1; i >= 1; --i) acc = acc * x_plus_one + IntPolynomial::constant(b[i - 1]);

    std::vector<BigInt> g(d);
    for (std::size_t j = 0; j < d; ++j) g[j] = acc.coeff(static_cast<int>(j));
    return g;
}

}  // namespace indpoly
