#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plateau/bigint.hpp"

namespace plateau {

// Exact integer-coefficient polynomial in x. Canonical form: the zero
// polynomial stores no coefficients; otherwise the leading coefficient is
// nonzero. Values are immutable in spirit: all operations return fresh
// polynomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial constant(BigInt c);
    static Polynomial monomial(BigInt c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^d; zero outside the stored range.
    const BigInt& coeff(int d) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    Polynomial derivative() const;
    // x^n * p(1/x) as exact coefficient reversal; requires degree() <= n.
    Polynomial reversed(int n) const;
    // gcd of |coefficients|; zero for the zero polynomial.
    BigInt content() const;
    BigInt coefficient_sum() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const BigInt& c, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Sparse ascending form with explicit coefficients, e.g. "2*x + 1*x^2";
    // the zero polynomial prints as "0". Parse accepts exactly this shape.
    std::string to_string() const;
    static Polynomial parse(std::string_view text);

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

// Exact polynomial in x and q; only nonzero coefficients are stored,
// keyed by (deg_x, deg_q).
class BiPolynomial {
public:
    using Key = std::pair<int, int>;

    BiPolynomial() = default;

    void add_term(int deg_x, int deg_q, const BigInt& c);
    const BigInt& coeff(int deg_x, int deg_q) const;
    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_deg_q() const;

    // Substitute a concrete integer for q.
    Polynomial eval_q(const BigInt& q) const;

    friend BiPolynomial operator+(const BiPolynomial& p, const BiPolynomial& q);
    friend BiPolynomial operator*(const BiPolynomial& p, const BiPolynomial& q);
    friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

    // Terms "c*x^a*q^b" joined by " + ", sorted by (a,b); "0" when empty.
    std::string to_string() const;
    static BiPolynomial parse(std::string_view text);

private:
    std::map<Key, BigInt> terms_;
};

// k^n * P(x, 1/k), expanded exactly: each term c*x^a*q^b contributes
// c*k^(n-b)*x^a. Rejects inputs with deg_q > n, which would force a
// non-integer result.
Polynomial bipoly_scaled_reciprocal_q(const BiPolynomial& p, int k, int n);

// Integer polynomial divided by a positive integer, kept in reduced form:
// gcd(content(numerator), denominator) == 1, and the zero value has
// denominator 1.
class RationalPolynomial {
public:
    RationalPolynomial() : den_(1) {}
    RationalPolynomial(Polynomial num) : num_(std::move(num)), den_(1) {}
    RationalPolynomial(Polynomial num, BigInt den);

    const Polynomial& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    // "num" when the denominator is 1, "(num)/den" otherwise.
    std::string to_string() const;
    static RationalPolynomial parse(std::string_view text);

private:
    Polynomial num_;
    BigInt den_;
    void reduce();
};

}  // namespace plateau
