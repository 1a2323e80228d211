#include <random>

#include "doctest.h"
#include "plateau/errors.hpp"
#include "plateau/polynomial.hpp"

using namespace plateau;

namespace {

Polynomial from_ints(std::vector<long long> v) {
    std::vector<BigInt> c(v.begin(), v.end());
    return Polynomial(std::move(c));
}

// test-side oracle, written independently of Polynomial::operator*
Polynomial naive_mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree() + q.degree()) + 1, BigInt(0));
    for (int d = 0; d <= p.degree() + q.degree(); ++d)
        for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(d)] += p.coeff(i) * q.coeff(d - i);
    return Polynomial(std::move(out));
}

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(-1, 5), coeff(-9, 9);
    int d = deg(rng);
    std::vector<BigInt> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    return Polynomial(std::move(c));
}

const Polynomial kN1 = from_ints({0, 1});
const Polynomial kN2 = from_ints({0, 2, 1});
const Polynomial kN3 = from_ints({0, 4, 10, 1});
const Polynomial kN4 = from_ints({0, 8, 60, 36, 1});

}  // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("canonical form") {
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial::constant(0).is_zero());
    CHECK(from_ints({1, 2, 0, 0}).degree() == 1);
    CHECK(from_ints({0}) == Polynomial());
    CHECK(Polynomial::monomial(1, 3) == from_ints({0, 0, 0, 1}));
}

TEST_CASE("addition") {
    CHECK(kN1 + kN2 == from_ints({0, 3, 1}));  // x + (2x + x^2)
    Polynomial p = from_ints({3, -1, 7});
    CHECK(p + Polynomial() == p);
    CHECK(p - p == Polynomial());
}

TEST_CASE("multiplication") {
    CHECK(kN1 * kN2 == from_ints({0, 0, 2, 1}));  // x * (2x + x^2)
    Polynomial p = from_ints({5, 0, -2});
    CHECK(p * Polynomial::constant(1) == p);
    CHECK(kN2 * kN2 == from_ints({0, 0, 4, 4, 1}));
}

TEST_CASE("ring properties against the naive oracle") {
    std::mt19937 rng(20250808);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p * q == naive_mul(p, q));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("derivative") {
    CHECK(kN3.derivative() == from_ints({4, 20, 3}));
    CHECK(Polynomial::constant(42).derivative().is_zero());
    CHECK(kN4.derivative() == from_ints({8, 120, 108, 4}));
}

TEST_CASE("derivative product rule") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("reversal") {
    CHECK(kN2.reversed(2) == from_ints({1, 2}));  // x^2 N_2(1/x) = 1 + 2x
    CHECK(kN3.reversed(3) == from_ints({1, 10, 4}));
    CHECK(Polynomial::monomial(1, 1).reversed(3) == from_ints({0, 0, 1}));
    CHECK_THROWS_AS(kN3.reversed(2), std::invalid_argument);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(rng);
        int n = p.degree() + 2;
        CHECK(p.reversed(n).reversed(n) == p);
    }
}

TEST_CASE("evaluate and content") {
    CHECK(kN4.evaluate(1) == 105);  // coefficient sum is (2n-1)!!
    CHECK(kN4.coefficient_sum() == 105);
    CHECK(from_ints({6, -9, 12}).content() == 3);
    CHECK(Polynomial().content() == 0);
}

TEST_CASE("text form") {
    CHECK(kN2.to_string() == "2*x + 1*x^2");
    CHECK(kN1.to_string() == "1*x");
    CHECK(Polynomial().to_string() == "0");
    CHECK(from_ints({1, -1}).to_string() == "1 + -1*x");
    CHECK(Polynomial::parse("2*x + 1*x^2") == kN2);
    CHECK(Polynomial::parse("0") == Polynomial());
    CHECK(Polynomial::parse("1 + -1*x") == from_ints({1, -1}));
    CHECK(Polynomial::parse("7") == Polynomial::constant(7));
}

TEST_CASE("text round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        Polynomial p = random_poly(rng);
        CHECK(Polynomial::parse(p.to_string()) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Polynomial::parse(""), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1 +"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1 2"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1 + 2"), ParseError);  // duplicate degree 0
    try {
        Polynomial::parse("1 + $");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("bi-polynomial basics") {
    BiPolynomial a2;  // q^2 + x q
    a2.add_term(0, 2, 1);
    a2.add_term(1, 1, 1);
    CHECK(a2.coeff(0, 2) == 1);
    CHECK(a2.coeff(3, 3) == 0);
    CHECK(a2.max_deg_q() == 2);
    CHECK(a2.eval_q(1) == from_ints({1, 1}));
    CHECK(a2.to_string() == "1*x^0*q^2 + 1*x^1*q^1");
    CHECK(BiPolynomial::parse("1*x^0*q^2 + 1*x^1*q^1") == a2);
    CHECK(BiPolynomial().to_string() == "0");
    CHECK(BiPolynomial::parse("0") == BiPolynomial());

    BiPolynomial cancel;
    cancel.add_term(1, 1, 5);
    cancel.add_term(1, 1, -5);
    CHECK(cancel.is_zero());
}

TEST_CASE("scaled reciprocal substitution") {
    BiPolynomial a2;
    a2.add_term(0, 2, 1);
    a2.add_term(1, 1, 1);
    CHECK(bipoly_scaled_reciprocal_q(a2, 2, 2) == from_ints({1, 2}));  // 1 + 2x
    CHECK(bipoly_scaled_reciprocal_q(a2, 1, 2) == a2.eval_q(1));
    BiPolynomial just_q;
    just_q.add_term(0, 1, 1);
    CHECK(bipoly_scaled_reciprocal_q(just_q, 5, 1) == Polynomial::constant(1));
    CHECK_THROWS_AS(bipoly_scaled_reciprocal_q(a2, 2, 1), std::invalid_argument);
}

TEST_CASE("rational polynomials reduce") {
    RationalPolynomial r(from_ints({2, 2}), 4);
    CHECK(r.numerator() == from_ints({1, 1}));
    CHECK(r.denominator() == 2);
    CHECK(RationalPolynomial(Polynomial(), 7).denominator() == 1);
    CHECK(RationalPolynomial(from_ints({1}), -2) == RationalPolynomial(from_ints({-1}), 2));
    CHECK_THROWS_AS(RationalPolynomial(from_ints({1}), 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    RationalPolynomial half(from_ints({1}), 2);
    RationalPolynomial third(from_ints({1}), 3);
    CHECK(half + third == RationalPolynomial(from_ints({5}), 6));
    CHECK(half * third == RationalPolynomial(from_ints({1}), 6));
    CHECK(half - half == RationalPolynomial());
    RationalPolynomial x_over_6(from_ints({0, 1}), 6);
    CHECK(x_over_6 + x_over_6 == RationalPolynomial(from_ints({0, 1}), 3));
}

TEST_CASE("rational text round trip") {
    RationalPolynomial r(from_ints({2, -4, 2}), 2);
    CHECK(r.to_string() == "1 + -2*x + 1*x^2");
    RationalPolynomial s(from_ints({-1, 3, -3, 1}), 6);
    CHECK(s.to_string() == "(-1 + 3*x + -3*x^2 + 1*x^3)/6");
    CHECK(RationalPolynomial::parse(s.to_string()) == s);
    CHECK(RationalPolynomial::parse(r.to_string()) == r);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> den(1, 60);
        RationalPolynomial v(random_poly(rng), den(rng));
        CHECK(RationalPolynomial::parse(v.to_string()) == v);
    }
}

TEST_SUITE_END();
