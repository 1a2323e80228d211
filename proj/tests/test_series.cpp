#include <random>

#include "doctest.h"
#include "plateau/enumerate.hpp"
#include "plateau/series.hpp"

using namespace plateau;

namespace {

Polynomial from_ints(std::vector<long long> v) {
    std::vector<BigInt> c(v.begin(), v.end());
    return Polynomial(std::move(c));
}

RationalPolynomial rp(std::vector<long long> num, long long den = 1) {
    return RationalPolynomial(from_ints(std::move(num)), den);
}

// 1 + z truncated at `order`
TruncatedSeries one_plus_z(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    s.set_coeff(1, rp({1}));
    return s;
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
    std::uniform_int_distribution<int> deg(-1, 2), coeff(-4, 4), den(1, 6);
    TruncatedSeries s(order);
    for (int j = zero_constant ? 1 : 0; j <= order; ++j) {
        int d = deg(rng);
        std::vector<BigInt> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
        s.set_coeff(j, RationalPolynomial(Polynomial(std::move(c)), den(rng)));
    }
    return s;
}

// ascent-plateau distribution over the order-n words, counted directly;
// this is the oracle the residual check below is measured against
Polynomial brute_force_ap_polynomial(int n) {
    if (n == 0) return Polynomial::constant(1);
    std::vector<BigInt> counts;
    for_each_stirling(n, [&](const StirlingPermutation& sp) {
        int ap = ascent_plateau_count(sp);
        if (static_cast<std::size_t>(ap) >= counts.size()) counts.resize(ap + 1, BigInt(0));
        counts[static_cast<std::size_t>(ap)] += 1;
    });
    return Polynomial(std::move(counts));
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("shape") {
    TruncatedSeries s(3);
    CHECK(s.order() == 3);
    CHECK(s.coeff(0).is_zero());
    CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
}

TEST_CASE("multiplication") {
    std::mt19937 rng(3);
    TruncatedSeries s = random_series(rng, 4, false);
    CHECK(s * TruncatedSeries::one(4) == s);

    TruncatedSeries plus = one_plus_z(2);
    TruncatedSeries minus = TruncatedSeries::one(2);
    minus.set_coeff(1, rp({-1}));
    TruncatedSeries expect(2);
    expect.set_coeff(0, rp({1}));
    expect.set_coeff(2, rp({-1}));
    CHECK(plus * minus == expect);  // 1 - z^2

    CHECK_THROWS_AS(one_plus_z(2) * one_plus_z(3), std::invalid_argument);
}

TEST_CASE("exp") {
    CHECK(series_exp(TruncatedSeries(4)) == TruncatedSeries::one(4));

    // exp(2z(1-x)): coefficient of z^2 is (2(1-x))^2/2 = 2 - 4x + 2x^2
    TruncatedSeries arg = TruncatedSeries::monomial(rp({2, -2}), 1, 4);
    TruncatedSeries e = series_exp(arg);
    CHECK(e.coeff(0) == rp({1}));
    CHECK(e.coeff(1) == rp({2, -2}));
    CHECK(e.coeff(2) == rp({2, -4, 2}));

    // exp(z(x-1)): coefficient of z^3 is (x-1)^3/6
    TruncatedSeries e2 = series_exp(TruncatedSeries::monomial(rp({-1, 1}), 1, 3));
    CHECK(e2.coeff(3) == rp({-1, 3, -3, 1}, 6));

    CHECK_THROWS_AS(series_exp(TruncatedSeries::one(3)), std::invalid_argument);
}

TEST_CASE("exp of a negated argument telescopes") {
    TruncatedSeries arg = TruncatedSeries::monomial(rp({2, -2}), 1, 6);
    TruncatedSeries neg = TruncatedSeries::monomial(rp({-2, 2}), 1, 6);
    CHECK(series_exp(arg) * series_exp(neg) == TruncatedSeries::one(6));
}

TEST_CASE("pow") {
    TruncatedSeries s = one_plus_z(2);
    CHECK(series_pow(s, 1) == s);
    TruncatedSeries sq(2);
    sq.set_coeff(0, rp({1}));
    sq.set_coeff(1, rp({2}));
    sq.set_coeff(2, rp({1}));
    CHECK(series_pow(s, 2) == sq);
    CHECK_THROWS_AS(series_pow(s, 0), std::invalid_argument);
}

TEST_CASE("exp is a homomorphism") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> ord(0, 8);
    for (int trial = 0; trial < 25; ++trial) {
        int order = ord(rng);
        TruncatedSeries l = random_series(rng, order, true);
        TruncatedSeries m = random_series(rng, order, true);
        CHECK(series_exp(l + m) == series_exp(l) * series_exp(m));
    }
}

TEST_CASE("residual of the squared series against brute-force counts") {
    // (sum_{n<=6} f_n z^n/n!)^2 * (1 - x e^(2z(1-x))) == 1 - x through z^6,
    // where f_n is the brute-force ascent-plateau distribution
    const int order = 6;
    TruncatedSeries s(order);
    for (int j = 0; j <= order; ++j)
        s.set_coeff(j, RationalPolynomial(brute_force_ap_polynomial(j),
                                          factorial(static_cast<unsigned>(j))));
    TruncatedSeries e = series_exp(TruncatedSeries::monomial(rp({2, -2}), 1, order));
    TruncatedSeries x_term = TruncatedSeries::constant(rp({0, 1}), order);
    TruncatedSeries residual = s * s * (TruncatedSeries::one(order) - x_term * e);
    CHECK(residual == TruncatedSeries::constant(rp({1, -1}), order));
}

TEST_CASE("text form") {
    TruncatedSeries s(1);
    s.set_coeff(0, rp({1}));
    s.set_coeff(1, rp({1, -1}, 2));
    CHECK(s.to_string() == "z^0=(1); z^1=((1 + -1*x)/2)");
    CHECK(TruncatedSeries::parse(s.to_string()) == s);
}

TEST_CASE("text round trip") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> ord(0, 5);
        TruncatedSeries s = random_series(rng, ord(rng), false);
        CHECK(TruncatedSeries::parse(s.to_string()) == s);
    }
}

TEST_SUITE_END();
