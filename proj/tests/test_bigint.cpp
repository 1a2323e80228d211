#include "doctest.h"
#include "plateau/bigint.hpp"

using namespace plateau;

TEST_SUITE_BEGIN("bigint");

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(8) == 40320);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("double factorial") {
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(2) == 3);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(double_factorial_odd(4) == 105);
    CHECK(double_factorial_odd(5) == 945);
    CHECK(double_factorial_odd(7) == 135135);
    CHECK(double_factorial_odd(8) == 2027025);
    CHECK(double_factorial_odd(12) == BigInt("316234143225"));
}

TEST_CASE("binomial basics") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(0, 0) == 1);
    for (unsigned n = 0; n <= 10; ++n) CHECK(binomial(n, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
}

TEST_CASE("binomial agrees with the Pascal triangle") {
    // independent oracle: additive Pascal recursion
    std::vector<std::vector<BigInt>> pascal{{BigInt(1)}};
    for (int n = 1; n <= 24; ++n) {
        std::vector<BigInt> row{BigInt(1)};
        for (int k = 1; k < n; ++k) row.push_back(pascal.back()[k - 1] + pascal.back()[k]);
        row.push_back(1);
        pascal.push_back(row);
    }
    for (int n = 0; n <= 24; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(static_cast<unsigned>(n), k) == pascal[n][k]);
}

TEST_CASE("pow_int") {
    CHECK(pow_int(2, 0) == 1);
    CHECK(pow_int(2, 10) == 1024);
    CHECK(pow_int(3, 5) == 243);
    CHECK(pow_int(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
    CHECK(pow_int(BigInt(-2), 3) == -8);
}

TEST_CASE("decimal round trip") {
    for (const char* s : {"0", "1", "-1", "2027025", "-316234143225",
                          "15511210043330985984000000"}) {
        BigInt v(s);
        CHECK(v.str() == s);
    }
}

TEST_SUITE_END();
