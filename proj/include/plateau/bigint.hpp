#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace plateau {

// Every count and coefficient in the engine is exact; no floating point
// is used anywhere in the computational paths.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

// (2n-1)!! = 1*3*5*...*(2n-1), the common size of the order-n families.
BigInt double_factorial_odd(unsigned n);

// C(n,k); zero when k < 0 or k > n.
BigInt binomial(unsigned n, long long k);

BigInt pow_int(const BigInt& base, unsigned exp);

}  // namespace plateau
