#include "plateau/bigint.hpp"

namespace plateau {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial_odd(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

BigInt binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return 0;
    unsigned kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt r = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact at every step: r is C(n-kk+i, i)
    }
    return r;
}

BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return r;
}

}  // namespace plateau
