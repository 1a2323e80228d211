#pragma once

#include <string>
#include <vector>

#include "plateau/polynomial.hpp"

namespace plateau {

// Formal power series in z truncated at a fixed order m: exactly m+1
// coefficients, each an exact rational polynomial in x. The order is
// always chosen explicitly by the caller.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<RationalPolynomial> coeffs);

    static TruncatedSeries one(int order);
    static TruncatedSeries constant(RationalPolynomial c, int order);
    // c * z^degree, zero elsewhere.
    static TruncatedSeries monomial(RationalPolynomial c, int degree, int order);

    int order() const { return order_; }
    const RationalPolynomial& coeff(int j) const;
    void set_coeff(int j, RationalPolynomial c);

    friend TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
    friend TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
    // Cauchy product truncated at the shared order; throws on order mismatch.
    friend TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // "z^0=(c0); z^1=(c1); ..."; the order is the number of entries minus 1.
    std::string to_string() const;
    static TruncatedSeries parse(std::string_view text);

private:
    int order_;
    std::vector<RationalPolynomial> coeffs_;
};

// exp of a series with zero constant term, via the derivative recurrence
// m*e_m = sum_{j=1..m} j*l_j*e_{m-j}; throws if the constant term is nonzero.
TruncatedSeries series_exp(const TruncatedSeries& arg);

// s^k for k >= 1 by binary exponentiation.
TruncatedSeries series_pow(const TruncatedSeries& s, int k);

}  // namespace plateau
