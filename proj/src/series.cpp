#include "plateau/series.hpp"

#include <stdexcept>
#include <string>

#include "plateau/errors.hpp"

namespace plateau {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<RationalPolynomial> coeffs)
    : TruncatedSeries(order) {
    if (coeffs.size() > coeffs_.size())
        throw std::invalid_argument("more coefficients than order+1");
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs_[j] = std::move(coeffs[j]);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = RationalPolynomial(Polynomial::constant(1));
    return s;
}

TruncatedSeries TruncatedSeries::constant(RationalPolynomial c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(RationalPolynomial c, int degree, int order) {
    TruncatedSeries s(order);
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
    return s;
}

const RationalPolynomial& TruncatedSeries::coeff(int j) const {
    if (j < 0 || j > order_) throw std::out_of_range("series coefficient index");
    return coeffs_[static_cast<std::size_t>(j)];
}

void TruncatedSeries::set_coeff(int j, RationalPolynomial c) {
    if (j < 0 || j > order_) throw std::out_of_range("series coefficient index");
    coeffs_[static_cast<std::size_t>(j)] = std::move(c);
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.order_ != t.order_) throw std::invalid_argument("series order mismatch");
    TruncatedSeries out(s.order_);
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = s.coeffs_[j] + t.coeffs_[j];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.order_ != t.order_) throw std::invalid_argument("series order mismatch");
    TruncatedSeries out(s.order_);
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = s.coeffs_[j] - t.coeffs_[j];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.order_ != t.order_) throw std::invalid_argument("series order mismatch");
    TruncatedSeries out(s.order_);
    for (int i = 0; i <= s.order_; ++i) {
        if (s.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= s.order_; ++j) {
            if (t.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] =
                out.coeffs_[static_cast<std::size_t>(i + j)] +
                s.coeffs_[static_cast<std::size_t>(i)] * t.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& arg) {
    if (!arg.coeff(0).is_zero())
        throw std::invalid_argument("series_exp requires zero constant term");
    int m = arg.order();
    TruncatedSeries out(m);
    out.set_coeff(0, RationalPolynomial(Polynomial::constant(1)));
    for (int j = 1; j <= m; ++j) {
        RationalPolynomial acc;
        for (int i = 1; i <= j; ++i) {
            if (arg.coeff(i).is_zero()) continue;
            RationalPolynomial term = arg.coeff(i) * out.coeff(j - i);
            acc = acc + RationalPolynomial(BigInt(i) * term.numerator(), term.denominator());
        }
        out.set_coeff(j, RationalPolynomial(acc.numerator(), acc.denominator() * j));
    }
    return out;
}

TruncatedSeries series_pow(const TruncatedSeries& s, int k) {
    if (k < 1) throw std::invalid_argument("series_pow exponent must be positive");
    TruncatedSeries result = TruncatedSeries::one(s.order());
    TruncatedSeries base = s;
    int e = k;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int j = 0; j <= order_; ++j) {
        if (j > 0) out += "; ";
        out += "z^" + std::to_string(j) + "=(" + coeffs_[static_cast<std::size_t>(j)].to_string() + ")";
    }
    return out;
}

TruncatedSeries TruncatedSeries::parse(std::string_view text) {
    std::vector<RationalPolynomial> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::string prefix = "z^" + std::to_string(coeffs.size()) + "=(";
        if (text.substr(pos, prefix.size()) != prefix)
            throw ParseError("expected '" + prefix + "'", pos);
        pos += prefix.size();
        std::size_t close = text.find("); ", pos);
        bool last = close == std::string_view::npos;
        if (last) {
            if (text.empty() || text.back() != ')')
                throw ParseError("unterminated coefficient", pos);
            close = text.size() - 1;
        }
        coeffs.push_back(RationalPolynomial::parse(text.substr(pos, close - pos)));
        if (last) break;
        pos = close + 3;
    }
    int order = static_cast<int>(coeffs.size()) - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace plateau
