#include "plateau/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

const BigInt kZero = 0;

// Exponents beyond this are assumed to be input mistakes, not math.
constexpr long kMaxExponent = 1'000'000;

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_spaces() {
        while (!done() && text[pos] == ' ') ++pos;
    }

    void expect(char c, const char* what) {
        if (done() || text[pos] != c)
            throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    bool try_consume(std::string_view s) {
        if (text.substr(pos, s.size()) == s) {
            pos += s.size();
            return true;
        }
        return false;
    }

    BigInt signed_integer() {
        std::size_t start = pos;
        if (!done() && text[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    long unsigned_long(const char* what) {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(std::string("expected ") + what, start);
        std::string s(text.substr(start, pos - start));
        if (s.size() > 7) throw ParseError(std::string(what) + " too large", start);
        long v = std::stol(s);
        if (v > kMaxExponent) throw ParseError(std::string(what) + " too large", start);
        return v;
    }
};

Polynomial div_exact(const Polynomial& p, const BigInt& d) {
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) out.push_back(c / d);
    return Polynomial(std::move(out));
}

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
    std::vector<BigInt> v;
    if (c != 0) v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(BigInt c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    if (c == 0) return Polynomial();
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

const BigInt& Polynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(d)];
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<BigInt> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) out.push_back(coeffs_[d] * d);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed(int n) const {
    if (degree() > n) throw std::invalid_argument("reversal degree smaller than polynomial degree");
    if (is_zero()) return Polynomial();
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        out[static_cast<std::size_t>(n) - d] = coeffs_[d];
    return Polynomial(std::move(out));
}

BigInt Polynomial::content() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

BigInt Polynomial::coefficient_sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
}

Polynomial Polynomial::operator-() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.push_back(-c);
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()), BigInt(0));
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = p.coeff(static_cast<int>(d)) + q.coeff(static_cast<int>(d));
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const BigInt& c, const Polynomial& p) {
    if (c == 0) return Polynomial();
    std::vector<BigInt> out;
    out.reserve(p.coeffs_.size());
    for (const BigInt& pc : p.coeffs_) out.push_back(c * pc);
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[d].str();
        if (d == 1)
            out += "*x";
        else if (d > 1)
            out += "*x^" + std::to_string(d);
    }
    return out;
}

Polynomial Polynomial::parse(std::string_view text) {
    Scanner sc{text};
    sc.skip_spaces();
    std::vector<BigInt> coeffs;
    bool saw_explicit_zero = false;
    while (true) {
        std::size_t term_pos = sc.pos;
        BigInt c = sc.signed_integer();
        long deg = 0;
        if (sc.try_consume("*x")) {
            deg = 1;
            if (!sc.done() && sc.peek() == '^') {
                ++sc.pos;
                deg = sc.unsigned_long("exponent");
            }
        }
        if (c == 0) {
            if (deg != 0) throw ParseError("zero coefficient in term", term_pos);
            saw_explicit_zero = true;
        } else {
            if (static_cast<std::size_t>(deg) >= coeffs.size())
                coeffs.resize(static_cast<std::size_t>(deg) + 1, BigInt(0));
            if (coeffs[static_cast<std::size_t>(deg)] != 0)
                throw ParseError("duplicate degree in polynomial", term_pos);
            coeffs[static_cast<std::size_t>(deg)] = std::move(c);
        }
        sc.skip_spaces();
        if (sc.done()) break;
        sc.expect('+', "'+'");
        sc.skip_spaces();
    }
    if (saw_explicit_zero && !coeffs.empty())
        throw ParseError("zero term in nonzero polynomial", 0);
    return Polynomial(std::move(coeffs));
}

void BiPolynomial::add_term(int deg_x, int deg_q, const BigInt& c) {
    if (deg_x < 0 || deg_q < 0) throw std::invalid_argument("negative degree in BiPolynomial term");
    if (c == 0) return;
    Key key{deg_x, deg_q};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const BigInt& BiPolynomial::coeff(int deg_x, int deg_q) const {
    auto it = terms_.find(Key{deg_x, deg_q});
    return it == terms_.end() ? kZero : it->second;
}

int BiPolynomial::max_deg_q() const {
    int m = 0;
    for (const auto& [key, c] : terms_) m = std::max(m, key.second);
    return m;
}

Polynomial BiPolynomial::eval_q(const BigInt& q) const {
    std::vector<BigInt> qpow{BigInt(1)};
    std::vector<BigInt> out;
    for (const auto& [key, c] : terms_) {
        while (static_cast<int>(qpow.size()) <= key.second) qpow.push_back(qpow.back() * q);
        if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1, BigInt(0));
        out[static_cast<std::size_t>(key.first)] += c * qpow[static_cast<std::size_t>(key.second)];
    }
    return Polynomial(std::move(out));
}

BiPolynomial operator+(const BiPolynomial& p, const BiPolynomial& q) {
    BiPolynomial out = p;
    for (const auto& [key, c] : q.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BiPolynomial operator*(const BiPolynomial& p, const BiPolynomial& q) {
    BiPolynomial out;
    for (const auto& [kp, cp] : p.terms_)
        for (const auto& [kq, cq] : q.terms_)
            out.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
    return out;
}

std::string BiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*x^" + std::to_string(key.first) + "*q^" + std::to_string(key.second);
    }
    return out;
}

BiPolynomial BiPolynomial::parse(std::string_view text) {
    Scanner sc{text};
    sc.skip_spaces();
    BiPolynomial out;
    bool saw_explicit_zero = false;
    while (true) {
        std::size_t term_pos = sc.pos;
        BigInt c = sc.signed_integer();
        if (c == 0) {
            saw_explicit_zero = true;
        } else {
            if (!sc.try_consume("*x^")) throw ParseError("expected '*x^'", sc.pos);
            long a = sc.unsigned_long("x exponent");
            if (!sc.try_consume("*q^")) throw ParseError("expected '*q^'", sc.pos);
            long b = sc.unsigned_long("q exponent");
            if (out.coeff(static_cast<int>(a), static_cast<int>(b)) != 0)
                throw ParseError("duplicate term in bi-polynomial", term_pos);
            out.add_term(static_cast<int>(a), static_cast<int>(b), c);
        }
        sc.skip_spaces();
        if (sc.done()) break;
        sc.expect('+', "'+'");
        sc.skip_spaces();
    }
    if (saw_explicit_zero && !out.is_zero())
        throw ParseError("zero term in nonzero bi-polynomial", 0);
    return out;
}

Polynomial bipoly_scaled_reciprocal_q(const BiPolynomial& p, int k, int n) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (p.max_deg_q() > n)
        throw std::invalid_argument("q-degree exceeds n; substitution would not be integral");
    std::vector<BigInt> kpow(static_cast<std::size_t>(n) + 1);
    kpow[0] = 1;
    for (int i = 1; i <= n; ++i) kpow[static_cast<std::size_t>(i)] = kpow[static_cast<std::size_t>(i - 1)] * k;
    std::vector<BigInt> out;
    for (const auto& [key, c] : p.terms()) {
        if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1, BigInt(0));
        out[static_cast<std::size_t>(key.first)] += c * kpow[static_cast<std::size_t>(n - key.second)];
    }
    return Polynomial(std::move(out));
}

RationalPolynomial::RationalPolynomial(Polynomial num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    reduce();
}

void RationalPolynomial::reduce() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_.content(), den_);
    if (g > 1) {
        num_ = div_exact(num_, g);
        den_ /= g;
    }
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    return RationalPolynomial(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    return RationalPolynomial(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalPolynomial::to_string() const {
    if (den_ == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/" + den_.str();
}

RationalPolynomial RationalPolynomial::parse(std::string_view text) {
    if (!text.empty() && text.front() == '(') {
        std::size_t close = text.find(')');
        if (close == std::string_view::npos) throw ParseError("unterminated '('", 0);
        if (close + 1 >= text.size() || text[close + 1] != '/')
            throw ParseError("expected '/' after ')'", close + 1);
        Polynomial num = Polynomial::parse(text.substr(1, close - 1));
        std::string_view den_text = text.substr(close + 2);
        Scanner sc{den_text};
        BigInt den = sc.signed_integer();
        sc.skip_spaces();
        if (!sc.done()) throw ParseError("trailing characters after denominator", close + 2 + sc.pos);
        if (den <= 0) throw ParseError("denominator must be positive", close + 2);
        return RationalPolynomial(std::move(num), std::move(den));
    }
    return RationalPolynomial(Polynomial::parse(text));
}

}  // namespace plateau
