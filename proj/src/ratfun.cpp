#include "higgs/ratfun.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "higgs/gcd.hpp"

namespace higgs {

RatFun RatFun::rational(const mpq_class& c) {
    return RatFun(Poly(mpz_class(c.get_num())), Poly(mpz_class(c.get_den())), 0);
}

RatFun RatFun::normalize(const Poly& num, const Poly& den) {
    if (den.isZero()) throw std::domain_error("division by zero");
    if (num.isZero()) return RatFun();
    if (den.isOne()) return RatFun(num, den, 0);
    auto r = gcdWithCofactors(num, den);
    if (r.cb.sign() < 0) return RatFun(-r.ca, -r.cb, 0);
    return RatFun(std::move(r.ca), std::move(r.cb), 0);
}

mpq_class RatFun::constantValue() const {
    if (!isConstant()) throw std::logic_error("not a constant: " + toString());
    mpq_class r(num_.constantTerm(), den_.constantTerm());
    r.canonicalize();
    return r;
}

bool RatFun::isScalar() const { return (variableMask() >> kFirstZLane) == 0; }

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun& RatFun::operator+=(const RatFun& b) {
    if (b.isZero()) return *this;
    if (isZero()) return *this = b;
    if (den_.isOne() && b.den_.isOne()) {
        num_ += b.num_;
        return *this;
    }
    if (den_ == b.den_) return *this = normalize(num_ + b.num_, den_);
    // a/b + c/d with g = gcd(b, d): only g can share factors with the sum.
    auto r = gcdWithCofactors(den_, b.den_);
    Poly t = num_ * r.cb + b.num_ * r.ca;
    if (t.isZero()) return *this = RatFun();
    if (r.g.isOne()) {
        Poly d = den_ * b.den_;
        *this = RatFun(std::move(t), std::move(d), 0);
        return *this;
    }
    auto s = gcdWithCofactors(t, r.g);
    Poly d = r.ca * b.den_;
    if (!s.g.isOne()) d = *d.divExact(s.g);
    if (d.sign() < 0) {
        *this = RatFun(-s.ca, -d, 0);
    } else {
        *this = RatFun(std::move(s.ca), std::move(d), 0);
    }
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& b) { return *this += -b; }

RatFun& RatFun::operator*=(const RatFun& b) {
    if (isZero() || b.isZero()) return *this = RatFun();
    if (den_.isOne() && b.den_.isOne()) {
        num_ = num_ * b.num_;
        return *this;
    }
    auto g1 = gcdWithCofactors(num_, b.den_);
    auto g2 = gcdWithCofactors(b.num_, den_);
    Poly n = g1.ca * g2.ca;
    Poly d = g2.cb * g1.cb;
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RatFun RatFun::inverse() const {
    if (isZero()) throw std::domain_error("division by zero");
    if (num_.sign() < 0) return RatFun(-den_, -num_, 0);
    return RatFun(den_, num_, 0);
}

RatFun& RatFun::operator/=(const RatFun& b) { return *this *= b.inverse(); }

RatFun RatFun::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    // Powers of coprime polynomials stay coprime.
    Poly n = num_.pow(static_cast<unsigned>(k));
    Poly d = den_.pow(static_cast<unsigned>(k));
    return RatFun(std::move(n), std::move(d), 0);
}

namespace {

// Sum_k c_k p^k s^(m-k), i.e. s^m * c(p/s), for the coefficients c of x.
Poly homogenized(const Poly& f, Var x, const Poly& p, const Poly& s, unsigned m) {
    const auto coeffs = f.coefficientsIn(x);
    Poly r;
    Poly pk(1);
    std::vector<Poly> spow(m + 1);
    spow[0] = Poly(1);
    for (unsigned i = 1; i <= m; ++i) spow[i] = spow[i - 1] * s;
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].isZero()) r += coeffs[k] * pk * spow[m - k];
        if (k + 1 < coeffs.size()) pk = pk * p;
    }
    return r;
}

}  // namespace

RatFun RatFun::substitute(Var x, const RatFun& r) const {
    const unsigned mn = num_.degree(x), md = den_.degree(x);
    if (mn == 0 && md == 0) return *this;
    if (r.isPolynomial()) {
        const Poly d = den_.substitute(x, r.num_);
        if (d.isZero()) throw std::domain_error("substitution hits a pole");
        return normalize(num_.substitute(x, r.num_), d);
    }
    const unsigned m = std::max(mn, md);
    const Poly n = homogenized(num_, x, r.num_, r.den_, m);
    const Poly d = homogenized(den_, x, r.num_, r.den_, m);
    if (d.isZero()) throw std::domain_error("substitution hits a pole");
    return normalize(n, d);
}

std::string RatFun::toString() const {
    const std::string n = num_.toString(), d = den_.toString();
    if (den_.isOne()) return n;
    // A single-term denominator needs no parentheses only when it is an
    // integer or a bare power of one variable.
    const bool bareDen = den_.size() == 1 && d.find('*') == std::string::npos;
    return (num_.size() > 1 ? "(" + n + ")" : n) + "/" + (bareDen ? d : "(" + d + ")");
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.toString(); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFun parseAll() {
        RatFun r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse \"" + std::string(s_) + "\" at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    RatFun expr() {
        RatFun r = term();
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }
    RatFun term() {
        RatFun r = unary();
        for (;;) {
            if (accept('*')) r *= unary();
            else if (accept('/')) r /= unary();
            else return r;
        }
    }
    RatFun unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    RatFun power() {
        RatFun base = atom();
        if (!accept('^')) return base;
        bool neg = false;
        if (accept('(')) {
            neg = accept('-');
            const long k = std::stol(digits());
            if (!accept(')')) fail("expected ')'");
            return base.pow(neg ? -k : k);
        }
        neg = accept('-');
        const long k = std::stol(digits());
        return base.pow(neg ? -k : k);
    }
    RatFun atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFun r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Poly(mpz_class(digits())));
        if (c == 'v') {
            ++pos_;
            return RatFun::variable(Var::v());
        }
        if (c == 'q') {
            ++pos_;
            return RatFun(Poly::variable(Var::v(), 2));
        }
        if (c == 'e' || c == 'z') {
            ++pos_;
            const int k = std::stoi(digits());
            return RatFun::variable(c == 'e' ? Var::e(k) : Var::z(k));
        }
        fail("unknown symbol '" + std::string(1, c) + "'");
    }
};

}  // namespace

RatFun RatFun::parse(std::string_view text) { return Parser(text).parseAll(); }

}  // namespace higgs
