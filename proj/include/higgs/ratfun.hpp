#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "higgs/poly.hpp"

namespace higgs {

/// Exact rational function num/den in Z[v, e1..e8, z1..z6].
///
/// Canonical form: gcd(num, den) = 1 over Z (so no common integer content
/// either) and den has a positive leading coefficient. Zero is 0/1. Two
/// values are equal as rational functions iff they are structurally equal.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RatFun(const Poly& p) : num_(p), den_(1) {}
    static RatFun rational(const mpq_class& c);
    /// Reduces num/den to canonical form; throws "division by zero" if den = 0.
    static RatFun normalize(const Poly& num, const Poly& den);
    static RatFun variable(Var x) { return RatFun(Poly::variable(x)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isPolynomial() const { return den_.isOne(); }
    bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
    /// The value as a rational number; only valid when isConstant().
    mpq_class constantValue() const;
    /// True when no z variable occurs.
    bool isScalar() const;
    std::uint32_t variableMask() const { return num_.variableMask() | den_.variableMask(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& b);
    RatFun& operator-=(const RatFun& b);
    RatFun& operator*=(const RatFun& b);
    RatFun& operator/=(const RatFun& b);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const;
    /// Integer power; negative exponents invert (error on zero).
    RatFun pow(long k) const;

    /// Replaces x by the rational function r; throws if the result's
    /// denominator vanishes identically.
    RatFun substitute(Var x, const RatFun& r) const;

    /// Rendering "num/den" with expanded polynomials; den = 1 is omitted and
    /// multi-term parts are parenthesized.
    std::string toString() const;
    /// Parses +, -, *, /, ^ (integer exponents), parentheses, integers and
    /// the variables v, e<k>, z<j>.
    static RatFun parse(std::string_view text);

private:
    RatFun(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

/// Coefficient field of the library: rational functions in v and e1..e2g
/// (q is always v^2). Values never contain z variables.
using ScalarExpr = RatFun;

}  // namespace higgs
