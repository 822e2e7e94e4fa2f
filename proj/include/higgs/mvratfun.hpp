#pragma once

#include <string>
#include <vector>

#include "higgs/ratfun.hpp"

namespace higgs {

/// Rational function in z_1..z_n with ScalarExpr coefficients, stored as a
/// single canonical fraction over Z[v, e, z].
class MvRatFun {
public:
    MvRatFun() = default;
    MvRatFun(RatFun f, int n);
    static MvRatFun z(int j, int n) { return MvRatFun(RatFun::variable(Var::z(j)), n); }
    static MvRatFun scalar(const ScalarExpr& c, int n) { return MvRatFun(c, n); }

    const RatFun& value() const { return f_; }
    int arity() const { return n_; }
    bool isZero() const { return f_.isZero(); }
    /// True when no z variable occurs.
    bool isScalar() const { return f_.isScalar(); }

    MvRatFun operator-() const { return MvRatFun(-f_, n_); }
    friend MvRatFun operator+(const MvRatFun& a, const MvRatFun& b) { return MvRatFun(a.f_ + b.f_, join(a, b)); }
    friend MvRatFun operator-(const MvRatFun& a, const MvRatFun& b) { return MvRatFun(a.f_ - b.f_, join(a, b)); }
    friend MvRatFun operator*(const MvRatFun& a, const MvRatFun& b) { return MvRatFun(a.f_ * b.f_, join(a, b)); }
    friend MvRatFun operator/(const MvRatFun& a, const MvRatFun& b) { return MvRatFun(a.f_ / b.f_, join(a, b)); }
    friend bool operator==(const MvRatFun& a, const MvRatFun& b) { return a.f_ == b.f_; }
    friend bool operator!=(const MvRatFun& a, const MvRatFun& b) { return !(a == b); }

    /// z_var := expr. expr must not contain z_var; throws if the result's
    /// denominator vanishes identically.
    MvRatFun substitute(int var, const MvRatFun& expr) const;

    /// Coefficient of (z_var - center)^{-1} in the Laurent expansion in z_var,
    /// of f or of f/z_var when withDlog. Poles of any order; 0 if regular.
    MvRatFun residueAt(int var, const MvRatFun& center, bool withDlog) const;

    /// Taylor coefficients 0..order at z_var = 0 of a function of z_var alone.
    /// Throws "pole at z=0" if the expansion has negative powers.
    std::vector<ScalarExpr> expandAtZero(int order, int var = 1) const;

    std::string toString() const { return f_.toString(); }

private:
    static int join(const MvRatFun& a, const MvRatFun& b) { return std::max(a.n_, b.n_); }
    RatFun f_;
    int n_ = 0;
};

}  // namespace higgs
