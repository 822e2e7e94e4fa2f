#include "higgs/mvratfun.hpp"

#include <stdexcept>

namespace higgs {

MvRatFun::MvRatFun(RatFun f, int n) : f_(std::move(f)), n_(n) {
    if (n < 0 || n > kMaxZ) throw std::out_of_range("MvRatFun arity out of range");
    const std::uint32_t mask = f_.variableMask();
    for (int j = n + 1; j <= kMaxZ; ++j)
        if (mask & (1u << Var::z(j).lane()))
            throw std::invalid_argument("variable z" + std::to_string(j) + " outside arity " + std::to_string(n));
}

MvRatFun MvRatFun::substitute(int var, const MvRatFun& expr) const {
    const Var x = Var::z(var);
    if (expr.f_.variableMask() & (1u << x.lane())) throw std::invalid_argument("substitution reintroduces its variable");
    return MvRatFun(f_.substitute(x, expr.f_), std::max(n_, expr.n_));
}

MvRatFun MvRatFun::residueAt(int var, const MvRatFun& center, bool withDlog) const {
    const Var x = Var::z(var);
    if (center.f_.variableMask() & (1u << x.lane())) throw std::invalid_argument("residue center depends on its variable");
    const int n = std::max(n_, center.n_);
    if (f_.isZero()) return MvRatFun(RatFun(), n);
    const Poly& A = f_.num();
    const Poly B = withDlog ? f_.den() * Poly::variable(x) : f_.den();
    if (B.degree(x) == 0 && !withDlog) return MvRatFun(RatFun(), n);

    // Taylor coefficients in t = z_var - center.
    auto taylor = [&](const Poly& p, unsigned i) { return RatFun(p.hasse(x, i)).substitute(x, center.f_); };
    unsigned k = 0;
    std::vector<RatFun> b;
    for (;; ++k) {
        if (k > B.degree(x)) throw std::domain_error("denominator vanishes identically");
        RatFun bk = taylor(B, k);
        if (!bk.isZero()) {
            b.push_back(std::move(bk));
            break;
        }
    }
    if (k == 0) return MvRatFun(RatFun(), n);
    // Residue = [t^{k-1}] A(t) / (b_k + b_{k+1} t + ...).
    for (unsigned j = 1; j < k; ++j) b.push_back(taylor(B, k + j));
    const RatFun inv = b[0].inverse();
    std::vector<RatFun> s(k);
    s[0] = inv;
    for (unsigned i = 1; i < k; ++i) {
        RatFun acc;
        for (unsigned j = 1; j <= i; ++j) acc += b[j] * s[i - j];
        s[i] = -(acc * inv);
    }
    RatFun res;
    for (unsigned i = 0; i < k; ++i) {
        const RatFun a = taylor(A, k - 1 - i);
        if (!a.isZero()) res += a * s[i];
    }
    return MvRatFun(res, n);
}

std::vector<ScalarExpr> MvRatFun::expandAtZero(int order, int var) const {
    const Var x = Var::z(var);
    const std::uint32_t zmask = (f_.variableMask() >> kFirstZLane) << kFirstZLane;
    if (zmask & ~(1u << x.lane())) throw std::invalid_argument("expandAtZero needs a function of one variable");
    std::vector<ScalarExpr> out(static_cast<std::size_t>(order) + 1);
    if (f_.isZero()) return out;
    const auto an = f_.num().coefficientsIn(x), bd = f_.den().coefficientsIn(x);
    std::size_t a0 = 0, b0 = 0;
    while (an[a0].isZero()) ++a0;
    while (bd[b0].isZero()) ++b0;
    if (b0 > a0) throw std::domain_error("pole at z=0");
    const std::size_t shift = a0 - b0;
    const RatFun inv = RatFun(bd[b0]).inverse();
    std::vector<RatFun> c;
    for (std::size_t j = 0; j + shift <= static_cast<std::size_t>(order); ++j) {
        RatFun acc = a0 + j < an.size() ? RatFun(an[a0 + j]) : RatFun();
        for (std::size_t i = 1; i <= j && b0 + i < bd.size(); ++i)
            if (!bd[b0 + i].isZero()) acc -= RatFun(bd[b0 + i]) * c[j - i];
        c.push_back(acc * inv);
        out[j + shift] = c.back();
    }
    return out;
}

}  // namespace higgs
