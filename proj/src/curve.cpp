#include "higgs/curve.hpp"

#include <stdexcept>

namespace higgs {

bool isPrime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool isPrimePower(long n) {
    if (n < 2) return false;
    long p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

CurveModel CurveModel::symbolic(int genus) {
    if (genus < 0 || 2 * genus > kMaxE) throw std::invalid_argument("genus must be in [0, " + std::to_string(kMaxE / 2) + "]");
    CurveModel c;
    c.genus_ = genus;
    return c;
}

CurveModel CurveModel::numeric(int genus, std::vector<long> coeffs, long q0) {
    CurveModel c = symbolic(genus);
    if (coeffs.size() != static_cast<std::size_t>(2 * genus + 1))
        throw std::invalid_argument("zeta numerator needs " + std::to_string(2 * genus + 1) + " coefficients");
    if (coeffs.front() != 1) throw std::invalid_argument("zeta numerator must satisfy P(0) = 1");
    if (coeffs.back() == 0) throw std::invalid_argument("zeta numerator must have degree 2g");
    if (!isPrimePower(q0)) throw std::invalid_argument("q0 must be a prime power");
    c.numeric_ = true;
    c.coeffs_ = std::move(coeffs);
    c.q0_ = q0;
    return c;
}

std::vector<long> CurveModel::eValues() const {
    std::vector<long> e;
    for (int k = 1; k <= numE(); ++k) e.push_back(k % 2 == 0 ? coeffs_[k] : -coeffs_[k]);
    return e;
}

Poly CurveModel::zetaNumerator(Var x) const {
    Poly p(1);
    for (int k = 1; k <= numE(); ++k) {
        const Poly t = Poly::variable(Var::e(k)) * Poly::variable(x, static_cast<unsigned>(k));
        if (k % 2 == 0) p += t;
        else p -= t;
    }
    return p;
}

ScalarExpr CurveModel::numeratorAt(const ScalarExpr& x) const {
    ScalarExpr r(1);
    ScalarExpr xk(1);
    for (int k = 1; k <= numE(); ++k) {
        xk *= x;
        const ScalarExpr t = scalar::e(k) * xk;
        if (k % 2 == 0) r += t;
        else r -= t;
    }
    return r;
}

MvRatFun CurveModel::zetaClosed() const {
    const Poly z = Poly::variable(Var::z(1));
    const Poly den = (Poly(1) - z) * (Poly(1) - Poly::variable(Var::v(), 2) * z);
    return MvRatFun(RatFun::normalize(zetaNumerator(Var::z(1)), den), 1);
}

MvRatFun CurveModel::zetaTilde() const {
    return MvRatFun(RatFun::variable(Var::z(1)).pow(1 - genus_), 1) * zetaClosed();
}

ScalarExpr CurveModel::zetaAt(const ScalarExpr& x) const {
    const ScalarExpr den = (ScalarExpr(1) - x) * (ScalarExpr(1) - scalar::q() * x);
    if (den.isZero()) throw std::domain_error("zeta function evaluated at a pole");
    return numeratorAt(x) / den;
}

ScalarExpr CurveModel::zetaStarAt(int m) const {
    if (m < 0) throw std::domain_error("Z* is only needed at q^{-1-m} with m >= 0");
    if (m == 0) return scalar::minusVPow(2 - 2 * genus_) * picZero() / (scalar::q() - 1);
    return zetaAt(scalar::minusVPow(-2 - 2 * m));
}

ScalarExpr CurveModel::pointCount() const {
    ScalarExpr x = scalar::q() + 1;
    if (genus_ > 0) x -= scalar::e(1);
    return x;
}

ScalarExpr CurveModel::picZero() const { return numeratorAt(ScalarExpr(1)); }

QuadraticValue CurveModel::specialize(const ScalarExpr& x) const {
    if (!numeric_) throw std::logic_error("specialize needs a numeric curve");
    return scalar::specialize(x, q0_, eValues());
}

std::string CurveModel::describe() const {
    std::string s = "genus " + std::to_string(genus_);
    if (!numeric_) return s + " (symbolic)";
    s += ", q0 = " + std::to_string(q0_) + ", P(z) =";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s += " " + std::to_string(coeffs_[k]);
    return s;
}

}  // namespace higgs
