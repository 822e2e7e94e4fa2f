#pragma once

#include <string>
#include <vector>

#include "higgs/mvratfun.hpp"
#include "higgs/scalar.hpp"

namespace higgs {

/// A smooth projective curve of genus g over F_q, seen through its zeta
/// numerator P(z) = 1 + sum_k (-1)^k e_k z^k.
///
/// All algebra is done with the formal parameters e_1..e_2g. A numeric curve
/// only records integer coefficients of P and q0 for final specialization:
/// substituting them early would break the Adams operations, which must see
/// e_k as symmetric functions of the Weil numbers.
class CurveModel {
public:
    static CurveModel symbolic(int genus);
    /// coeffs = (c_0, ..., c_2g) with P(z) = sum c_k z^k, c_0 = 1, c_2g != 0.
    static CurveModel numeric(int genus, std::vector<long> coeffs, long q0);

    int genus() const { return genus_; }
    int numE() const { return 2 * genus_; }
    bool isNumeric() const { return numeric_; }
    long q0() const { return q0_; }
    const std::vector<long>& numeratorCoefficients() const { return coeffs_; }
    /// e_k = (-1)^k c_k for a numeric curve.
    std::vector<long> eValues() const;

    /// P(x) as a polynomial in Z[e][x].
    Poly zetaNumerator(Var x) const;
    ScalarExpr numeratorAt(const ScalarExpr& x) const;

    /// P(z) / ((1 - z)(1 - v^2 z)) in z_1.
    MvRatFun zetaClosed() const;
    /// z^{1-g} Z_X(z).
    MvRatFun zetaTilde() const;
    /// Z_X at a scalar point; throws at the poles 1 and q^{-1}.
    ScalarExpr zetaAt(const ScalarExpr& x) const;
    /// Z*_X(q^{-1-m}) for m >= 0: the plain value for m > 0 and the
    /// regularized value q^{1-g} [Pic0] / (q - 1) for m = 0.
    ScalarExpr zetaStarAt(int m) const;

    /// [X] = 1 + q - e_1.
    ScalarExpr pointCount() const;
    /// [Pic0] = P(1).
    ScalarExpr picZero() const;

    /// Value at v = sqrt(q0), e = eValues(); numeric curves only.
    QuadraticValue specialize(const ScalarExpr& x) const;

    std::string describe() const;

private:
    int genus_ = 0;
    bool numeric_ = false;
    std::vector<long> coeffs_;
    long q0_ = 0;
};

/// True for p^k with p prime, k >= 1.
bool isPrimePower(long n);
bool isPrime(long n);

}  // namespace higgs
