#pragma once

// Rational functions kept as num * monomial / prod(factor^mult). The residue
// engine works in this form so that substitutions and residues never need a
// multivariate gcd; only the final one-variable coefficients are reduced.

#include <array>
#include <vector>

#include "higgs/poly.hpp"
#include "higgs/ratfun.hpp"

namespace higgs::detail {

/// Signed exponent vector (lane 0 unused).
using Exps = std::array<int, kLanes>;

/// mono(off) * p with a signed monomial offset.
struct LPoly {
    Poly p;
    Exps off{};
};

LPoly operator*(const LPoly& a, const LPoly& b);
LPoly operator+(const LPoly& a, const LPoly& b);

/// Applies x -> mono(image) (the image may contain x itself) and pulls the
/// monomial content out into the offset, so the polynomial part is free of
/// monomial factors.
LPoly mapPoly(const Poly& p, int lane, const Exps& image);

struct Factor {
    Poly p;
    int mult = 1;
};

class Factored {
public:
    Poly num{1};
    Exps shift{};
    std::vector<Factor> den;

    Factored() = default;
    explicit Factored(Poly n) : num(std::move(n)) {}

    bool isZero() const { return num.isZero(); }
    Factored& operator*=(const Factored& o);
    void divideBy(const Poly& p, int mult = 1);
    void mulMonomial(int lane, int k) { shift[lane] += k; }

    /// Substitutes the variable in `lane` by mono(image) everywhere.
    void mapVariable(int lane, const Exps& image);

    /// Res_{z_k = q^{-1} z_{k-1}} f dz_k / z_k with the engine's orientation
    /// (each step contributes a factor -1). Handles poles of any order.
    Factored residueAtQLocus(int k) const;

    /// Removes monomial content, fixes factor signs and merges repeated
    /// factors.
    void tidy();

    RatFun toRatFun() const;

    /// Taylor coefficients at 0 in the variable `lane`; every other lane
    /// must be v or e. Throws "pole at z=0".
    std::vector<RatFun> expandAtZero(int lane, int order) const;
};

}  // namespace higgs::detail
