#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "higgs/ratfun.hpp"

namespace higgs {

namespace scalar {

inline ScalarExpr v() { return ScalarExpr::variable(Var::v()); }
inline ScalarExpr q() { return ScalarExpr(Poly::variable(Var::v(), 2)); }
inline ScalarExpr e(int k) { return ScalarExpr::variable(Var::e(k)); }
/// (-v)^k for any integer k.
ScalarExpr minusVPow(long k);

/// Images of e_1..e_numE under the n-th Adams operation: e_k of the n-th
/// powers of the Weil numbers, via Newton's identities. Cached.
const std::vector<Poly>& adamsImages(int numE, unsigned n);

/// Ring map v -> v^n, e_k -> e_k(alpha^n) for a curve with numE = 2g
/// parameters. Throws for n = 0.
ScalarExpr adams(const ScalarExpr& x, int n, int numE);
Poly adams(const Poly& p, unsigned n, int numE);

/// Substitutes integers for e_1..e_k (k = values.size()); throws
/// "unknown parameter" if x uses a higher e, "specialization pole" if the
/// denominator vanishes.
ScalarExpr substituteE(const ScalarExpr& x, const std::vector<long>& values);

/// Imposes the functional-equation relations of a genus-g zeta numerator,
/// e_{2g-k} = q^{g-k} e_k, so that only e_1..e_g remain.
ScalarExpr weilReduce(const ScalarExpr& x, int genus);

}  // namespace scalar

/// Exact element a + b*sqrt(q0) of Q(sqrt(q0)); b = 0 when q0 is a square.
struct QuadraticValue {
    mpq_class a;
    mpq_class b;
    long q0 = 1;

    static QuadraticValue rational(const mpq_class& x, long q0) { return {x, 0, q0}; }

    friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
        return x.a == y.a && x.b == y.b && x.q0 == y.q0;
    }
    friend bool operator!=(const QuadraticValue& x, const QuadraticValue& y) { return !(x == y); }
    QuadraticValue& operator+=(const QuadraticValue& y);
    QuadraticValue& operator*=(const QuadraticValue& y);
    friend QuadraticValue operator+(QuadraticValue x, const QuadraticValue& y) { return x += y; }
    friend QuadraticValue operator*(QuadraticValue x, const QuadraticValue& y) { return x *= y; }
    bool isRational() const { return b == 0; }
    std::string toString() const;
};

namespace scalar {

/// Evaluates at v = sqrt(q0) and e_k = values[k-1]. Errors as substituteE.
QuadraticValue specialize(const ScalarExpr& x, long q0, const std::vector<long>& values);

/// Integer square root if q0 is a perfect square.
std::optional<long> exactSqrt(long q0);

}  // namespace scalar

}  // namespace higgs
