#include "higgs/scalar.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace higgs {
namespace scalar {

ScalarExpr minusVPow(long k) {
    const long sign = (k % 2 == 0) ? 1 : -1;
    if (k >= 0) return ScalarExpr(Poly::variable(Var::v(), static_cast<unsigned>(k)).scaled(sign));
    return ScalarExpr::normalize(Poly(sign), Poly::variable(Var::v(), static_cast<unsigned>(-k)));
}

namespace {

std::vector<Poly> computeAdamsImages(int numE, unsigned n) {
    const unsigned top = static_cast<unsigned>(numE) * n;
    std::vector<Poly> e(static_cast<std::size_t>(numE) + 1);
    e[0] = Poly(1);
    for (int k = 1; k <= numE; ++k) e[k] = Poly::variable(Var::e(k));

    // Power sums of the roots from Newton's identities.
    std::vector<Poly> p(top + 1);
    for (unsigned m = 1; m <= top; ++m) {
        Poly s;
        for (unsigned i = 1; i < m && i <= static_cast<unsigned>(numE); ++i) {
            const Poly t = e[i] * p[m - i];
            if (i % 2 == 1) s += t;
            else s -= t;
        }
        if (m <= static_cast<unsigned>(numE)) {
            const Poly t = e[m].scaled(m);
            if (m % 2 == 1) s += t;
            else s -= t;
        }
        p[m] = std::move(s);
    }

    // Back from the power sums p_{n i} to elementary symmetric functions.
    std::vector<Poly> out(static_cast<std::size_t>(numE) + 1);
    out[0] = Poly(1);
    for (int k = 1; k <= numE; ++k) {
        Poly s;
        for (int i = 1; i <= k; ++i) {
            const Poly t = out[k - i] * p[static_cast<unsigned>(i) * n];
            if (i % 2 == 1) s += t;
            else s -= t;
        }
        out[k] = s.divideContent(k);
    }
    out.erase(out.begin());
    return out;
}

}  // namespace

const std::vector<Poly>& adamsImages(int numE, unsigned n) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, std::vector<Poly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({numE, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(numE, n), computeAdamsImages(numE, n)).first;
    return it->second;
}

Poly adams(const Poly& p, unsigned n, int numE) {
    if (n == 0) throw std::invalid_argument("adams: n must be positive");
    if (n == 1) return p;
    const std::uint32_t mask = p.variableMask();
    bool hasE = false;
    for (int k = 1; k <= kMaxE; ++k) {
        if (mask & (1u << Var::e(k).lane())) {
            if (k > numE) throw std::invalid_argument("adams: e" + std::to_string(k) + " outside genus context");
            hasE = true;
        }
    }
    if (!hasE) return p.stretchV(n);

    const auto& img = adamsImages(numE, n);
    std::map<std::pair<int, unsigned>, Poly> powers;
    auto power = [&](int k, unsigned j) -> const Poly& {
        auto it = powers.find({k, j});
        if (it == powers.end()) it = powers.emplace(std::make_pair(k, j), img[k - 1].pow(j)).first;
        return it->second;
    };
    Poly result;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Monomial& m = p.monomials()[i];
        Monomial rest;
        rest.set(Var::v(), m[Var::v()] * n);
        for (int j = 1; j <= kMaxZ; ++j) rest.set(Var::z(j), m[Var::z(j)]);
        Poly t = Poly::term(rest, p.coefficients()[i]);
        for (int k = 1; k <= numE; ++k) {
            const unsigned d = m[Var::e(k)];
            if (d > 0) t = t * power(k, d);
        }
        result += t;
    }
    return result;
}

ScalarExpr adams(const ScalarExpr& x, int n, int numE) {
    if (n <= 0) throw std::invalid_argument("adams: n must be positive");
    if (n == 1) return x;
    const auto un = static_cast<unsigned>(n);
    return ScalarExpr::normalize(adams(x.num(), un, numE), adams(x.den(), un, numE));
}

ScalarExpr substituteE(const ScalarExpr& x, const std::vector<long>& values) {
    const std::uint32_t mask = x.variableMask();
    for (int k = static_cast<int>(values.size()) + 1; k <= kMaxE; ++k)
        if (mask & (1u << Var::e(k).lane())) throw std::invalid_argument("unknown parameter e" + std::to_string(k));
    Poly n = x.num(), d = x.den();
    for (std::size_t k = 0; k < values.size(); ++k) {
        const Var ek = Var::e(static_cast<int>(k) + 1);
        n = n.evaluate(ek, values[k]);
        d = d.evaluate(ek, values[k]);
    }
    if (d.isZero()) throw std::domain_error("specialization pole");
    return ScalarExpr::normalize(n, d);
}

ScalarExpr weilReduce(const ScalarExpr& x, int genus) {
    Poly n = x.num(), d = x.den();
    for (int k = 0; k < genus; ++k) {
        const Poly ek = k == 0 ? Poly(1) : Poly::variable(Var::e(k));
        const Poly image = Poly::variable(Var::v(), static_cast<unsigned>(2 * (genus - k))) * ek;
        n = n.substitute(Var::e(2 * genus - k), image);
        d = d.substitute(Var::e(2 * genus - k), image);
    }
    return ScalarExpr::normalize(n, d);
}

std::optional<long> exactSqrt(long q0) {
    if (q0 < 0) return std::nullopt;
    mpz_class s, r;
    mpz_sqrtrem(s.get_mpz_t(), r.get_mpz_t(), mpz_class(q0).get_mpz_t());
    if (r != 0) return std::nullopt;
    return s.get_si();
}

namespace {

// A + B*v modulo v^2 - q0 for a polynomial in v alone.
std::pair<mpz_class, mpz_class> reduceModQuadratic(const Poly& p, long q0) {
    mpz_class a = 0, b = 0, pw;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const unsigned k = p.monomials()[i][Var::v()];
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(q0).get_mpz_t(), k / 2);
        if (k % 2 == 0) a += p.coefficients()[i] * pw;
        else b += p.coefficients()[i] * pw;
    }
    return {a, b};
}

}  // namespace

QuadraticValue specialize(const ScalarExpr& x, long q0, const std::vector<long>& values) {
    const ScalarExpr y = substituteE(x, values);
    if (auto s = exactSqrt(q0)) {
        const mpz_class n = y.num().evaluate(Var::v(), *s).constantTerm();
        const mpz_class d = y.den().evaluate(Var::v(), *s).constantTerm();
        if (d == 0) throw std::domain_error("specialization pole");
        mpq_class r(n, d);
        r.canonicalize();
        return QuadraticValue{r, 0, q0};
    }
    const auto [an, bn] = reduceModQuadratic(y.num(), q0);
    const auto [ad, bd] = reduceModQuadratic(y.den(), q0);
    const mpz_class norm = ad * ad - q0 * bd * bd;
    if (norm == 0) throw std::domain_error("specialization pole");
    mpq_class ra(an * ad - q0 * bn * bd, norm), rb(bn * ad - an * bd, norm);
    ra.canonicalize();
    rb.canonicalize();
    return QuadraticValue{ra, rb, q0};
}

}  // namespace scalar

QuadraticValue& QuadraticValue::operator+=(const QuadraticValue& y) {
    if (q0 != y.q0) throw std::invalid_argument("mixed quadratic fields");
    a += y.a;
    b += y.b;
    return *this;
}

QuadraticValue& QuadraticValue::operator*=(const QuadraticValue& y) {
    if (q0 != y.q0) throw std::invalid_argument("mixed quadratic fields");
    const mpq_class na = a * y.a + b * y.b * q0;
    const mpq_class nb = a * y.b + b * y.a;
    a = na;
    b = nb;
    return *this;
}

std::string QuadraticValue::toString() const {
    if (b == 0) return a.get_str();
    return a.get_str() + (b < 0 ? "" : "+") + b.get_str() + "*sqrt(" + std::to_string(q0) + ")";
}

}  // namespace higgs
