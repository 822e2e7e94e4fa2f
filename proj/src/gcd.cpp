#include "higgs/gcd.hpp"

#include <atomic>
#include <stdexcept>

namespace higgs {
namespace {

std::atomic<unsigned long> gCalls{0}, gHeuristic{0}, gPrs{0};

// Per-level size limit for the evaluated images in the heuristic gcd.
constexpr std::size_t kHeuristicBitLimit = std::size_t{1} << 21;

Poly positive(Poly p) { return p.sign() < 0 ? -p : p; }

Monomial withDegree(Monomial m) {
    unsigned s = 0;
    for (int i = 1; i < kLanes; ++i) s += m.e[i];
    m.e[kDegreeLane] = static_cast<std::uint16_t>(s);
    return m;
}

Monomial laneMin(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 1; i < kLanes; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return withDegree(r);
}

int highestLane(std::uint32_t mask) { return 31 - __builtin_clz(mask); }

// Symmetric residue of c modulo m, in (-m/2, m/2].
mpz_class symmetricMod(const mpz_class& c, const mpz_class& m, const mpz_class& half) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    return r;
}

std::optional<Poly> interpolate(const Poly& image, const mpz_class& xi, Var x, unsigned maxDegree) {
    const mpz_class half = xi / 2;
    Poly h = image;
    std::vector<Monomial> mons;
    std::vector<mpz_class> coefs;
    for (unsigned i = 0; !h.isZero(); ++i) {
        if (i > maxDegree) return std::nullopt;
        std::vector<Monomial> gm;
        std::vector<mpz_class> gc;
        for (std::size_t k = 0; k < h.size(); ++k) {
            mpz_class r = symmetricMod(h.coefficients()[k], xi, half);
            if (r == 0) continue;
            gm.push_back(h.monomials()[k]);
            gc.push_back(r);
            Monomial m = h.monomials()[k];
            m.set(x, i);
            mons.push_back(m);
            coefs.push_back(std::move(r));
        }
        h -= Poly::fromTerms(std::move(gm), std::move(gc));
        h = h.divideContent(xi);
    }
    return Poly::fromTerms(std::move(mons), std::move(coefs));
}

Poly primitivePart(const Poly& p) {
    const mpz_class c = p.content();
    return c == 1 ? p : p.divideContent(c);
}

// Heuristic gcd of primitive polynomials with equal variable sets.
std::optional<Poly> heuristicGcd(const Poly& a, const Poly& b) {
    const std::uint32_t mask = a.variableMask();
    const Var x = Var::fromLane(highestLane(mask));
    const unsigned da = a.degree(x), db = b.degree(x);
    mpz_class norm = std::min(a.maxNorm(), b.maxNorm());
    mpz_class xi = 2 * norm + 29;
    const std::size_t normBits = mpz_sizeinbase(std::max(a.maxNorm(), b.maxNorm()).get_mpz_t(), 2);
    for (int attempt = 0; attempt < 6; ++attempt) {
        const std::size_t bits = mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(da, db) + normBits;
        if (bits > kHeuristicBitLimit) return std::nullopt;
        const Poly A = a.evaluate(x, xi), B = b.evaluate(x, xi);
        if (!A.isZero() && !B.isZero()) {
            const Poly G = gcd(A, B);
            if (auto cand = interpolate(G, xi, x, std::min(da, db))) {
                Poly g = positive(primitivePart(*cand));
                if (!g.isZero() && a.isDivisibleBy(g) && b.isDivisibleBy(g)) return g;
            }
        }
        xi = xi * 73794 / 27011 + 1;
    }
    return std::nullopt;
}

Poly xPower(Var x, unsigned k) { return Poly::variable(x, k); }

// Content with respect to x: gcd of the coefficients in x.
Poly contentIn(const Poly& p, Var x) {
    Poly c;
    for (const auto& coef : p.coefficientsIn(x)) {
        if (coef.isZero()) continue;
        c = c.isZero() ? positive(coef) : gcd(c, coef);
        if (c.isOne()) break;
    }
    return c;
}

Poly primitiveIn(const Poly& p, Var x) {
    const Poly c = contentIn(p, x);
    if (c.isOne()) return p;
    return *p.divExact(c);
}

Poly prem(Poly r, const Poly& b, Var x) {
    const unsigned db = b.degree(x);
    const Poly lcb = b.coefficient(x, db);
    while (!r.isZero() && r.degree(x) >= db) {
        const unsigned dr = r.degree(x);
        const Poly lcr = r.coefficient(x, dr);
        r = lcb * r - lcr * xPower(x, dr - db) * b;
    }
    return r;
}

// Primitive polynomial remainder sequence, recursive over the coefficient ring.
Poly prsGcd(const Poly& a, const Poly& b) {
    const Var x = Var::fromLane(highestLane(a.variableMask() & b.variableMask()));
    const Poly ca = contentIn(a, x), cb = contentIn(b, x);
    const Poly cg = gcd(ca, cb);
    Poly p = *a.divExact(ca), s = *b.divExact(cb);
    if (p.degree(x) < s.degree(x)) std::swap(p, s);
    Poly g;
    for (;;) {
        Poly r = prem(p, s, x);
        if (r.isZero()) {
            g = s;
            break;
        }
        if (r.degree(x) == 0) {
            g = Poly(1);
            break;
        }
        p = std::move(s);
        s = primitiveIn(r, x);
    }
    return positive(cg * primitiveIn(g, x));
}

Poly gcdPrimitive(const Poly& a, const Poly& b) {
    if (a == b || a == -b) return positive(a);
    const std::uint32_t ma = a.variableMask(), mb = b.variableMask();
    if (ma != mb) {
        // A variable present in only one operand: the gcd divides every
        // coefficient of that operand with respect to it.
        const std::uint32_t only = ma ^ mb;
        const Var x = Var::fromLane(highestLane(only));
        const Poly& with = (ma & (1u << x.lane())) ? a : b;
        const Poly& without = (ma & (1u << x.lane())) ? b : a;
        Poly g = without;
        for (const auto& c : with.coefficientsIn(x)) {
            if (c.isZero()) continue;
            g = gcd(g, c);
            if (g.isConstant()) return Poly(1);
        }
        return positive(g);
    }
    if (b.size() <= a.size()) {
        if (a.isDivisibleBy(b)) return positive(b);
    } else if (b.isDivisibleBy(a)) {
        return positive(a);
    }
    if (auto g = heuristicGcd(a, b)) {
        gHeuristic.fetch_add(1, std::memory_order_relaxed);
        return *g;
    }
    gPrs.fetch_add(1, std::memory_order_relaxed);
    return prsGcd(a, b);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    gCalls.fetch_add(1, std::memory_order_relaxed);
    if (a.isZero()) return positive(b);
    if (b.isZero()) return positive(a);
    const mpz_class ca = a.content(), cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.isConstant() || b.isConstant()) return Poly(cg);

    const Monomial mina = withDegree(a.minDegrees()), minb = withDegree(b.minDegrees());
    const Monomial mg = laneMin(mina, minb);
    const Poly ap = a.divideContent(ca).unshifted(mina);
    const Poly bp = b.divideContent(cb).unshifted(minb);
    Poly core = (ap.isConstant() || bp.isConstant()) ? Poly(1) : gcdPrimitive(ap, bp);
    return core.scaled(cg).shifted(mg);
}

GcdResult gcdWithCofactors(const Poly& a, const Poly& b) {
    GcdResult r;
    r.g = gcd(a, b);
    if (r.g.isZero()) throw std::domain_error("gcd(0, 0) has no cofactors");
    r.ca = *a.divExact(r.g);
    r.cb = *b.divExact(r.g);
    return r;
}

GcdStats gcdStats() { return GcdStats{gCalls.load(), gHeuristic.load(), gPrs.load()}; }

}  // namespace higgs
