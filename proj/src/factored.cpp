#include "factored.hpp"

#include <limits>
#include <stdexcept>

namespace higgs::detail {

namespace {

Monomial monoFrom(const Exps& e) {
    Monomial m;
    unsigned total = 0;
    for (int i = 1; i < kLanes; ++i) {
        if (e[i] < 0 || e[i] > 0xffff) throw std::overflow_error("exponent out of range");
        m.e[i] = static_cast<std::uint16_t>(e[i]);
        total += static_cast<unsigned>(e[i]);
    }
    if (total > 0xffff) throw std::overflow_error("degree out of range");
    m.e[kDegreeLane] = static_cast<std::uint16_t>(total);
    return m;
}

Exps positivePart(const Exps& e) {
    Exps r{};
    for (int i = 1; i < kLanes; ++i) r[i] = std::max(e[i], 0);
    return r;
}

Exps negativePart(const Exps& e) {
    Exps r{};
    for (int i = 1; i < kLanes; ++i) r[i] = std::max(-e[i], 0);
    return r;
}

void addScaled(Exps& a, const Exps& b, int k) {
    for (int i = 1; i < kLanes; ++i) a[i] += k * b[i];
}

bool anyNonzero(const Exps& e) {
    for (int i = 1; i < kLanes; ++i)
        if (e[i] != 0) return true;
    return false;
}

/// Splits p = mono(content) * rest.
Exps stripContent(Poly& p) {
    Exps off{};
    if (p.isZero()) return off;
    const Monomial md = p.minDegrees();
    for (int i = 1; i < kLanes; ++i) off[i] = md.e[i];
    if (anyNonzero(off)) p = p.unshifted(monoFrom(off));
    return off;
}

Poly withMonomial(const Poly& p, const Exps& e) { return anyNonzero(e) ? p.shifted(monoFrom(e)) : p; }

}  // namespace

LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r{a.p * b.p, a.off};
    addScaled(r.off, b.off, 1);
    return r;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
    if (a.p.isZero()) return b;
    if (b.p.isZero()) return a;
    LPoly r;
    Exps da{}, db{};
    for (int i = 1; i < kLanes; ++i) {
        r.off[i] = std::min(a.off[i], b.off[i]);
        da[i] = a.off[i] - r.off[i];
        db[i] = b.off[i] - r.off[i];
    }
    r.p = withMonomial(a.p, da) + withMonomial(b.p, db);
    return r;
}

LPoly mapPoly(const Poly& p, int lane, const Exps& image) {
    LPoly r;
    if (p.isZero()) return r;
    std::vector<Exps> ex(p.size());
    Exps lo;
    lo.fill(std::numeric_limits<int>::max());
    for (std::size_t t = 0; t < p.size(); ++t) {
        const Monomial& m = p.monomials()[t];
        const int k = m.e[lane];
        for (int i = 1; i < kLanes; ++i) ex[t][i] = i == lane ? 0 : m.e[i];
        addScaled(ex[t], image, k);
        for (int i = 1; i < kLanes; ++i) lo[i] = std::min(lo[i], ex[t][i]);
    }
    std::vector<Monomial> mons(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
        for (int i = 1; i < kLanes; ++i) ex[t][i] -= lo[i];
        mons[t] = monoFrom(ex[t]);
    }
    r.p = Poly::fromTerms(std::move(mons), p.coefficients());
    for (int i = 1; i < kLanes; ++i) r.off[i] = lo[i];
    r.off[0] = 0;
    // Cancellation can leave more monomial content behind.
    addScaled(r.off, stripContent(r.p), 1);
    return r;
}

Factored& Factored::operator*=(const Factored& o) {
    num *= o.num;
    addScaled(shift, o.shift, 1);
    den.insert(den.end(), o.den.begin(), o.den.end());
    return *this;
}

void Factored::divideBy(const Poly& p, int mult) {
    if (p.isZero()) throw std::domain_error("division by zero");
    den.push_back({p, mult});
}

void Factored::mapVariable(int lane, const Exps& image) {
    const int s = shift[lane];
    shift[lane] = 0;
    addScaled(shift, image, s);
    LPoly n = mapPoly(num, lane, image);
    num = std::move(n.p);
    addScaled(shift, n.off, 1);
    for (auto& f : den) {
        LPoly m = mapPoly(f.p, lane, image);
        if (m.p.isZero()) throw std::domain_error("substitution hits a pole");
        f.p = std::move(m.p);
        addScaled(shift, m.off, -f.mult);
    }
    tidy();
}

Factored Factored::residueAtQLocus(int k) const {
    const Var zk = Var::z(k), zp = Var::z(k - 1);
    const int lane = zk.lane();
    Exps image{};
    image[kVLane] = -2;
    image[zp.lane()] = 1;
    // L = v^2 z_k - z_{k-1} = v^2 t with t = z_k - q^{-1} z_{k-1}.
    const Poly L = Poly::term(Monomial::of(Var::v(), 2) * Monomial::of(zk), 1) - Poly::variable(zp);

    Factored f = *this;
    f.shift[lane] -= 1;  // dz_k / z_k
    int order = 0;
    for (auto& fac : f.den) {
        while (mapPoly(fac.p, lane, image).p.isZero()) {
            auto q = fac.p.divExact(L);
            if (!q) throw std::logic_error("factor vanishing on the residue locus is not divisible by its equation");
            fac.p = std::move(*q);
            order += fac.mult;
        }
    }
    if (order == 0 || f.isZero()) return Factored(Poly());

    if (order == 1) {
        f.mapVariable(lane, image);
        f.shift[kVLane] -= 2;
        f.num = -f.num;
        f.tidy();
        return f;
    }

    // Pole of order k: Res = v^{-2k} [t^{k-1}] A(t) / B(t).
    Poly A = f.num, B(1);
    const int s = f.shift[lane];
    f.shift[lane] = 0;
    if (s > 0) A = A * Poly::variable(zk, static_cast<unsigned>(s));
    if (s < 0) B = Poly::variable(zk, static_cast<unsigned>(-s));
    for (const auto& fac : f.den) B *= fac.p.pow(static_cast<unsigned>(fac.mult));
    std::vector<LPoly> a(order), b(order);
    for (int i = 0; i < order; ++i) {
        a[i] = mapPoly(A.hasse(zk, static_cast<unsigned>(i)), lane, image);
        b[i] = mapPoly(B.hasse(zk, static_cast<unsigned>(i)), lane, image);
    }
    if (b[0].p.isZero()) throw std::domain_error("denominator vanishes identically on the residue locus");
    std::vector<LPoly> S(order);
    std::vector<LPoly> b0pow(order);
    b0pow[0] = LPoly{Poly(1), {}};
    for (int i = 1; i < order; ++i) b0pow[i] = b0pow[i - 1] * b[0];
    S[0] = LPoly{Poly(1), {}};
    for (int i = 1; i < order; ++i) {
        LPoly acc;
        for (int j = 1; j <= i; ++j) acc = acc + b[j] * S[i - j] * b0pow[j - 1];
        acc.p = -acc.p;
        S[i] = acc;
    }
    LPoly R;
    for (int i = 0; i < order; ++i) R = R + a[order - 1 - i] * S[i] * b0pow[order - 1 - i];
    Factored out(-R.p);
    out.shift = f.shift;
    addScaled(out.shift, R.off, 1);
    addScaled(out.shift, b[0].off, -order);
    out.shift[kVLane] -= 2 * order;
    out.den.push_back({b[0].p, order});
    out.tidy();
    return out;
}

void Factored::tidy() {
    if (num.isZero()) {
        shift = {};
        den.clear();
        return;
    }
    addScaled(shift, stripContent(num), 1);
    std::vector<Factor> kept;
    for (auto& f : den) {
        if (f.mult == 0) continue;
        addScaled(shift, stripContent(f.p), -f.mult);
        if (f.p.sign() < 0) {
            f.p = -f.p;
            if (f.mult % 2 != 0) num = -num;
        }
        if (f.p.isOne()) continue;
        bool merged = false;
        for (auto& g : kept)
            if (g.p == f.p) {
                g.mult += f.mult;
                merged = true;
                break;
            }
        if (!merged) kept.push_back(std::move(f));
    }
    den = std::move(kept);
}

RatFun Factored::toRatFun() const {
    Poly d = withMonomial(Poly(1), negativePart(shift));
    for (const auto& f : den) d *= f.p.pow(static_cast<unsigned>(f.mult));
    return RatFun::normalize(withMonomial(num, positivePart(shift)), d);
}

std::vector<RatFun> Factored::expandAtZero(int lane, int order) const {
    std::vector<RatFun> out(static_cast<std::size_t>(order) + 1);
    if (num.isZero()) return out;
    const Var x = Var::fromLane(lane);
    for (int i = kFirstZLane; i < kLanes; ++i)
        if (i != lane && shift[i] != 0) throw std::invalid_argument("expandAtZero needs a function of one variable");

    Poly n = num;
    Exps sh = shift;
    addScaled(sh, stripContent(n), 1);
    // Factors free of x stay out of the series; the others are multiplied
    // into F, whose constant term F0 = prod f0^m drives the recursion.
    Poly F(1);
    std::vector<Factor> known;  // denominator pieces per unit of F0, and the x-free ones
    std::vector<Factor> scalars;
    for (const auto& f : den) {
        Poly p = f.p;
        addScaled(sh, stripContent(p), -f.mult);
        if (p.degree(x) == 0) {
            scalars.push_back({p, f.mult});
            continue;
        }
        F *= p.pow(static_cast<unsigned>(f.mult));
        Poly p0 = p.coefficient(x, 0);
        if (p0.sign() < 0) p0 = -p0;
        if (!p0.isConstant()) known.push_back({p0, f.mult});
    }
    const int s = sh[lane];
    if (s < 0) throw std::domain_error("pole at z=0");
    sh[lane] = 0;
    const Poly scaleNum = withMonomial(Poly(1), positivePart(sh));
    const Poly scaleDen = withMonomial(Poly(1), negativePart(sh));

    const auto N = n.coefficientsIn(x), Fc = F.coefficientsIn(x);
    const Poly& F0 = Fc[0];
    if (F0.isZero()) throw std::domain_error("pole at z=0");
    const int len = order - s + 1;
    if (len <= 0) return out;
    // The integer part of F0 is handled by the final normalization.
    Poly scalarDen = scaleDen;
    for (const auto& f : scalars) scalarDen *= f.p.pow(static_cast<unsigned>(f.mult));

    // 1/F = sum_j c_j / F0^{j+1} x^j.
    std::vector<Poly> c(len), F0pow(len + 1);
    F0pow[0] = Poly(1);
    for (int i = 1; i <= len; ++i) F0pow[i] = F0pow[i - 1] * F0;
    c[0] = Poly(1);
    for (int j = 1; j < len; ++j) {
        Poly acc;
        for (int i = 1; i <= j && i < static_cast<int>(Fc.size()); ++i)
            if (!Fc[i].isZero()) acc += Fc[i] * c[j - i] * F0pow[i - 1];
        c[j] = -acc;
    }
    for (int j = 0; j < len; ++j) {
        Poly acc;
        for (int k = 0; k <= j && k < static_cast<int>(N.size()); ++k)
            if (!N[k].isZero()) acc += N[k] * c[j - k] * F0pow[k];
        acc *= scaleNum;
        // Cancel the known denominator pieces by trial division so that the
        // final gcd only sees what is left.
        Poly rest = F0pow[j + 1];
        for (const auto& f : known)
            for (int m = 0; m < f.mult * (j + 1); ++m) {
                auto qa = acc.divExact(f.p);
                if (!qa) break;
                acc = std::move(*qa);
                rest = *rest.divExact(f.p);
            }
        Poly sden = scalarDen;
        for (const auto& f : scalars)
            for (int m = 0; m < f.mult; ++m) {
                if (f.p.isConstant()) break;
                auto qa = acc.divExact(f.p);
                if (!qa) break;
                acc = std::move(*qa);
                sden = *sden.divExact(f.p);
            }
        out[static_cast<std::size_t>(j + s)] = RatFun::normalize(acc, rest * sden);
    }
    return out;
}

}  // namespace higgs::detail
