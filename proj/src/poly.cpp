#include "higgs/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "higgs/simd/exponent_kernels.hpp"

namespace higgs {

std::string Var::name() const {
    if (isV()) return "v";
    if (isE()) return "e" + std::to_string(eIndex());
    return "z" + std::to_string(zIndex());
}

Poly::Poly(long c) {
    if (c != 0) {
        mons_.emplace_back();
        coefs_.emplace_back(c);
    }
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) {
        mons_.emplace_back();
        coefs_.push_back(c);
    }
}

Poly Poly::variable(Var x, unsigned k) { return term(Monomial::of(x, k), 1); }

Poly Poly::term(const Monomial& m, const mpz_class& c) {
    Poly p;
    if (c != 0) {
        p.mons_.push_back(m);
        p.coefs_.push_back(c);
    }
    return p;
}

Poly Poly::fromTerms(std::vector<Monomial> mons, std::vector<mpz_class> coefs) {
    std::vector<std::size_t> idx(mons.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return compare(mons[a], mons[b]) > 0; });
    Poly p;
    p.mons_.reserve(idx.size());
    p.coefs_.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size();) {
        const Monomial& m = mons[idx[k]];
        mpz_class c = std::move(coefs[idx[k]]);
        std::size_t j = k + 1;
        while (j < idx.size() && mons[idx[j]] == m) c += coefs[idx[j++]];
        if (c != 0) {
            p.mons_.push_back(m);
            p.coefs_.push_back(std::move(c));
        }
        k = j;
    }
    return p;
}

mpz_class Poly::constantTerm() const {
    if (!isZero() && mons_.back().isOne()) return coefs_.back();
    return 0;
}

unsigned Poly::degree(Var x) const {
    unsigned d = 0;
    for (const auto& m : mons_) d = std::max<unsigned>(d, m[x]);
    return d;
}

Monomial Poly::degrees() const { return isZero() ? Monomial{} : simd::kernels().lane_max(mons_); }

Monomial Poly::minDegrees() const { return isZero() ? Monomial{} : simd::kernels().lane_min(mons_); }

std::uint32_t Poly::variableMask() const {
    const Monomial d = degrees();
    std::uint32_t mask = 0;
    for (int i = 1; i < kLanes; ++i)
        if (d.e[i] > 0) mask |= 1u << i;
    return mask;
}

mpz_class Poly::maxNorm() const {
    mpz_class r = 0;
    for (const auto& c : coefs_)
        if (mpz_cmpabs(c.get_mpz_t(), r.get_mpz_t()) > 0) r = abs(c);
    return r;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& c : coefs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coefs_) c = -c;
    return r;
}

namespace {

// Merges two sorted term lists with coefficient sign s for b.
void mergeInto(std::vector<Monomial>& om, std::vector<mpz_class>& oc, const std::vector<Monomial>& am,
               const std::vector<mpz_class>& ac, const std::vector<Monomial>& bm, const std::vector<mpz_class>& bc,
               int s) {
    om.reserve(am.size() + bm.size());
    oc.reserve(am.size() + bm.size());
    std::size_t i = 0, j = 0;
    while (i < am.size() && j < bm.size()) {
        const int c = compare(am[i], bm[j]);
        if (c > 0) {
            om.push_back(am[i]);
            oc.push_back(ac[i++]);
        } else if (c < 0) {
            om.push_back(bm[j]);
            oc.push_back(s > 0 ? bc[j] : mpz_class(-bc[j]));
            ++j;
        } else {
            mpz_class t;
            if (s > 0) t = ac[i] + bc[j];
            else t = ac[i] - bc[j];
            if (t != 0) {
                om.push_back(am[i]);
                oc.push_back(std::move(t));
            }
            ++i;
            ++j;
        }
    }
    for (; i < am.size(); ++i) {
        om.push_back(am[i]);
        oc.push_back(ac[i]);
    }
    for (; j < bm.size(); ++j) {
        om.push_back(bm[j]);
        oc.push_back(s > 0 ? bc[j] : mpz_class(-bc[j]));
    }
}

}  // namespace

Poly& Poly::operator+=(const Poly& b) {
    if (b.isZero()) return *this;
    if (isZero()) return *this = b;
    Poly r;
    mergeInto(r.mons_, r.coefs_, mons_, coefs_, b.mons_, b.coefs_, +1);
    return *this = std::move(r);
}

Poly& Poly::operator-=(const Poly& b) {
    if (b.isZero()) return *this;
    Poly r;
    mergeInto(r.mons_, r.coefs_, mons_, coefs_, b.mons_, b.coefs_, -1);
    return *this = std::move(r);
}

Poly& Poly::operator*=(const Poly& b) { return *this = *this * b; }

PolyBuilder::Run PolyBuilder::merge(Run a, Run b) {
    Run r;
    r.level = std::max(a.level, b.level) + 1;
    mergeInto(r.mons, r.coefs, a.mons, a.coefs, b.mons, b.coefs, +1);
    return r;
}

void PolyBuilder::addSortedRun(std::vector<Monomial> mons, std::vector<mpz_class> coefs) {
    stack_.push_back(Run{std::move(mons), std::move(coefs), 0});
    while (stack_.size() >= 2 && stack_[stack_.size() - 2].level <= stack_.back().level) {
        Run b = std::move(stack_.back());
        stack_.pop_back();
        Run a = std::move(stack_.back());
        stack_.pop_back();
        stack_.push_back(merge(std::move(a), std::move(b)));
    }
}

Poly PolyBuilder::finish() {
    while (stack_.size() >= 2) {
        Run b = std::move(stack_.back());
        stack_.pop_back();
        Run a = std::move(stack_.back());
        stack_.pop_back();
        stack_.push_back(merge(std::move(a), std::move(b)));
    }
    Poly p;
    if (!stack_.empty()) {
        p.mons_ = std::move(stack_.back().mons);
        p.coefs_ = std::move(stack_.back().coefs);
        stack_.clear();
    }
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    const auto& k = simd::kernels();
    PolyBuilder builder;
    for (std::size_t i = 0; i < small.size(); ++i) {
        std::vector<Monomial> mons(big.size());
        k.shift_up(mons, big.mons_, small.mons_[i]);
        std::vector<mpz_class> coefs(big.size());
        for (std::size_t j = 0; j < big.size(); ++j) coefs[j] = small.coefs_[i] * big.coefs_[j];
        builder.addSortedRun(std::move(mons), std::move(coefs));
    }
    return builder.finish();
}

Poly Poly::scaled(const mpz_class& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.coefs_) x *= c;
    return r;
}

Poly Poly::divideContent(const mpz_class& c) const {
    Poly r = *this;
    for (auto& x : r.coefs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r = *this;
    if (!isZero()) simd::kernels().shift_up(r.mons_, mons_, m);
    return r;
}

Poly Poly::unshifted(const Monomial& m) const {
    Poly r = *this;
    if (!isZero()) simd::kernels().shift_down(r.mons_, mons_, m);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

std::optional<Poly> Poly::divExact(const Poly& b) const {
    if (b.isZero()) throw std::domain_error("division by zero");
    if (isZero()) return Poly();
    if (b.isConstant()) {
        for (const auto& c : coefs_)
            if (!mpz_divisible_p(c.get_mpz_t(), b.coefs_[0].get_mpz_t())) return std::nullopt;
        return divideContent(b.coefs_[0]);
    }
    // Every exponent of b's terms is bounded by this poly's degrees if b | a.
    const Monomial da = degrees(), db = b.degrees();
    for (int i = 1; i < kLanes; ++i)
        if (db.e[i] > da.e[i]) return std::nullopt;
    if (b.isMonomial()) {
        if (simd::kernels().count_divisible(mons_, b.mons_[0]) != mons_.size()) return std::nullopt;
        for (const auto& c : coefs_)
            if (!mpz_divisible_p(c.get_mpz_t(), b.coefs_[0].get_mpz_t())) return std::nullopt;
        return unshifted(b.mons_[0]).divideContent(b.coefs_[0]);
    }

    std::map<Monomial, mpz_class, MonomialGreater> rem;
    for (std::size_t i = 0; i < size(); ++i) rem.emplace_hint(rem.end(), mons_[i], coefs_[i]);
    const Monomial& lb = b.mons_[0];
    const mpz_class& cb = b.coefs_[0];
    Poly q;
    mpz_class t;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!divides(lb, it->first)) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
        const Monomial qm = it->first / lb;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), cb.get_mpz_t());
        rem.erase(it);
        for (std::size_t j = 1; j < b.size(); ++j) {
            const Monomial m = b.mons_[j] * qm;
            t = qc * b.coefs_[j];
            auto [pos, inserted] = rem.try_emplace(m);
            pos->second -= t;
            if (pos->second == 0) rem.erase(pos);
        }
        q.mons_.push_back(qm);
        q.coefs_.push_back(std::move(qc));
    }
    return q;
}

Poly Poly::evaluate(Var x, const mpz_class& value) const {
    const unsigned d = degree(x);
    if (d == 0) return *this;
    std::vector<mpz_class> powers(d + 1);
    powers[0] = 1;
    for (unsigned i = 1; i <= d; ++i) powers[i] = powers[i - 1] * value;
    std::vector<Monomial> mons;
    std::vector<mpz_class> coefs;
    mons.reserve(size());
    coefs.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        Monomial m = mons_[i];
        const unsigned k = m[x];
        m.set(x, 0);
        mons.push_back(m);
        coefs.push_back(coefs_[i] * powers[k]);
    }
    return fromTerms(std::move(mons), std::move(coefs));
}

std::vector<Poly> Poly::coefficientsIn(Var x) const {
    std::vector<std::vector<Monomial>> ms(degree(x) + 1);
    std::vector<std::vector<mpz_class>> cs(degree(x) + 1);
    for (std::size_t i = 0; i < size(); ++i) {
        Monomial m = mons_[i];
        const unsigned k = m[x];
        m.set(x, 0);
        ms[k].push_back(m);
        cs[k].push_back(coefs_[i]);
    }
    std::vector<Poly> out;
    out.reserve(ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
        // Removing x keeps the relative order of the remaining terms only
        // within a fixed power of x up to the degree lane; re-sort to be safe.
        out.push_back(fromTerms(std::move(ms[k]), std::move(cs[k])));
    }
    return out;
}

Poly Poly::coefficient(Var x, unsigned k) const {
    std::vector<Monomial> ms;
    std::vector<mpz_class> cs;
    for (std::size_t i = 0; i < size(); ++i) {
        if (mons_[i][x] != k) continue;
        Monomial m = mons_[i];
        m.set(x, 0);
        ms.push_back(m);
        cs.push_back(coefs_[i]);
    }
    return fromTerms(std::move(ms), std::move(cs));
}

Poly Poly::substitute(Var x, const Poly& p) const {
    const unsigned d = degree(x);
    if (d == 0) return *this;
    const auto coeffs = coefficientsIn(x);
    Poly r = coeffs[d];
    for (unsigned k = d; k-- > 0;) r = r * p + coeffs[k];
    return r;
}

Poly Poly::hasse(Var x, unsigned k) const {
    if (k == 0) return *this;
    std::vector<Monomial> ms;
    std::vector<mpz_class> cs;
    mpz_class binom;
    for (std::size_t i = 0; i < size(); ++i) {
        const unsigned e = mons_[i][x];
        if (e < k) continue;
        Monomial m = mons_[i];
        m.set(x, e - k);
        mpz_bin_uiui(binom.get_mpz_t(), e, k);
        ms.push_back(m);
        cs.push_back(coefs_[i] * binom);
    }
    return fromTerms(std::move(ms), std::move(cs));
}

Poly Poly::stretchV(unsigned n) const {
    if (n == 1) return *this;
    std::vector<Monomial> ms = mons_;
    for (auto& m : ms) m.set(Var::v(), m[Var::v()] * n);
    return fromTerms(std::move(ms), coefs_);
}

std::string Poly::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        const mpz_class& c = coefs_[i];
        const Monomial& m = mons_[i];
        if (i > 0) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        const mpz_class a = abs(c);
        bool first = true;
        if (a != 1 || m.isOne()) {
            os << a.get_str();
            first = false;
        }
        for (int lane = 1; lane < kLanes; ++lane) {
            if (m.e[lane] == 0) continue;
            if (!first) os << "*";
            os << Var::fromLane(lane).name();
            if (m.e[lane] > 1) os << "^" << m.e[lane];
            first = false;
        }
    }
    return os.str();
}

std::size_t Poly::hash() const {
    std::size_t h = 0;
    MonomialHash mh;
    for (std::size_t i = 0; i < size(); ++i) {
        h = h * 1000003u ^ mh(mons_[i]);
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(coefs_[i].get_mpz_t()));
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.toString(); }

}  // namespace higgs
