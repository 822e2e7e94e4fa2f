#include "higgs/series.hpp"

#include <json.hpp>
#include <numeric>
#include <stdexcept>

namespace higgs {

GradedSeries::GradedSeries(int rmax, int dmax, int numE) : rmax_(rmax), dmax_(dmax), numE_(numE) {
    if (rmax < 0 || dmax < 0) throw std::invalid_argument("series window must be nonnegative");
    c_.resize(static_cast<std::size_t>(rmax + 1) * static_cast<std::size_t>(dmax + 1));
}

GradedSeries GradedSeries::one(int rmax, int dmax, int numE) {
    GradedSeries s(rmax, dmax, numE);
    s.set(0, 0, 1);
    return s;
}

std::size_t GradedSeries::index(int r, int d) const {
    if (!contains(r, d)) throw std::out_of_range("series key (" + std::to_string(r) + "," + std::to_string(d) + ") outside window");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dmax_ + 1) + static_cast<std::size_t>(d);
}

bool GradedSeries::sameWindow(const GradedSeries& o) const {
    return rmax_ == o.rmax_ && dmax_ == o.dmax_ && numE_ == o.numE_;
}

static void requireSame(const GradedSeries& a, const GradedSeries& b) {
    if (!a.sameWindow(b)) throw std::invalid_argument("series windows differ");
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    requireSame(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    requireSame(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    requireSame(a, b);
    GradedSeries out(a.rmax_, a.dmax_, a.numE_);
    for (int r1 = 0; r1 <= a.rmax_; ++r1)
        for (int d1 = 0; d1 <= a.dmax_; ++d1) {
            const ScalarExpr& x = a.at(r1, d1);
            if (x.isZero()) continue;
            for (int r2 = 0; r1 + r2 <= a.rmax_; ++r2)
                for (int d2 = 0; d1 + d2 <= a.dmax_; ++d2) {
                    const ScalarExpr& y = b.at(r2, d2);
                    if (!y.isZero()) out.c_[out.index(r1 + r2, d1 + d2)] += x * y;
                }
        }
    return out;
}

GradedSeries GradedSeries::scaled(const ScalarExpr& c) const {
    GradedSeries out = *this;
    for (auto& x : out.c_)
        if (!x.isZero()) x *= c;
    return out;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) { return a.sameWindow(b) && a.c_ == b.c_; }

GradedSeries GradedSeries::adams(int n) const {
    if (n <= 0) throw std::invalid_argument("Adams operation needs n >= 1");
    GradedSeries out(rmax_, dmax_, numE_);
    for (int r = 0; n * r <= rmax_; ++r)
        for (int d = 0; n * d <= dmax_; ++d)
            if (!at(r, d).isZero()) out.set(n * r, n * d, scalar::adams(at(r, d), n, numE_));
    return out;
}

GradedSeries GradedSeries::slopeSlice(int d0, int r0) const {
    GradedSeries out(rmax_, dmax_, numE_);
    for (int r = 0; r <= rmax_; ++r)
        for (int d = 0; d <= dmax_; ++d)
            if (static_cast<long>(d) * r0 == static_cast<long>(r) * d0) out.set(r, d, at(r, d));
    return out;
}

std::vector<std::pair<int, int>> GradedSeries::slopes() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r <= rmax_; ++r)
        for (int d = 0; d <= dmax_; ++d)
            if ((r || d) && std::gcd(r, d) == 1) out.emplace_back(r, d);
    return out;
}

std::string GradedSeries::toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int r = 0; r <= rmax_; ++r)
        for (int d = 0; d <= dmax_; ++d)
            if (!at(r, d).isZero()) arr.push_back({{"r", r}, {"d", d}, {"coeff", at(r, d).toString()}});
    return arr.dump();
}

GradedSeries GradedSeries::fromJson(const std::string& text, int numE) {
    const auto arr = nlohmann::json::parse(text);
    int rmax = 0, dmax = 0;
    for (const auto& e : arr) {
        rmax = std::max(rmax, e.at("r").get<int>());
        dmax = std::max(dmax, e.at("d").get<int>());
    }
    GradedSeries s(rmax, dmax, numE);
    for (const auto& e : arr) s.set(e.at("r").get<int>(), e.at("d").get<int>(), ScalarExpr::parse(e.at("coeff").get<std::string>()));
    return s;
}

// exp and log use the derivation D(w^r z^d) = (r + d) w^r z^d, for which
// D exp(f) = D(f) exp(f).
GradedSeries seriesExp(const GradedSeries& f) {
    if (!f.at(0, 0).isZero()) throw std::invalid_argument("exp needs a series without constant term");
    GradedSeries out = GradedSeries::one(f.rmax(), f.dmax(), f.numE());
    for (int w = 1; w <= f.rmax() + f.dmax(); ++w)
        for (int r = std::max(0, w - f.dmax()); r <= std::min(w, f.rmax()); ++r) {
            const int d = w - r;
            ScalarExpr acc;
            for (int r1 = 0; r1 <= r; ++r1)
                for (int d1 = 0; d1 <= d; ++d1) {
                    if (r1 + d1 == 0) continue;
                    const ScalarExpr& x = f.at(r1, d1);
                    const ScalarExpr& y = out.at(r - r1, d - d1);
                    if (!x.isZero() && !y.isZero()) acc += x * y * ScalarExpr(r1 + d1);
                }
            if (!acc.isZero()) out.set(r, d, acc / ScalarExpr(w));
        }
    return out;
}

GradedSeries seriesLog(const GradedSeries& f) {
    if (!f.at(0, 0).isOne()) throw std::invalid_argument("log needs a series with constant term 1");
    GradedSeries out(f.rmax(), f.dmax(), f.numE());
    for (int w = 1; w <= f.rmax() + f.dmax(); ++w)
        for (int r = std::max(0, w - f.dmax()); r <= std::min(w, f.rmax()); ++r) {
            const int d = w - r;
            ScalarExpr acc;
            for (int r1 = 0; r1 <= r; ++r1)
                for (int d1 = 0; d1 <= d; ++d1) {
                    const int w1 = r1 + d1;
                    if (w1 == 0 || w1 == w) continue;
                    const ScalarExpr& x = out.at(r1, d1);
                    const ScalarExpr& y = f.at(r - r1, d - d1);
                    if (!x.isZero() && !y.isZero()) acc += x * y * ScalarExpr(w1);
                }
            out.set(r, d, f.at(r, d) - acc / ScalarExpr(w));
        }
    return out;
}

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
    int mu = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    return n > 1 ? -mu : mu;
}

static int adamsRange(const GradedSeries& f) { return std::max(f.rmax(), f.dmax()); }

GradedSeries plethExp(const GradedSeries& f) {
    if (!f.at(0, 0).isZero()) throw std::invalid_argument("Exp needs a series without constant term");
    GradedSeries h(f.rmax(), f.dmax(), f.numE());
    for (int n = 1; n <= adamsRange(f); ++n) h += f.adams(n).scaled(RatFun::rational(mpq_class(1, n)));
    return seriesExp(h);
}

GradedSeries plethLog(const GradedSeries& f) {
    const GradedSeries l = seriesLog(f);
    GradedSeries out(f.rmax(), f.dmax(), f.numE());
    for (int n = 1; n <= adamsRange(f); ++n) {
        const int mu = moebius(n);
        if (mu != 0) out += l.adams(n).scaled(RatFun::rational(mpq_class(mu, n)));
    }
    return out;
}

GradedSeries slopeExpAll(const GradedSeries& omega) {
    GradedSeries out = GradedSeries::one(omega.rmax(), omega.dmax(), omega.numE());
    const ScalarExpr inv = (scalar::q() - 1).inverse();
    GradedSeries body = omega;
    body.set(0, 0, 0);
    for (const auto& [r0, d0] : omega.slopes()) {
        const GradedSeries e = plethExp(body.slopeSlice(d0, r0).scaled(inv));
        for (int r = 0; r <= out.rmax(); ++r)
            for (int d = 0; d <= out.dmax(); ++d)
                if ((r || d) && static_cast<long>(d) * r0 == static_cast<long>(r) * d0) out.set(r, d, e.at(r, d));
    }
    return out;
}

}  // namespace higgs
