#pragma once

#include <string>
#include <vector>

#include "higgs/scalar.hpp"

namespace higgs {

/// Truncated power series sum_{r <= rmax, d <= dmax} c(r,d) w^r z^d with
/// ScalarExpr coefficients. numE = 2g fixes how the Adams operations act on
/// the curve parameters.
class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(int rmax, int dmax, int numE);
    static GradedSeries one(int rmax, int dmax, int numE);

    int rmax() const { return rmax_; }
    int dmax() const { return dmax_; }
    int numE() const { return numE_; }

    const ScalarExpr& at(int r, int d) const { return c_[index(r, d)]; }
    void set(int r, int d, ScalarExpr x) { c_[index(r, d)] = std::move(x); }
    bool contains(int r, int d) const { return r >= 0 && d >= 0 && r <= rmax_ && d <= dmax_; }
    bool sameWindow(const GradedSeries& o) const;

    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    /// Cauchy product on the window.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries scaled(const ScalarExpr& c) const;
    friend bool operator==(const GradedSeries& a, const GradedSeries& b);
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

    /// psi_n: Adams on coefficients and (r, d) -> (n r, n d).
    GradedSeries adams(int n) const;

    /// Keys with d * r0 == r * d0 (slope d0/r0; r0 = 0 is the torsion slope).
    GradedSeries slopeSlice(int d0, int r0) const;
    /// Primitive directions (r0, d0) with a key of that slope in the window.
    std::vector<std::pair<int, int>> slopes() const;

    /// One entry {r, d, coeff} per nonzero coefficient, ordered by (r, d).
    std::string toJson() const;
    static GradedSeries fromJson(const std::string& text, int numE);

private:
    std::size_t index(int r, int d) const;
    int rmax_ = 0, dmax_ = 0, numE_ = 0;
    std::vector<ScalarExpr> c_;
};

/// exp(f) for f with zero constant term.
GradedSeries seriesExp(const GradedSeries& f);
/// log(f) for f with constant term 1.
GradedSeries seriesLog(const GradedSeries& f);
/// Exp(f) = exp(sum_n psi_n(f) / n).
GradedSeries plethExp(const GradedSeries& f);
/// Log(f) = sum_n mu(n)/n psi_n(log f).
GradedSeries plethLog(const GradedSeries& f);
/// For every slope, the slice of the result is Exp(slice of omega / (q - 1)).
GradedSeries slopeExpAll(const GradedSeries& omega);

int moebius(int n);

}  // namespace higgs
