#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "higgs/series.hpp"

namespace higgs::p1 {

// Brute-force counts on P^1 over F_p: every vector bundle is a sum of line
// bundles O(a_i) and a map E -> E(l) is a matrix of polynomials in one affine
// coordinate, entry (i, j) of degree <= a_i - a_j + l.

struct SplittingType {
    std::vector<int> a;  // weakly decreasing, nonnegative
    int rank() const { return static_cast<int>(a.size()); }
    int degree() const;
    std::string toString() const;
    friend bool operator==(const SplittingType& x, const SplittingType& y) { return x.a == y.a; }
};

/// All splitting types of rank r >= 1 and degree d >= 0, in decreasing
/// lexicographic order.
std::vector<SplittingType> splittingTypes(int r, int d);

/// dim Hom(sum O(a_i), sum O(b_j)(l)) = sum max(0, b_j - a_i + l + 1).
long homDim(const SplittingType& a, const SplittingType& b, long l);
/// #Aut(E) = q0^N prod_b #GL_{m_b}(F_q0).
mpz_class autCount(const SplittingType& a, long q0);
mpz_class glOrder(int m, long q0);

struct OracleOptions {
    /// Largest number of Higgs fields enumerated for one splitting type.
    double cap = 1e7;
    /// Worker threads; 0 means hardware concurrency.
    int threads = 0;
};

/// Number of theta: E -> E(l) with theta^r = 0. Throws when q0^homDim
/// exceeds the cap.
mpz_class nilCount(const SplittingType& a, long l, long q0, const OracleOptions& opts = {});
/// All theta: q0^homDim(a, a, l).
mpz_class allCount(const SplittingType& a, long l, long q0);

struct OracleTerm {
    SplittingType type;
    mpz_class count;
    mpz_class aut;
};

/// Per splitting type contributions to (r, d).
std::vector<OracleTerm> oracleBreakdown(int r, int d, long l, long q0, bool nilOnly, const OracleOptions& opts = {});

/// sum_{r,d} (-sqrt q0)^{-l r^2} sum_E count(E)/#Aut(E) w^r z^d. Each
/// coefficient is a rational number times (-v)^{-l r^2}, where v stands for
/// sqrt(q0); compare after scalar::specialize(x, q0, {}).
GradedSeries oracleSeries(long l, long q0, int rmax, int dmax, bool nilOnly, const OracleOptions& opts = {});

}  // namespace higgs::p1
