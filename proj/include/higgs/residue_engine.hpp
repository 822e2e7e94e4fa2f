#pragma once

#include <vector>

#include "higgs/curve.hpp"
#include "higgs/mvratfun.hpp"
#include "higgs/partitions.hpp"
#include "higgs/series.hpp"

namespace higgs {

// Closed formula for the nilpotent twisted Higgs bundle counts:
//   sum_lambda (-v)^{(2g-2-l)<lambda,lambda>} J_lambda(z) H_lambda(z) w^{|lambda|}.
//
// All functions work with the symbolic parameters e_1..e_2g of the curve's
// genus; numeric curves are specialized by the caller (CurveModel::specialize)
// once the series is assembled.

/// Largest number of variables the engine supports (|lambda| <= 5).
inline constexpr int kMaxEngineRank = kMaxZ - 1;

struct LambdaTerm {
    Partition lambda;
    MvRatFun J;
    MvRatFun H;
    ScalarExpr prefactor;
};

/// (1 / prod_{i<j} Zt(z_i/z_j)) sum_sigma sigma[prod_{i<j} Zt(z_i/z_j)
///  prod_{i<n} (1 - q z_{i+1}/z_i)^{-1} (1 - z_1)^{-1}], fully reduced.
MvRatFun buildL(int n, const CurveModel& curve);

/// H~_lambda in the block representatives z_{1 + r_{<i}} (arity |parts|).
/// Residues are taken along z_k = q^{-1} z_{k-1} from z_n downwards, each
/// with dz_k / z_k and the orientation Res = -(value at the locus) for a
/// simple pole of 1/(1 - q z_k / z_{k-1}).
MvRatFun resLambda(const Partition& lambda, const CurveModel& curve);
/// H~_lambda with the block-i representative replaced by z^i q^{-r_{<i}}.
MvRatFun Hlambda(const Partition& lambda, const CurveModel& curve);
/// prod_{s in lambda} Z*(q^{-1-l(s)} z^{a(s)}).
MvRatFun Jlambda(const Partition& lambda, const CurveModel& curve);
ScalarExpr lambdaPrefactor(const Partition& lambda, long l, int genus);
/// The lambda term of the nilpotent series sits at z^{shift} J_lambda H_lambda
/// with shift = -l sum_j C(lambda_j, 2): a Jordan block of size i stacks i
/// pieces twisted by 0, D, ..., (i-1)D, so its degree exceeds the untwisted
/// i deg(alpha_i) by -l C(i, 2) per block. Zero for l = 0.
long lambdaDegreeShift(const Partition& lambda, long l);
LambdaTerm lambdaTerm(const Partition& lambda, const CurveModel& curve, long l);

/// Taylor coefficients z^0..z^dmax of J_lambda H_lambda (no prefactor).
/// Cached per (lambda, genus); set HIGGS_CACHE_DIR to persist across runs.
std::vector<ScalarExpr> lambdaExpansion(const Partition& lambda, const CurveModel& curve, int dmax);

struct EngineOptions {
    /// Worker threads for the lambda terms; 0 means hardware concurrency.
    int threads = 0;
};

/// sum_{r <= rmax, d <= dmax} I+_{D,nil}(r, d) w^r z^d for deg D = l <= 0.
GradedSeries nilBundleSeries(long l, const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts = {});
/// Exp([X]/(q-1) * sum_{d>=1} z^d).
GradedSeries torsionFactor(const CurveModel& curve, int rmax, int dmax);
/// nilBundleSeries * torsionFactor: counts of nilpotent twisted Higgs sheaves.
GradedSeries cohNilSeries(long l, const CurveModel& curve, int rmax, int dmax, const EngineOptions& opts = {});

}  // namespace higgs
