#include <algorithm>

#include "higgs/simd/exponent_kernels.hpp"

namespace higgs::simd {
namespace {

void shiftUp(std::span<Monomial> out, std::span<const Monomial> in, const Monomial& m) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] * m;
}

void shiftDown(std::span<Monomial> out, std::span<const Monomial> in, const Monomial& m) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] / m;
}

Monomial laneMin(std::span<const Monomial> in) {
    Monomial r = in.front();
    for (const auto& x : in.subspan(1))
        for (int k = 0; k < kLanes; ++k) r.e[k] = std::min(r.e[k], x.e[k]);
    return r;
}

Monomial laneMax(std::span<const Monomial> in) {
    Monomial r = in.front();
    for (const auto& x : in.subspan(1))
        for (int k = 0; k < kLanes; ++k) r.e[k] = std::max(r.e[k], x.e[k]);
    return r;
}

std::size_t countDivisible(std::span<const Monomial> in, const Monomial& d) {
    std::size_t n = 0;
    for (const auto& x : in) n += divides(d, x) ? 1 : 0;
    return n;
}

}  // namespace

const ExponentKernels& scalarKernels() {
    static const ExponentKernels k{"scalar", shiftUp, shiftDown, laneMin, laneMax, countDivisible};
    return k;
}

}  // namespace higgs::simd
