#pragma once

// Bulk kernels over arrays of exponent vectors. One Monomial is 16 x u16,
// exactly one 256-bit register, so every kernel has a scalar reference
// version and an AVX2 version; the active table is chosen once at startup.

#include <span>
#include <string_view>

#include "higgs/monomial.hpp"

namespace higgs::simd {

struct ExponentKernels {
    std::string_view name;
    /// out[i] = in[i] * m
    void (*shift_up)(std::span<Monomial> out, std::span<const Monomial> in, const Monomial& m);
    /// out[i] = in[i] / m (every in[i] divisible by m)
    void (*shift_down)(std::span<Monomial> out, std::span<const Monomial> in, const Monomial& m);
    /// lane-wise minimum over a non-empty span
    Monomial (*lane_min)(std::span<const Monomial> in);
    /// lane-wise maximum over a non-empty span
    Monomial (*lane_max)(std::span<const Monomial> in);
    /// number of in[i] divisible by d
    std::size_t (*count_divisible)(std::span<const Monomial> in, const Monomial& d);
};

const ExponentKernels& scalarKernels();
/// nullptr when the binary was built without AVX2 support.
const ExponentKernels* avx2Kernels();

/// Kernels in use. HIGGS_SIMD=scalar forces the reference path.
const ExponentKernels& kernels();
/// Override the active table (tests use this to compare paths).
void setKernels(const ExponentKernels& k);

bool cpuHasAvx2();

}  // namespace higgs::simd
