#include "higgs/simd/exponent_kernels.hpp"

#if defined(__x86_64__) && defined(HIGGS_HAVE_AVX2)
#include <immintrin.h>

namespace higgs::simd {
namespace {

inline __m256i load(const Monomial& m) { return _mm256_load_si256(reinterpret_cast<const __m256i*>(m.e.data())); }
inline void store(Monomial& m, __m256i x) { _mm256_store_si256(reinterpret_cast<__m256i*>(m.e.data()), x); }

void shiftUp(std::span<Monomial> out, std::span<const Monomial> in, const Monomial& m) {
    const __m256i s = load(m);
    for (std::size_t i = 0; i < in.size(); ++i) store(out[i], _mm256_add_epi16(load(in[i]), s));
}

void shiftDown(std::span<Monomial> out, std::span<const Monomial> in, const Monomial& m) {
    const __m256i s = load(m);
    for (std::size_t i = 0; i < in.size(); ++i) store(out[i], _mm256_sub_epi16(load(in[i]), s));
}

Monomial laneMin(std::span<const Monomial> in) {
    __m256i acc = load(in.front());
    for (std::size_t i = 1; i < in.size(); ++i) acc = _mm256_min_epu16(acc, load(in[i]));
    Monomial r;
    store(r, acc);
    return r;
}

Monomial laneMax(std::span<const Monomial> in) {
    __m256i acc = load(in.front());
    for (std::size_t i = 1; i < in.size(); ++i) acc = _mm256_max_epu16(acc, load(in[i]));
    Monomial r;
    store(r, acc);
    return r;
}

std::size_t countDivisible(std::span<const Monomial> in, const Monomial& d) {
    const __m256i dv = load(d);
    std::size_t n = 0;
    for (const auto& m : in) {
        const __m256i x = load(m);
        const __m256i ok = _mm256_cmpeq_epi16(_mm256_max_epu16(dv, x), x);
        n += static_cast<unsigned>(_mm256_movemask_epi8(ok)) == 0xFFFFFFFFu ? 1 : 0;
    }
    return n;
}

}  // namespace

const ExponentKernels* avx2Kernels() {
    static const ExponentKernels k{"avx2", shiftUp, shiftDown, laneMin, laneMax, countDivisible};
    return &k;
}

}  // namespace higgs::simd

#else

namespace higgs::simd {
const ExponentKernels* avx2Kernels() { return nullptr; }
}  // namespace higgs::simd

#endif
