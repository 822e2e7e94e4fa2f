#include <atomic>
#include <cstdlib>
#include <string_view>

#include "higgs/simd/exponent_kernels.hpp"

namespace higgs::simd {

bool cpuHasAvx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

const ExponentKernels* select() {
    const char* env = std::getenv("HIGGS_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalarKernels();
    if (cpuHasAvx2() && avx2Kernels() != nullptr) return avx2Kernels();
    return &scalarKernels();
}

std::atomic<const ExponentKernels*>& active() {
    static std::atomic<const ExponentKernels*> k{select()};
    return k;
}

}  // namespace

const ExponentKernels& kernels() { return *active().load(std::memory_order_relaxed); }

void setKernels(const ExponentKernels& k) { active().store(&k, std::memory_order_relaxed); }

}  // namespace higgs::simd
