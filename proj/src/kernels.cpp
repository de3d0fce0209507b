#include "fourfold/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fourfold::kernels {

#if !defined(FOURFOLD_HAVE_AVX2)
const Ops& avx2() { return scalar(); } // never selected; keeps the symbol defined
#endif

bool avx2_available() {
#if defined(FOURFOLD_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Ops& resolve() {
    const char* env = std::getenv("FOURFOLD_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return scalar();
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2();
        // unknown or unusable request: fall through to autodetect
    }
    return avx2_available() ? avx2() : scalar();
}

} // namespace

const Ops& active() {
    static const Ops& ops = resolve();
    return ops;
}

} // namespace fourfold::kernels
