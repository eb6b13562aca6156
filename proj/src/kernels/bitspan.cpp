#include "kripkit/kernels/bitspan.hpp"

#include <cstdlib>
#include <cstring>

namespace kripkit::kern {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

const BitspanOps& select() {
    const char* mode = std::getenv("KRIPKIT_SIMD");
    if (mode != nullptr && std::strcmp(mode, "scalar") == 0) return scalar_ops();
    const BitspanOps* avx2 = avx2_ops();
    if (avx2 != nullptr && avx2_available()) return *avx2;
    return scalar_ops();
}

}  // namespace

const BitspanOps& ops() {
    static const BitspanOps& selected = select();
    return selected;
}

}  // namespace kripkit::kern
