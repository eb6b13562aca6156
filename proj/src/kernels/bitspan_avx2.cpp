// AVX2 variant of the bit-span kernels. This translation unit is compiled
// with -mavx2; it is only entered through the dispatch table after a runtime
// CPU check, so the rest of the library stays runnable on baseline x86-64.

#include "kripkit/kernels/bitspan.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

namespace kripkit::kern {

namespace {

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

void implies_into(std::uint64_t* dst, const std::uint64_t* a,
                  const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        store(dst + i, _mm256_or_si256(_mm256_andnot_si256(load(a + i), _mm256_set1_epi64x(-1)),
                                       load(b + i)));
    for (; i < n; ++i) dst[i] = ~a[i] | b[i];
}

void not_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    const __m256i ones = _mm256_set1_epi64x(-1);
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), ones));
    for (; i < n; ++i) dst[i] = ~src[i];
}

bool and_any(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_and_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(x, x)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool is_zero(const std::uint64_t* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = load(a + i);
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
    // No single-instruction 256-bit popcount on AVX2; per-word POPCNT is
    // already the fast path here.
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i]));
    return c;
}

}  // namespace

const BitspanOps* avx2_ops() {
    static const BitspanOps table = {
        "avx2",  or_into, and_into, implies_into, not_into,
        and_any, equals,  is_zero,  popcount,
    };
    return &table;
}

}  // namespace kripkit::kern

#else

namespace kripkit::kern {
const BitspanOps* avx2_ops() { return nullptr; }
}  // namespace kripkit::kern

#endif
