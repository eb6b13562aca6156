#pragma once

#include <cstddef>
#include <cstdint>

// Word-span bit kernels. All relation and world-set arithmetic bottoms out
// here. Two implementations exist: a scalar reference and an AVX2 variant;
// the active one is picked once at startup (see bitspan.cpp). The variants
// must be bit-identical; tests/test_kernels.cpp checks them against each
// other on random spans.

namespace kripkit::kern {

struct BitspanOps {
    const char* name;

    // dst |= src
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst &= src
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst = ~a | b   (set-valued implication)
    void (*implies_into)(std::uint64_t* dst, const std::uint64_t* a,
                         const std::uint64_t* b, std::size_t n);
    // dst = ~src
    void (*not_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // (a & b) != 0 anywhere
    bool (*and_any)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*equals)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*is_zero)(const std::uint64_t* a, std::size_t n);
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

// The ops table selected at startup: AVX2 when the CPU supports it, unless
// the environment variable KRIPKIT_SIMD overrides ("scalar" or "avx2").
const BitspanOps& ops();

const BitspanOps& scalar_ops();
bool avx2_available();           // CPU support, independent of the override
const BitspanOps* avx2_ops();    // nullptr when not compiled in/supported

}  // namespace kripkit::kern
