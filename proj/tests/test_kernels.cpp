#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "kripkit/kernels/bitspan.hpp"

using namespace kripkit;

namespace {

std::vector<std::uint64_t> random_span(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> out(n);
    for (auto& w : out) w = rng();
    return out;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree on random spans") {
    const kern::BitspanOps& scalar = kern::scalar_ops();
    const kern::BitspanOps* avx2 = kern::avx2_ops();
    if (avx2 == nullptr || !kern::avx2_available()) {
        MESSAGE("avx2 unavailable; scalar-only platform");
        return;
    }
    std::mt19937_64 rng(0xB17C0DE);
    // sizes straddling the 4-word vector width, including empty and tails
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 16, 33, 100, 257}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_span(rng, n);
            const auto b = random_span(rng, n);

            auto d1 = a, d2 = a;
            scalar.or_into(d1.data(), b.data(), n);
            avx2->or_into(d2.data(), b.data(), n);
            CHECK(d1 == d2);

            d1 = a; d2 = a;
            scalar.and_into(d1.data(), b.data(), n);
            avx2->and_into(d2.data(), b.data(), n);
            CHECK(d1 == d2);

            std::vector<std::uint64_t> o1(n), o2(n);
            scalar.implies_into(o1.data(), a.data(), b.data(), n);
            avx2->implies_into(o2.data(), a.data(), b.data(), n);
            CHECK(o1 == o2);

            scalar.not_into(o1.data(), a.data(), n);
            avx2->not_into(o2.data(), a.data(), n);
            CHECK(o1 == o2);

            CHECK(scalar.and_any(a.data(), b.data(), n) == avx2->and_any(a.data(), b.data(), n));
            CHECK(scalar.equals(a.data(), b.data(), n) == avx2->equals(a.data(), b.data(), n));
            CHECK(scalar.equals(a.data(), a.data(), n) == avx2->equals(a.data(), a.data(), n));
            CHECK(scalar.is_zero(a.data(), n) == avx2->is_zero(a.data(), n));
            CHECK(scalar.popcount(a.data(), n) == avx2->popcount(a.data(), n));
        }
    }
}

TEST_CASE("kernel semantics against naive bit loops") {
    const kern::BitspanOps& ops = kern::ops();
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = trial % 7;
        const auto a = random_span(rng, n);
        const auto b = random_span(rng, n);
        auto d = a;
        ops.or_into(d.data(), b.data(), n);
        std::uint64_t expected_pop = 0;
        bool expected_any = false;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(d[i] == (a[i] | b[i]));
            if (a[i] & b[i]) expected_any = true;
            for (int bit = 0; bit < 64; ++bit) expected_pop += (a[i] >> bit) & 1;
        }
        CHECK(ops.and_any(a.data(), b.data(), n) == expected_any);
        CHECK(ops.popcount(a.data(), n) == expected_pop);
    }
}

TEST_CASE("zero-length spans are no-ops") {
    const kern::BitspanOps& ops = kern::ops();
    CHECK(ops.is_zero(nullptr, 0));
    CHECK(ops.equals(nullptr, nullptr, 0));
    CHECK_FALSE(ops.and_any(nullptr, nullptr, 0));
    CHECK(ops.popcount(nullptr, 0) == 0);
}
