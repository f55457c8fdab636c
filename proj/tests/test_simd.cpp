#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "expsum/simd.hpp"

using expsum::simd::active_backend;
using expsum::simd::add_span_i64;
using expsum::simd::add_span_i64_scalar;
using i64 = std::int64_t;

TEST_CASE("dispatched span add agrees with the scalar reference") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<i64> val(-(1ll << 40), 1ll << 40);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = rng() % 67;  // covers 0, sub-vector, and multi-vector lengths
        std::vector<i64> src(n), a(n), b(n);
        for (size_t i = 0; i < n; ++i) {
            src[i] = val(rng);
            a[i] = b[i] = val(rng);
        }
        add_span_i64(a.data(), src.data(), n);
        add_span_i64_scalar(b.data(), src.data(), n);
        CHECK(a == b);
    }
}

TEST_CASE("misaligned offsets (rotation spans start mid-row)") {
    std::mt19937_64 rng(7);
    std::vector<i64> src(96), a(96), b(96);
    for (size_t i = 0; i < 96; ++i) {
        src[i] = (i64)(rng() % 1000) - 500;
        a[i] = b[i] = (i64)(rng() % 1000);
    }
    for (size_t off = 0; off < 13; ++off) {
        add_span_i64(a.data() + off, src.data() + (off * 3) % 20, 83 - off);
        add_span_i64_scalar(b.data() + off, src.data() + (off * 3) % 20, 83 - off);
    }
    CHECK(a == b);
}

TEST_CASE("backend reports a known kernel set") {
    std::string b = active_backend();
    CHECK((b == "avx2" || b == "scalar"));
}
