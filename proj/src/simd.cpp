#include "expsum/simd.hpp"

#include <cstdlib>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace expsum::simd {

void add_span_i64_scalar(i64* dst, const i64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

namespace {

#if defined(__x86_64__)
__attribute__((target("avx2"))) void add_span_i64_avx2(i64* dst, const i64* src,
                                                       std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_add_epi64(d, s));
    }
    for (; i < n; ++i) dst[i] += src[i];
}
#endif

using AddSpanFn = void (*)(i64*, const i64*, std::size_t);

struct Dispatch {
    AddSpanFn add_i64 = add_span_i64_scalar;
    const char* backend = "scalar";
    Dispatch() {
#if defined(__x86_64__)
        if (__builtin_cpu_supports("avx2") && std::getenv("EXPSUM_NO_AVX2") == nullptr) {
            add_i64 = add_span_i64_avx2;
            backend = "avx2";
        }
#endif
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

}  // namespace

void add_span_i64(i64* dst, const i64* src, std::size_t n) {
    dispatch().add_i64(dst, src, n);
}

const char* active_backend() { return dispatch().backend; }

}  // namespace expsum::simd
