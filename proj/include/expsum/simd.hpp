// expsum — runtime-dispatched span kernels.
//
// The batch character-sum transform spends nearly all of its time adding one
// contiguous i64 span into another (rotate-and-accumulate of histogram rows).
// add_span_i64 is that kernel: a scalar reference loop, plus an AVX2 variant
// selected once at startup when the CPU supports it.  Set EXPSUM_NO_AVX2=1 in
// the environment to force the scalar path (used by the equivalence tests).

#ifndef EXPSUM_SIMD_HPP
#define EXPSUM_SIMD_HPP

#include <cstddef>
#include <cstdint>

namespace expsum::simd {

using i64 = std::int64_t;

// dst[i] += src[i] for i in [0, n).  Spans may not overlap.
void add_span_i64(i64* dst, const i64* src, std::size_t n);

// Reference implementation, always scalar; the dispatched kernel must agree
// with this exactly.
void add_span_i64_scalar(i64* dst, const i64* src, std::size_t n);

// Name of the kernel set selected at startup: "avx2" or "scalar".
const char* active_backend();

}  // namespace expsum::simd

#endif  // EXPSUM_SIMD_HPP
