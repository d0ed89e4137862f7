#include "cqs/lattice_kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace cqs {

#if defined(__AVX2__)

static inline int32_t hsum(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}

void gram_avx2(const PackedVectors& p, int32_t* out) {
    // lane 0 of the first block carries +1, everything else -1
    const __m256i sign0 = _mm256_setr_epi32(1, -1, -1, -1, -1, -1, -1, -1);
    const __m256i signr = _mm256_set1_epi32(-1);
    for (size_t i = 0; i < p.count; ++i) {
        const int32_t* a = p.row(i);
        for (size_t j = 0; j < p.count; ++j) {
            const int32_t* b = p.row(j);
            __m256i acc = _mm256_setzero_si256();
            for (size_t k = 0; k < p.stride; k += 8) {
                __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
                __m256i prod = _mm256_mullo_epi32(va, vb);
                acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(prod, k == 0 ? sign0 : signr));
            }
            out[i * p.count + j] = hsum(acc);
        }
    }
}

#else

void gram_avx2(const PackedVectors& p, int32_t* out) { gram_scalar(p, out); }

#endif

}  // namespace cqs
