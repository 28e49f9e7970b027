#include "tusv/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace tusv::kernels {

// Same contract as or_shift_scalar. The cross-word carry chain makes a pure
// vector formulation awkward for arbitrary bit offsets, so the hot word-
// aligned case is vectorized and the misaligned case does the carry math on
// vectors of adjacent words.
void or_shift_avx2(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t words, std::uint64_t shift) {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    if (word_shift >= words) return;
    const std::size_t n = words - word_shift; // words actually written

    if (bit_shift == 0) {
        std::uint64_t* d = dst + word_shift;
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), _mm256_or_si256(a, b));
        }
        for (; i < n; ++i) d[i] |= src[i];
        return;
    }

    const unsigned carry_shift = 64 - bit_shift;
    std::uint64_t* d = dst + word_shift;
    // d[i] |= (src[i] << bit_shift) | (src[i-1] >> carry_shift)
    const __m256i lsh = _mm256_set1_epi64x(bit_shift);
    const __m256i rsh = _mm256_set1_epi64x(carry_shift);
    std::size_t i = n;
    while (i >= 5) { // need src[i-1], so the block [i-4, i) reads src[i-5..i)
        i -= 4;
        __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
        __m256i v = _mm256_or_si256(_mm256_sllv_epi64(hi, lsh), _mm256_srlv_epi64(lo, rsh));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), _mm256_or_si256(a, v));
    }
    while (i-- > 0) {
        std::uint64_t v = src[i] << bit_shift;
        if (i > 0) v |= src[i - 1] >> carry_shift;
        d[i] |= v;
    }
}

} // namespace tusv::kernels

#endif
