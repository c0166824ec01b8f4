#include "amod/simd/fp_kernels.hpp"

#include <immintrin.h>

// Compiled with -mavx2. Values stay below 2^31 (p < 2^15), so the residue is
// taken through exact double-precision quotients, four lanes at a time.

namespace amod::simd::detail {

namespace {

inline __m128i mod_half(__m128i v, __m256d pd, __m256d inv)
{
    __m256d x = _mm256_cvtepi32_pd(v);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, inv));
    __m256d r = _mm256_fnmadd_pd(q, pd, x);
    // the quotient may be off by one in either direction
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), pd));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
    return _mm256_cvttpd_epi32(r);
}

inline __m256i mod_p(__m256i v, __m256d pd, __m256d inv)
{
    __m128i lo = mod_half(_mm256_castsi256_si128(v), pd, inv);
    __m128i hi = mod_half(_mm256_extracti128_si256(v, 1), pd, inv);
    return _mm256_inserti128_si256(_mm256_castsi128_si256(lo), hi, 1);
}

} // namespace

void axpy_avx2(std::uint32_t * dst, std::uint32_t const * src, std::uint32_t scale,
               std::uint32_t p, std::size_t n)
{
    __m256i const s = _mm256_set1_epi32(static_cast<int>(scale));
    __m256d const pd = _mm256_set1_pd(static_cast<double>(p));
    __m256d const inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(src + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(dst + i));
        __m256i v = _mm256_add_epi32(y, _mm256_mullo_epi32(s, x));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), mod_p(v, pd, inv));
    }
    axpy_scalar(dst + i, src + i, scale, p, n - i);
}

void scale_avx2(std::uint32_t * dst, std::uint32_t scale, std::uint32_t p, std::size_t n)
{
    __m256i const s = _mm256_set1_epi32(static_cast<int>(scale));
    __m256d const pd = _mm256_set1_pd(static_cast<double>(p));
    __m256d const inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i y = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), mod_p(_mm256_mullo_epi32(s, y), pd, inv));
    }
    scale_scalar(dst + i, scale, p, n - i);
}

} // namespace amod::simd::detail
