#include "amod/simd/fp_kernels.hpp"

namespace amod::simd::detail {

void axpy_scalar(std::uint32_t * dst, std::uint32_t const * src, std::uint32_t scale,
                 std::uint32_t p, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = (dst[i] + scale * src[i]) % p;
}

void scale_scalar(std::uint32_t * dst, std::uint32_t scale, std::uint32_t p, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = (scale * dst[i]) % p;
}

} // namespace amod::simd::detail
