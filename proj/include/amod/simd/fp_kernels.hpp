#ifndef AMOD_SIMD_FP_KERNELS_HPP
#define AMOD_SIMD_FP_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Row kernels for dense elimination over F_p, p < 2^15. All entries are
// reduced residues in [0, p).

namespace amod::simd {

using axpy_fn = void (*)(std::uint32_t * dst, std::uint32_t const * src, std::uint32_t scale,
                         std::uint32_t p, std::size_t n);
using scale_fn = void (*)(std::uint32_t * dst, std::uint32_t scale, std::uint32_t p, std::size_t n);

struct kernel_table {
    std::string_view name;
    /// dst[i] = (dst[i] + scale * src[i]) mod p
    axpy_fn axpy;
    /// dst[i] = scale * dst[i] mod p
    scale_fn scale;
};

kernel_table const & scalar_kernels();

/// Present only when the binary was built with AVX2 support and the CPU
/// reports it at runtime.
std::optional<kernel_table> avx2_kernels();

/// The table used by the F_p linear algebra; the fastest available one
/// unless overridden.
kernel_table const & active_kernels();

/// Pin the active table (tests use this to compare variants); nullopt
/// restores automatic selection.
void force_kernels(std::optional<kernel_table> table);

namespace detail {
void axpy_scalar(std::uint32_t * dst, std::uint32_t const * src, std::uint32_t scale,
                 std::uint32_t p, std::size_t n);
void scale_scalar(std::uint32_t * dst, std::uint32_t scale, std::uint32_t p, std::size_t n);
#if defined(AMOD_HAVE_AVX2)
void axpy_avx2(std::uint32_t * dst, std::uint32_t const * src, std::uint32_t scale,
               std::uint32_t p, std::size_t n);
void scale_avx2(std::uint32_t * dst, std::uint32_t scale, std::uint32_t p, std::size_t n);
#endif
} // namespace detail

} // namespace amod::simd

#endif
