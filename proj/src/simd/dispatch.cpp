#include "amod/simd/fp_kernels.hpp"

#include <atomic>

namespace amod::simd {

kernel_table const & scalar_kernels()
{
    static kernel_table const table{"scalar", &detail::axpy_scalar, &detail::scale_scalar};
    return table;
}

std::optional<kernel_table> avx2_kernels()
{
#if defined(AMOD_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return kernel_table{"avx2", &detail::axpy_avx2, &detail::scale_avx2};
#endif
    return std::nullopt;
}

namespace {

kernel_table const & automatic()
{
    static kernel_table const table = [] {
        if (auto t = avx2_kernels())
            return *t;
        return scalar_kernels();
    }();
    return table;
}

std::optional<kernel_table> & forced()
{
    static std::optional<kernel_table> table;
    return table;
}

} // namespace

kernel_table const & active_kernels()
{
    if (forced())
        return *forced();
    return automatic();
}

void force_kernels(std::optional<kernel_table> table) { forced() = table; }

} // namespace amod::simd
