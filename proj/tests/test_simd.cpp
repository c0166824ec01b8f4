#include "doctest.h"

#include <random>
#include <vector>

#include "amod/fp_linalg.hpp"
#include "amod/ring.hpp"
#include "amod/simd/fp_kernels.hpp"

using namespace amod;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937_64 & rng, std::size_t n, std::uint32_t p)
{
    std::vector<std::uint32_t> v(n);
    for (auto & x : v)
        x = static_cast<std::uint32_t>(draw_uniform(rng, 0, p - 1));
    return v;
}

fp_matrix fp_matrix_transpose(fp_matrix const & m)
{
    fp_matrix t(m.characteristic(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

} // namespace

TEST_CASE("scalar kernels against the definition")
{
    std::mt19937_64 rng(3);
    auto const & k = simd::scalar_kernels();
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 32749u}) {
        auto dst = random_row(rng, 37, p);
        auto src = random_row(rng, 37, p);
        auto s = static_cast<std::uint32_t>(draw_uniform(rng, 0, p - 1));
        auto expect = dst;
        for (std::size_t i = 0; i < dst.size(); ++i)
            expect[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(s) * src[i]) % p);
        k.axpy(dst.data(), src.data(), s, p, dst.size());
        CHECK(dst == expect);
        for (auto & x : expect)
            x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) * x % p);
        k.scale(dst.data(), s, p, dst.size());
        CHECK(dst == expect);
    }
}

TEST_CASE("avx2 kernels agree with scalar kernels")
{
    auto avx = simd::avx2_kernels();
    if (!avx) {
        MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
        return;
    }
    std::mt19937_64 rng(17);
    auto const & ref = simd::scalar_kernels();
    for (int trial = 0; trial < 500; ++trial) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 251, 32749}[static_cast<std::size_t>(trial % 8)];
        std::size_t n = static_cast<std::size_t>(draw_uniform(rng, 0, 70));
        auto dst = random_row(rng, n, p);
        auto src = random_row(rng, n, p);
        auto s = static_cast<std::uint32_t>(draw_uniform(rng, 0, p - 1));
        auto a = dst, b = dst;
        ref.axpy(a.data(), src.data(), s, p, n);
        avx->axpy(b.data(), src.data(), s, p, n);
        CHECK(a == b);
        ref.scale(a.data(), s, p, n);
        avx->scale(b.data(), s, p, n);
        CHECK(a == b);
    }
}

TEST_CASE("elimination results do not depend on the kernel table")
{
    std::mt19937_64 rng(23);
    auto avx = simd::avx2_kernels();
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t p = trial % 2 ? 3 : 13;
        std::size_t r = static_cast<std::size_t>(draw_uniform(rng, 1, 40));
        std::size_t c = static_cast<std::size_t>(draw_uniform(rng, 1, 40));
        fp_matrix m(p, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<std::uint32_t>(draw_uniform(rng, 0, p - 1));
        simd::force_kernels(simd::scalar_kernels());
        fp_matrix a = m;
        auto pa = fp_rref(a);
        fp_matrix sq_a = m * fp_matrix_transpose(m);
        if (avx)
            simd::force_kernels(*avx);
        fp_matrix b = m;
        auto pb = fp_rref(b);
        CHECK(pa == pb);
        CHECK(a == b);
        CHECK(m * fp_matrix_transpose(m) == sq_a);
        simd::force_kernels(std::nullopt);
    }
}
