#include "amod/fp_linalg.hpp"

#include <algorithm>
#include <string>

#include "amod/errors.hpp"
#include "amod/ring.hpp"
#include "amod/simd/fp_kernels.hpp"

namespace amod {

fp_matrix::fp_matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
    if (p < 2 || p >= (1U << 15))
        throw amod_error(errc::invalid_argument, "F_p matrices need 2 <= p < 2^15");
}

void fp_matrix::accumulate(std::size_t r, std::size_t c, long v)
{
    long const p = static_cast<long>(p_);
    long x = (static_cast<long>((*this)(r, c)) + v % p + p) % p;
    (*this)(r, c) = static_cast<std::uint32_t>(x);
}

bool fp_matrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

fp_matrix operator*(fp_matrix const & a, fp_matrix const & b)
{
    if (a.cols() != b.rows() || a.characteristic() != b.characteristic())
        throw amod_error(errc::invalid_argument, "F_p matrix product mismatch");
    auto const & k = simd::active_kernels();
    fp_matrix out(a.characteristic(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                k.axpy(out.row_data(i), b.row_data(j), a(i, j), a.characteristic(), b.cols());
    return out;
}

std::vector<std::uint32_t> apply(fp_matrix const & m, std::vector<std::uint32_t> const & v)
{
    if (v.size() != m.cols())
        throw amod_error(errc::invalid_argument, "F_p matrix-vector mismatch");
    std::uint64_t const p = m.characteristic();
    std::vector<std::uint32_t> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        std::uint32_t const * row = m.row_data(r);
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc = (acc + static_cast<std::uint64_t>(row[c]) * v[c]) % p;
        out[r] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::vector<std::size_t> fp_rref(fp_matrix & m)
{
    auto const & k = simd::active_kernels();
    std::uint32_t const p = m.characteristic();
    std::size_t const cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::uint32_t> tmp(cols);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.rows(); ++c) {
        std::size_t r = row;
        while (r < m.rows() && m(r, c) == 0)
            ++r;
        if (r == m.rows())
            continue;
        if (r != row) {
            std::copy_n(m.row_data(r), cols, tmp.data());
            std::copy_n(m.row_data(row), cols, m.row_data(r));
            std::copy_n(tmp.data(), cols, m.row_data(row));
        }
        k.scale(m.row_data(row), fp_inverse(m(row, c), p), p, cols);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row && m(i, c) != 0)
                k.axpy(m.row_data(i), m.row_data(row), p - m(i, c), p, cols);
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t fp_rank(fp_matrix m) { return fp_rref(m).size(); }

std::vector<std::vector<std::uint32_t>> fp_kernel(fp_matrix const & m)
{
    std::uint32_t const p = m.characteristic();
    if (!is_prime(static_cast<long>(p)))
        throw amod_error(errc::not_prime, std::to_string(p) + " is not prime");
    fp_matrix r = m;
    auto pivots = fp_rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = (p - r(i, free)) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace amod
