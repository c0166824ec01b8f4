#ifndef AMOD_FP_LINALG_HPP
#define AMOD_FP_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amod {

/// Dense matrix over F_p, row-major, entries in [0, p).
class fp_matrix {
  public:
    fp_matrix() = default;
    fp_matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    std::uint32_t characteristic() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t & operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::uint32_t * row_data(std::size_t r) { return a_.data() + r * cols_; }
    std::uint32_t const * row_data(std::size_t r) const { return a_.data() + r * cols_; }

    /// Add v (any integer, reduced here) into entry (r, c).
    void accumulate(std::size_t r, std::size_t c, long v);

    bool is_zero() const;
    bool operator==(fp_matrix const & o) const
    {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> a_;
};

fp_matrix operator*(fp_matrix const & a, fp_matrix const & b);
std::vector<std::uint32_t> apply(fp_matrix const & m, std::vector<std::uint32_t> const & v);

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> fp_rref(fp_matrix & m);

std::size_t fp_rank(fp_matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in echelon order.
/// Throws errc::not_prime if the characteristic is not prime.
std::vector<std::vector<std::uint32_t>> fp_kernel(fp_matrix const & m);

} // namespace amod

#endif
