#include "amod/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "amod/errors.hpp"

namespace amod {

int_matrix int_matrix::identity(std::size_t n)
{
    int_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

int_matrix int_matrix::from_rows(std::vector<int_vector> const & rows, std::size_t cols)
{
    int_matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw amod_error(errc::invalid_argument, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

int_matrix int_matrix::from_columns(std::vector<int_vector> const & cols, std::size_t rows)
{
    int_matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw amod_error(errc::invalid_argument, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

int_vector int_matrix::row(std::size_t r) const
{
    return int_vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

int_vector int_matrix::column(std::size_t c) const
{
    int_vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

std::vector<int_vector> int_matrix::columns() const
{
    std::vector<int_vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

int_matrix int_matrix::transpose() const
{
    int_matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

int_matrix operator*(int_matrix const & a, int_matrix const & b)
{
    if (a.cols() != b.rows())
        throw amod_error(errc::invalid_argument, "matrix product dimension mismatch");
    int_matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

void axpy(int_vector & y, integer const & q, int_vector const & x)
{
    // y -= q * x
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0)
            mpz_submul(y[i].get_mpz_t(), q.get_mpz_t(), x[i].get_mpz_t());
}

void negate(int_vector & v)
{
    for (auto & x : v)
        x = -x;
}

bool is_zero(int_vector const & v)
{
    return std::all_of(v.begin(), v.end(), [](integer const & x) { return x == 0; });
}

} // namespace

int_matrix hnf(int_matrix const & m)
{
    std::size_t const rows = m.rows();
    std::size_t const ncols = m.cols();
    std::vector<int_vector> cols = m.columns();
    std::size_t k = 0;
    integer q;
    for (std::size_t r = 0; r < rows && k < ncols; ++r) {
        for (;;) {
            std::size_t best = ncols;
            for (std::size_t j = k; j < ncols; ++j)
                if (cols[j][r] != 0 && (best == ncols || abs(cols[j][r]) < abs(cols[best][r])))
                    best = j;
            if (best == ncols)
                break;
            std::swap(cols[k], cols[best]);
            bool clean = true;
            for (std::size_t j = k + 1; j < ncols; ++j) {
                if (cols[j][r] == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_mpz_t(), cols[k][r].get_mpz_t());
                axpy(cols[j], q, cols[k]);
                if (cols[j][r] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (cols[k][r] == 0)
            continue; // no pivot in this row
        if (cols[k][r] < 0)
            negate(cols[k]);
        for (std::size_t j = 0; j < k; ++j) {
            mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_mpz_t(), cols[k][r].get_mpz_t());
            if (q != 0)
                axpy(cols[j], q, cols[k]);
        }
        ++k;
    }
    return int_matrix::from_columns(cols, rows);
}

int_matrix hnf_basis(int_matrix const & m)
{
    int_matrix h = hnf(m);
    std::vector<int_vector> cols;
    for (std::size_t c = 0; c < h.cols(); ++c) {
        auto col = h.column(c);
        if (!is_zero(col))
            cols.push_back(std::move(col));
    }
    return int_matrix::from_columns(cols, m.rows());
}

snf_report snf(int_matrix const & m)
{
    std::size_t const R = m.rows();
    std::size_t const C = m.cols();
    int_matrix a = m;
    std::size_t const n = std::min(R, C);
    integer q;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i != j)
            for (std::size_t c = 0; c < C; ++c)
                std::swap(a(i, c), a(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i != j)
            for (std::size_t r = 0; r < R; ++r)
                std::swap(a(r, i), a(r, j));
    };

    snf_report out;
    out.invariant_factors.assign(n, 0);
    std::size_t t = 0;
    for (; t < n; ++t) {
        // pivot: smallest nonzero absolute value in the trailing block
        for (;;) {
            std::size_t br = R, bc = C;
            for (std::size_t r = t; r < R; ++r)
                for (std::size_t c = t; c < C; ++c)
                    if (a(r, c) != 0 && (br == R || abs(a(r, c)) < abs(a(br, bc)))) {
                        br = r;
                        bc = c;
                    }
            if (br == R)
                goto done;
            swap_rows(t, br);
            swap_cols(t, bc);

            bool clean = true;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (a(r, t) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t c = t; c < C; ++c)
                    mpz_submul(a(r, c).get_mpz_t(), q.get_mpz_t(), a(t, c).get_mpz_t());
                if (a(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (a(t, c) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t r = t; r < R; ++r)
                    mpz_submul(a(r, c).get_mpz_t(), q.get_mpz_t(), a(r, t).get_mpz_t());
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t r = t + 1; r < R && divides; ++r)
                for (std::size_t c = t + 1; c < C; ++c)
                    if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t cc = t; cc < C; ++cc)
                            a(t, cc) += a(r, cc);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        out.invariant_factors[t] = abs(a(t, t));
    }
done:
    out.rank = t;
    return out;
}

std::vector<integer> cokernel_invariants(int_matrix const & m)
{
    auto report = snf(m);
    std::vector<integer> out;
    for (std::size_t i = 0; i < report.rank; ++i)
        if (report.invariant_factors[i] != 1)
            out.push_back(report.invariant_factors[i]);
    for (std::size_t i = report.rank; i < m.rows(); ++i)
        out.push_back(0);
    return out;
}

std::optional<int_vector> lattice_coordinates(int_vector const & v, int_matrix const & h)
{
    if (v.size() != h.rows())
        throw amod_error(errc::invalid_argument, "dimension mismatch in lattice membership");
    int_vector rest = v;
    int_vector coords(h.cols(), 0);
    std::size_t r = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        while (r < h.rows() && h(r, j) == 0) {
            if (rest[r] != 0)
                return std::nullopt;
            ++r;
        }
        if (r == h.rows())
            break;
        if (!mpz_divisible_p(rest[r].get_mpz_t(), h(r, j).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(coords[j].get_mpz_t(), rest[r].get_mpz_t(), h(r, j).get_mpz_t());
        for (std::size_t i = r; i < h.rows(); ++i)
            mpz_submul(rest[i].get_mpz_t(), coords[j].get_mpz_t(), h(i, j).get_mpz_t());
        ++r;
    }
    if (!is_zero(rest))
        return std::nullopt;
    return coords;
}

bool lattice_membership(int_vector const & v, int_matrix const & basis)
{
    if (v.size() != basis.rows())
        throw amod_error(errc::invalid_argument, "dimension mismatch in lattice membership");
    return lattice_coordinates(v, hnf_basis(basis)).has_value();
}

std::optional<integer> lattice_index(int_matrix const & basis)
{
    int_matrix h = hnf_basis(basis);
    if (h.cols() != h.rows())
        return std::nullopt;
    integer index = 1;
    for (std::size_t i = 0; i < h.rows(); ++i)
        index *= h(i, i);
    return index;
}

integer determinant(int_matrix const & m)
{
    if (m.rows() != m.cols())
        throw amod_error(errc::invalid_argument, "determinant of a non-square matrix");
    std::size_t const n = m.rows();
    if (n == 0)
        return 1;
    int_matrix a = m;
    integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

int_matrix integer_kernel(int_matrix const & m)
{
    std::size_t const R = m.rows();
    std::size_t const C = m.cols();
    row_lattice lat(R + C);
    for (std::size_t j = 0; j < C; ++j) {
        int_vector v(R + C, 0);
        for (std::size_t r = 0; r < R; ++r)
            v[r] = m(r, j);
        v[R + j] = 1;
        lat.insert(std::move(v));
    }
    std::vector<int_vector> kernel;
    for (std::size_t i = 0; i < lat.rank(); ++i)
        if (lat.pivots()[i] >= R)
            kernel.emplace_back(lat.basis()[i].begin() + static_cast<std::ptrdiff_t>(R), lat.basis()[i].end());
    return hnf_basis(int_matrix::from_columns(kernel, C));
}

/* ---- row_lattice ---------------------------------------------------- */

namespace {
std::size_t first_nonzero(int_vector const & v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            return i;
    return v.size();
}
} // namespace

bool row_lattice::insert(int_vector v)
{
    if (v.size() != n_)
        throw amod_error(errc::invalid_argument, "row_lattice: dimension mismatch");
    bool changed = false;
    integer q, g, s, t, bq, vq;
    for (;;) {
        std::size_t p = first_nonzero(v);
        if (p == n_)
            break;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
        if (it == pivots_.end() || *it != p) {
            if (v[p] < 0)
                negate(v);
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
            pivots_.insert(it, p);
            changed = true;
            break;
        }
        int_vector & b = rows_[idx];
        if (mpz_divisible_p(v[p].get_mpz_t(), b[p].get_mpz_t())) {
            mpz_divexact(q.get_mpz_t(), v[p].get_mpz_t(), b[p].get_mpz_t());
            axpy(v, q, b);
            continue;
        }
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[p].get_mpz_t(), v[p].get_mpz_t());
        mpz_divexact(vq.get_mpz_t(), v[p].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(bq.get_mpz_t(), b[p].get_mpz_t(), g.get_mpz_t());
        int_vector nb(n_), nv(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            nb[i] = s * b[i] + t * v[i];
            nv[i] = vq * b[i] - bq * v[i];
        }
        b = std::move(nb);
        v = std::move(nv);
        changed = true;
    }
    if (changed)
        full_reduce();
    return changed;
}

bool row_lattice::contains(int_vector v) const
{
    if (v.size() != n_)
        throw amod_error(errc::invalid_argument, "row_lattice: dimension mismatch");
    integer q;
    for (;;) {
        std::size_t p = first_nonzero(v);
        if (p == n_)
            return true;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        if (it == pivots_.end() || *it != p)
            return false;
        int_vector const & b = rows_[static_cast<std::size_t>(it - pivots_.begin())];
        if (!mpz_divisible_p(v[p].get_mpz_t(), b[p].get_mpz_t()))
            return false;
        mpz_divexact(q.get_mpz_t(), v[p].get_mpz_t(), b[p].get_mpz_t());
        axpy(v, q, b);
    }
}

void row_lattice::full_reduce()
{
    integer q;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][pivots_[i]] < 0)
            negate(rows_[i]);
    for (std::size_t i = rows_.size(); i-- > 0;)
        for (std::size_t j = i + 1; j < rows_.size(); ++j) {
            std::size_t p = pivots_[j];
            mpz_fdiv_q(q.get_mpz_t(), rows_[i][p].get_mpz_t(), rows_[j][p].get_mpz_t());
            if (q != 0)
                axpy(rows_[i], q, rows_[j]);
        }
}

int_matrix row_lattice::as_columns() const { return int_matrix::from_columns(rows_, n_); }

} // namespace amod
