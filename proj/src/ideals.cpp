#include "amod/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>

namespace amod {

/* ---- ideal ---------------------------------------------------------- */

bool ideal::is_unit() const { return full_rank() && hnf_ == int_matrix::identity(ring_.rank()); }

bool ideal::contains(element const & a) const
{
    if (a.parent() != ring_)
        throw amod_error(errc::ring_mismatch, "element of another ring");
    return lattice_coordinates(a.coords(), hnf_).has_value();
}

bool ideal::is_closed() const
{
    for (std::size_t c = 0; c < hnf_.cols(); ++c) {
        element col = ring_.make(hnf_.column(c));
        for (std::size_t i = 0; i < ring_.rank(); ++i)
            if (!contains(ring_.basis(i) * col))
                return false;
    }
    return true;
}

std::vector<int_vector> ideal::hnf_rows() const
{
    std::vector<int_vector> rows;
    for (std::size_t r = 0; r < hnf_.rows(); ++r)
        rows.push_back(hnf_.row(r));
    return rows;
}

bool ideal::operator==(ideal const & other) const { return ring_ == other.ring_ && hnf_ == other.hnf_; }

/* ---- construction --------------------------------------------------- */

int_matrix multiplication_matrix(element const & a)
{
    ring const & r = a.parent();
    std::size_t const d = r.rank();
    std::vector<int_vector> cols;
    cols.reserve(d);
    for (std::size_t j = 0; j < d; ++j)
        cols.push_back((a * r.basis(j)).coords());
    return int_matrix::from_columns(cols, d);
}

ideal ideal_from_generators(ring const & r, std::vector<element> gens)
{
    std::size_t const d = r.rank();
    std::vector<int_vector> cols;
    for (auto const & g : gens) {
        if (g.parent() != r)
            throw amod_error(errc::ring_mismatch, "generator from another ring");
        if (g.is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j)
            cols.push_back((g * r.basis(j)).coords());
    }
    if (cols.empty())
        throw amod_error(errc::zero_ideal, "no nonzero generator");
    int_matrix h = hnf_basis(int_matrix::from_columns(cols, d));
    return ideal(r, std::move(h), std::move(gens));
}

ideal fundamental_ideal(ring const & r, long n)
{
    long const v = nu(n);
    std::vector<element> gens{r.from_integer(v)};
    for (std::size_t i = 0; i < r.rank(); ++i)
        gens.push_back(frobenius_defect(r.basis(i), n));
    return ideal_from_generators(r, std::move(gens));
}

ideal ideal_product(ideal const & a, ideal const & b)
{
    if (a.parent() != b.parent())
        throw amod_error(errc::ring_mismatch, "ideals of different rings");
    ring const & r = a.parent();
    std::size_t const d = r.rank();
    std::vector<int_vector> cols;
    for (std::size_t i = 0; i < a.hnf_.cols(); ++i) {
        element x = r.make(a.hnf_.column(i));
        for (std::size_t j = 0; j < b.hnf_.cols(); ++j)
            cols.push_back((x * r.make(b.hnf_.column(j))).coords());
    }
    int_matrix h = hnf_basis(int_matrix::from_columns(cols, d));
    if (h.cols() == 0)
        throw amod_error(errc::zero_ideal, "product is the zero ideal");
    return ideal(r, std::move(h), {});
}

ideal ideal_power(ideal const & a, unsigned k)
{
    ideal result = ideal_from_generators(a.parent(), {a.parent().one()});
    for (unsigned i = 0; i < k; ++i)
        result = ideal_product(result, a);
    return result;
}

bool ideal_equal(ideal const & a, ideal const & b) { return a == b; }

std::optional<integer> ideal_norm(ideal const & a) { return lattice_index(a.hnf_basis()); }

integer element_norm(element const & a) { return abs(determinant(multiplication_matrix(a))); }

/* ---- principality --------------------------------------------------- */

std::string principality_verdict::label() const
{
    switch (verdict) {
    case status::principal: return "yes";
    case status::not_principal_certified: return "no";
    case status::no_generator_within_bound: return "unknown(" + std::to_string(bound) + ")";
    }
    return "unknown";
}

namespace {

struct binary_form {
    integer a, b, c; // a x^2 + b xy + c y^2
};

binary_form norm_form(ring const & r)
{
    integer const A = determinant(multiplication_matrix(r.basis(0)));
    integer const C = determinant(multiplication_matrix(r.basis(1)));
    integer const S = determinant(multiplication_matrix(r.basis(0) + r.basis(1)));
    return {A, S - A - C, C};
}

principality_verdict definite_enumeration(ideal const & I)
{
    ring const & r = I.parent();
    integer const N = *ideal_norm(I);
    int_matrix const & H = I.hnf_basis();
    binary_form const q = norm_form(r);
    // substitute x = s*h00 + t*h01, y = s*h10 + t*h11
    integer const x_s = H(0, 0), x_t = H(0, 1), y_s = H(1, 0), y_t = H(1, 1);
    integer const a = q.a * x_s * x_s + q.b * x_s * y_s + q.c * y_s * y_s;
    integer const c = q.a * x_t * x_t + q.b * x_t * y_t + q.c * y_t * y_t;
    integer const b = 2 * q.a * x_s * x_t + q.b * (x_s * y_t + x_t * y_s) + 2 * q.c * y_s * y_t;
    integer const D = 4 * a * c - b * b; // > 0 for a definite form

    principality_verdict out;
    out.how = principality_verdict::method::definite_form_enumeration;
    out.verdict = principality_verdict::status::not_principal_certified;

    // a s^2 + b s t + c t^2 = N forces t^2 <= 4 a N / D
    integer tmax = sqrt(4 * a * N / D) + 1;
    for (integer t = -tmax; t <= tmax; ++t) {
        integer disc = b * b * t * t - 4 * a * (c * t * t - N);
        if (disc < 0)
            continue;
        integer root = sqrt(disc);
        if (root * root != disc)
            continue;
        for (integer num : {integer(-b * t - root), integer(-b * t + root)}) {
            if (!mpz_divisible_p(num.get_mpz_t(), integer(2 * a).get_mpz_t()))
                continue;
            integer s = num / (2 * a);
            element g = r.make({s * x_s + t * x_t, s * y_s + t * y_t});
            if (ideal_from_generators(r, {g}) == I) {
                out.verdict = principality_verdict::status::principal;
                out.generator = g;
                return out;
            }
        }
    }
    return out;
}

using i128 = __int128;

i128 det_i128(std::vector<i128> m, std::size_t d)
{
    // Bareiss; all intermediates are minors.
    i128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (m[k * d + k] == 0) {
            std::size_t r = k + 1;
            while (r < d && m[r * d + k] == 0)
                ++r;
            if (r == d)
                return 0;
            for (std::size_t c = 0; c < d; ++c)
                std::swap(m[k * d + c], m[r * d + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < d; ++i)
            for (std::size_t j = k + 1; j < d; ++j)
                m[i * d + j] = (m[i * d + j] * m[k * d + k] - m[i * d + k] * m[k * d + j]) / prev;
        prev = m[k * d + k];
    }
    return sign * m[(d - 1) * d + (d - 1)];
}

/// Enumerates the lattice points H s with every ring coordinate in
/// [-radius, radius] in lexicographic order of s, calling visit(x, last)
/// for each innermost run (x holds all coordinates but the last, which runs
/// over last_lo + h*k, k = 0..count-1).
struct box_enumerator {
    int_matrix const & H;
    std::size_t d;
    long radius;

    template <class Run>
    void run(Run && visit) const
    {
        std::vector<long> x(d, 0);
        recurse(0, x, visit);
    }

    static long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
    static long ceil_div(long a, long b) { return -floor_div(-a, b); }

    template <class Run>
    void recurse(std::size_t level, std::vector<long> & x, Run & visit) const
    {
        // partial coordinate at this level from the already fixed s values
        // is tracked in x (x[level..] hold partial sums)
        long const h = H(level, level).get_si();
        long const partial = x[level];
        long lo = ceil_div(-radius - partial, h);
        long hi = floor_div(radius - partial, h);
        if (lo > hi)
            return;
        if (level + 1 == d) {
            visit(x, partial + lo * h, h, hi - lo + 1);
            return;
        }
        std::vector<long> saved(x.begin() + static_cast<std::ptrdiff_t>(level), x.end());
        for (long s = lo; s <= hi; ++s) {
            for (std::size_t r = level; r < d; ++r)
                x[r] = saved[r - level] + s * H(r, level).get_si();
            recurse(level + 1, x, visit);
        }
        std::copy(saved.begin(), saved.end(), x.begin() + static_cast<std::ptrdiff_t>(level));
    }
};

principality_verdict bounded_search_full_rank(ideal const & I, long bound)
{
    ring const & r = I.parent();
    std::size_t const d = r.rank();
    integer const N = *ideal_norm(I);
    int_matrix const & H = I.hnf_basis();

    principality_verdict out;
    out.how = principality_verdict::method::bounded_search;
    out.bound = bound;
    out.verdict = principality_verdict::status::no_generator_within_bound;

    // multiplication matrices of the basis: mats[i][row*d + col]
    std::vector<std::vector<integer>> mats(d, std::vector<integer>(d * d));
    integer entry_bound = 0;
    for (std::size_t row = 0; row < d; ++row)
        for (std::size_t col = 0; col < d; ++col) {
            integer s = 0;
            for (std::size_t i = 0; i < d; ++i) {
                mats[i][row * d + col] = r.constant(i, col, row);
                s += abs(r.constant(i, col, row));
            }
            entry_bound = std::max(entry_bound, integer(s * bound));
        }
    // Hadamard-type bound d^{d/2} E^d, padded for the difference table
    integer hadamard = 1;
    for (std::size_t i = 0; i < d; ++i)
        hadamard *= entry_bound * static_cast<long>(d);
    bool const fast = mpz_sizeinbase(hadamard.get_mpz_t(), 2) + d + 4 < 62 &&
                      mpz_sizeinbase(H(0, 0).get_mpz_t(), 2) < 40;

    auto verify = [&](std::vector<long> const & coords) {
        int_vector v(coords.begin(), coords.end());
        element g = r.make(std::move(v));
        return ideal_from_generators(r, {g}) == I ? std::optional<element>(g) : std::nullopt;
    };

    std::vector<long> radii;
    for (long rad = 1; rad < bound; rad *= 2)
        radii.push_back(rad);
    radii.push_back(bound);

    long prev = 0;
    std::optional<element> found;
    for (long radius : radii) {
        box_enumerator en{H, d, radius};
        if (fast) {
            std::vector<std::vector<i128>> m64(d, std::vector<i128>(d * d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d * d; ++k)
                    m64[i][k] = mats[i][k].get_si();
            i128 const target = N.get_si();
            std::vector<i128> base(d * d);
            std::vector<long> coords(d);
            en.run([&](std::vector<long> const & x, long last0, long h, long count) {
                if (found)
                    return;
                long outer_max = 0;
                for (std::size_t i = 0; i + 1 < d; ++i)
                    outer_max = std::max(outer_max, std::labs(x[i]));
                std::fill(base.begin(), base.end(), 0);
                for (std::size_t i = 0; i + 1 < d; ++i)
                    if (x[i] != 0)
                        for (std::size_t k = 0; k < d * d; ++k)
                            base[k] += m64[i][k] * x[i];
                auto const & mlast = m64[d - 1];
                // the signed determinant is a polynomial of degree <= d in
                // the step index; walk it with a forward difference table
                std::size_t const direct = std::min<std::size_t>(static_cast<std::size_t>(count), d + 1);
                std::vector<i128> table(direct);
                for (std::size_t k = 0; k < direct; ++k) {
                    std::vector<i128> m = base;
                    for (std::size_t e = 0; e < d * d; ++e)
                        m[e] += mlast[e] * (last0 + static_cast<long>(k) * h);
                    table[k] = det_i128(std::move(m), d);
                }
                std::vector<i128> diff = table;
                for (std::size_t lvl = 1; lvl < direct; ++lvl)
                    for (std::size_t k = direct - 1; k >= lvl; --k)
                        diff[k] = diff[k] - diff[k - 1];
                // diff[k] now holds the k-th forward difference at step 0
                for (long k = 0; k < count; ++k) {
                    i128 val = diff[0];
                    long const last = last0 + k * h;
                    if ((val == target || val == -target) &&
                        (outer_max > prev || std::labs(last) > prev)) {
                        for (std::size_t i = 0; i + 1 < d; ++i)
                            coords[i] = x[i];
                        coords[d - 1] = last;
                        if (auto g = verify(coords)) {
                            found = g;
                            return;
                        }
                    }
                    if (direct == d + 1)
                        for (std::size_t lvl = 0; lvl + 1 < direct; ++lvl)
                            diff[lvl] += diff[lvl + 1];
                    else if (static_cast<std::size_t>(k + 1) < direct) {
                        // short run: evaluated directly
                        diff[0] = table[static_cast<std::size_t>(k + 1)];
                    }
                }
            });
        } else {
            std::vector<long> coords(d);
            en.run([&](std::vector<long> const & x, long last0, long h, long count) {
                if (found)
                    return;
                long outer_max = 0;
                for (std::size_t i = 0; i + 1 < d; ++i)
                    outer_max = std::max(outer_max, std::labs(x[i]));
                for (long k = 0; k < count && !found; ++k) {
                    long const last = last0 + k * h;
                    if (outer_max <= prev && std::labs(last) <= prev)
                        continue;
                    for (std::size_t i = 0; i + 1 < d; ++i)
                        coords[i] = x[i];
                    coords[d - 1] = last;
                    int_vector v(coords.begin(), coords.end());
                    element g = r.make(std::move(v));
                    if (element_norm(g) == N)
                        found = verify(coords);
                }
            });
        }
        if (found)
            break;
        prev = radius;
    }
    if (found) {
        out.verdict = principality_verdict::status::principal;
        out.generator = found;
    }
    return out;
}

principality_verdict bounded_search_degenerate(ideal const & I, long bound)
{
    // Lattice not of full rank: scan coefficient vectors over the HNF basis.
    ring const & r = I.parent();
    int_matrix const & H = I.hnf_basis();
    std::size_t const k = H.cols();
    principality_verdict out;
    out.how = principality_verdict::method::bounded_search;
    out.bound = bound;
    std::vector<long> s(k, -bound);
    for (;;) {
        int_vector v(r.rank(), 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < r.rank(); ++i)
                v[i] += s[j] * H(i, j);
        element g = r.make(std::move(v));
        if (!g.is_zero() && ideal_from_generators(r, {g}) == I) {
            out.verdict = principality_verdict::status::principal;
            out.generator = g;
            return out;
        }
        std::size_t j = k;
        while (j-- > 0) {
            if (s[j] < bound) {
                ++s[j];
                break;
            }
            s[j] = -bound;
        }
        if (j == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

} // namespace

bool is_imaginary_quadratic(ring const & r)
{
    if (r.rank() != 2)
        return false;
    binary_form q = norm_form(r);
    return q.a > 0 && q.b * q.b - 4 * q.a * q.c < 0;
}

principality_verdict is_principal(ideal const & a, long bound)
{
    if (bound < 1)
        throw amod_error(errc::invalid_argument, "principality bound must be positive");
    ring const & r = a.parent();
    if (a.is_unit()) {
        principality_verdict out;
        out.verdict = principality_verdict::status::principal;
        out.generator = r.one();
        out.how = is_imaginary_quadratic(r) ? principality_verdict::method::definite_form_enumeration
                                            : principality_verdict::method::bounded_search;
        out.bound = bound;
        return out;
    }
    if (a.full_rank() && is_imaginary_quadratic(r)) {
        auto out = definite_enumeration(a);
        out.bound = bound;
        return out;
    }
    if (a.full_rank())
        return bounded_search_full_rank(a, bound);
    return bounded_search_degenerate(a, bound);
}

/* ---- two generators ------------------------------------------------- */

std::optional<integer> least_positive_integer(ideal const & a)
{
    ring const & r = a.parent();
    int_matrix const & H = a.hnf_basis();
    if (!a.full_rank())
        return std::nullopt;
    // solve H s = unit over Q by forward substitution (H lower triangular)
    std::size_t const d = r.rank();
    std::vector<rational> s(d);
    for (std::size_t i = 0; i < d; ++i) {
        rational acc = rational(r.unit()[i]);
        for (std::size_t j = 0; j < i; ++j)
            acc -= rational(H(i, j)) * s[j];
        s[i] = acc / rational(H(i, i));
        s[i].canonicalize();
    }
    integer m = 1;
    for (auto const & x : s)
        m = lcm(m, integer(x.get_den()));
    return m;
}

std::pair<element, element> two_generator_reduction(ideal const & a, long ceiling)
{
    ring const & r = a.parent();
    auto m = least_positive_integer(a);
    if (!m)
        throw amod_error(errc::unreduced, "ideal contains no nonzero rational integer");
    element const g1 = r.from_integer(*m);
    int_matrix const & H = a.hnf_basis();
    std::size_t const k = H.cols();

    auto works = [&](element const & g2) { return ideal_from_generators(r, {g1, g2}) == a; };
    for (std::size_t j = 0; j < k; ++j) {
        element g2 = r.make(H.column(j));
        if (works(g2))
            return {g1, g2};
    }
    for (long box = 1; box <= ceiling; ++box) {
        std::vector<long> c(k, -box);
        for (;;) {
            long mx = 0;
            for (long x : c)
                mx = std::max(mx, std::labs(x));
            if (mx == box) {
                int_vector v(r.rank(), 0);
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t i = 0; i < r.rank(); ++i)
                        v[i] += c[j] * H(i, j);
                element g2 = r.make(std::move(v));
                if (works(g2))
                    return {g1, g2};
            }
            std::size_t j = k;
            while (j-- > 0) {
                if (c[j] < box) {
                    ++c[j];
                    break;
                }
                c[j] = -box;
            }
            if (j == static_cast<std::size_t>(-1))
                break;
        }
    }
    throw amod_error(errc::unreduced, "no second generator within coefficient box " + std::to_string(ceiling));
}

/* ---- syzygies ------------------------------------------------------- */

int_matrix syzygy_lattice(element const & g1, element const & g2)
{
    if (g1.parent() != g2.parent())
        throw amod_error(errc::ring_mismatch, "syzygy of elements from different rings");
    if (g1.is_zero() && g2.is_zero())
        throw amod_error(errc::zero_ideal, "both generators are zero");
    ring const & r = g1.parent();
    std::size_t const d = r.rank();
    int_matrix m1 = multiplication_matrix(g1), m2 = multiplication_matrix(g2);
    int_matrix both(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            both(i, j) = m1(i, j);
            both(i, d + j) = m2(i, j);
        }
    return integer_kernel(both);
}

std::vector<syzygy> linear_syzygies(element const & g1, element const & g2)
{
    ring const & r = g1.parent();
    std::size_t const d = r.rank();
    int_matrix const kernel = syzygy_lattice(g1, g2);

    auto split = [&](int_vector const & v) {
        return syzygy{r.make(int_vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d))),
                      r.make(int_vector(v.begin() + static_cast<std::ptrdiff_t>(d), v.end()))};
    };
    auto join = [&](element const & u, element const & v) {
        int_vector out = u.coords();
        out.insert(out.end(), v.coords().begin(), v.coords().end());
        return out;
    };

    row_lattice span(2 * d);
    std::vector<syzygy> gens;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        int_vector col = kernel.column(c);
        if (span.contains(col))
            continue;
        auto [u, v] = split(col);
        gens.emplace_back(u, v);
        for (std::size_t j = 0; j < d; ++j)
            span.insert(join(r.basis(j) * u, r.basis(j) * v));
        bool complete = true;
        for (std::size_t cc = 0; cc < kernel.cols() && complete; ++cc)
            complete = span.contains(kernel.column(cc));
        if (complete)
            break;
    }
    return gens;
}

} // namespace amod
