#include "amod/u_homology.hpp"

#include <utility>

namespace amod {

namespace {

struct term {
    std::size_t index;
    std::uint32_t coeff;
};

/// Tuple (i1..im) and coefficient index r of a basis index of U_m.
void decode(std::size_t idx, std::size_t d, int m, std::vector<std::size_t> & tuple, std::size_t & r)
{
    r = idx % d;
    idx /= d;
    tuple.assign(static_cast<std::size_t>(m), 0);
    for (int k = m - 1; k >= 0; --k) {
        tuple[static_cast<std::size_t>(k)] = idx % d;
        idx /= d;
    }
}

std::size_t encode(std::vector<std::size_t> const & tuple, std::size_t r, std::size_t d)
{
    std::size_t idx = 0;
    for (auto t : tuple)
        idx = idx * d + t;
    return idx * d + r;
}

class complex_data {
  public:
    complex_data(fp_algebra const & a, long n) : a_(a), d_(a.dim())
    {
        for (std::size_t j = 0; j < d_; ++j)
            powers_.push_back(a.pow(a.basis(j), static_cast<unsigned long>(n)));
    }

    /// d_i of the basis vector idx of U_m.
    std::vector<term> face(int m, int i, std::size_t idx) const
    {
        std::vector<std::size_t> t;
        std::size_t r;
        decode(idx, d_, m, t, r);
        std::vector<term> out;
        if (i == 0) {
            std::size_t const first = t.front();
            t.erase(t.begin());
            for (std::size_t k = 0; k < d_; ++k)
                if (auto c = a_.constant(r, first, k))
                    out.push_back({encode(t, k, d_), c});
        } else if (i == m) {
            std::size_t const last = t.back();
            t.pop_back();
            fp_vector const prod = a_.mul(a_.basis(r), powers_[last]);
            for (std::size_t k = 0; k < d_; ++k)
                if (prod[k])
                    out.push_back({encode(t, k, d_), prod[k]});
        } else {
            auto const pos = static_cast<std::size_t>(i - 1);
            std::size_t const x = t[pos], y = t[pos + 1];
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
            for (std::size_t k = 0; k < d_; ++k)
                if (auto c = a_.constant(x, y, k)) {
                    t[pos] = k;
                    out.push_back({encode(t, r, d_), c});
                }
        }
        return out;
    }

    /// s_i of the basis vector idx of U_m (c_1 inserted after position i).
    std::vector<term> degeneracy(int m, int i, std::size_t idx) const
    {
        std::vector<std::size_t> t;
        std::size_t r;
        decode(idx, d_, m, t, r);
        std::vector<term> out;
        t.insert(t.begin() + i, 0);
        for (std::size_t k = 0; k < d_; ++k)
            if (auto u = a_.unit()[k]) {
                t[static_cast<std::size_t>(i)] = k;
                out.push_back({encode(t, r, d_), u});
            }
        return out;
    }

    fp_algebra const & algebra() const { return a_; }
    std::size_t dim() const { return d_; }

  private:
    fp_algebra const & a_;
    std::size_t d_;
    std::vector<fp_vector> powers_;
};

template <class Map>
fp_vector apply_sparse(std::uint32_t p, std::size_t out_dim, fp_vector const & v, Map && map)
{
    fp_vector out(out_dim, 0);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (!v[idx])
            continue;
        for (auto const & t : map(idx))
            out[t.index] = static_cast<std::uint32_t>(
                (out[t.index] + static_cast<std::uint64_t>(v[idx]) * t.coeff) % p);
    }
    return out;
}

template <class Map>
fp_matrix matrix_of(std::uint32_t p, std::size_t rows, std::size_t cols, Map && map)
{
    fp_matrix m(p, rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (auto const & t : map(c))
            m.accumulate(t.index, c, t.coeff);
    return m;
}

void check_face(int m, int i)
{
    if (m < 1 || i < 0 || i > m)
        throw amod_error(errc::invalid_argument, "face index out of range");
}

void check_degeneracy(int m, int i)
{
    if (m < 0 || i < 0 || i > m)
        throw amod_error(errc::invalid_argument, "degeneracy index out of range");
}

} // namespace

std::size_t u_dimension(std::size_t d, int m)
{
    std::size_t out = d;
    for (int k = 0; k < m; ++k)
        out *= d;
    return out;
}

fp_vector expand_c(element const & a, long p)
{
    if (!is_prime(p))
        throw amod_error(errc::not_prime, std::to_string(p) + " is not prime");
    fp_vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        integer r = a[i] % p;
        if (r < 0)
            r += p;
        out[i] = static_cast<std::uint32_t>(r.get_ui());
    }
    return out;
}

fp_vector u_face(fp_algebra const & a, long n, int m, int i, fp_vector const & v)
{
    check_face(m, i);
    complex_data cx(a, n);
    return apply_sparse(a.characteristic(), u_dimension(a.dim(), m - 1), v,
                        [&](std::size_t idx) { return cx.face(m, i, idx); });
}

fp_vector u_degeneracy(fp_algebra const & a, int m, int i, fp_vector const & v)
{
    check_degeneracy(m, i);
    complex_data cx(a, 1);
    return apply_sparse(a.characteristic(), u_dimension(a.dim(), m + 1), v,
                        [&](std::size_t idx) { return cx.degeneracy(m, i, idx); });
}

fp_matrix face_matrix(fp_algebra const & a, long n, int m, int i)
{
    check_face(m, i);
    complex_data cx(a, n);
    return matrix_of(a.characteristic(), u_dimension(a.dim(), m - 1), u_dimension(a.dim(), m),
                     [&](std::size_t idx) { return cx.face(m, i, idx); });
}

fp_matrix degeneracy_matrix(fp_algebra const & a, int m, int i)
{
    check_degeneracy(m, i);
    complex_data cx(a, 1);
    return matrix_of(a.characteristic(), u_dimension(a.dim(), m + 1), u_dimension(a.dim(), m),
                     [&](std::size_t idx) { return cx.degeneracy(m, i, idx); });
}

fp_matrix boundary_matrix(fp_algebra const & a, long n, int m)
{
    if (m < 1)
        throw amod_error(errc::invalid_argument, "boundary degree must be at least 1");
    complex_data cx(a, n);
    std::uint32_t const p = a.characteristic();
    fp_matrix out(p, u_dimension(a.dim(), m - 1), u_dimension(a.dim(), m));
    for (int i = 0; i <= m; ++i) {
        bool const negative = i % 2 == 1;
        for (std::size_t c = 0; c < out.cols(); ++c)
            for (auto const & t : cx.face(m, i, c))
                out.accumulate(t.index, c, negative ? -static_cast<long>(t.coeff) : static_cast<long>(t.coeff));
    }
    return out;
}

homology_report u_homology(fp_algebra const & a, long n, int max_h)
{
    if (max_h < 0)
        throw amod_error(errc::invalid_argument, "max_h must be non-negative");
    long const v = nu(n);
    if (v == 1)
        throw amod_error(errc::non_prime_power, std::to_string(n) + " is not a prime power");
    homology_report out;
    out.p = static_cast<long>(a.characteristic());
    out.n = n;
    out.dims.assign(static_cast<std::size_t>(max_h) + 1, 0);
    if (v != out.p)
        return out;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_h) + 2, 0); // ranks[m] = rank d_m
    for (int m = 1; m <= max_h + 1; ++m)
        ranks[static_cast<std::size_t>(m)] = fp_rank(boundary_matrix(a, n, m));
    for (int m = 0; m <= max_h; ++m) {
        auto const k = static_cast<std::size_t>(m);
        out.dims[k] = u_dimension(a.dim(), m) - ranks[k] - ranks[k + 1];
    }
    return out;
}

homology_report u_homology(ring const & a, long n, int max_h)
{
    long const v = nu(n);
    if (v == 1)
        throw amod_error(errc::non_prime_power, std::to_string(n) + " is not a prime power");
    return u_homology(reduce_mod_p(a, v), n, max_h);
}

std::vector<identity_failure> simplicial_identity_check(fp_algebra const & a, long n, int max_degree,
                                                        std::mt19937_64 & rng, int trials)
{
    std::vector<identity_failure> failures;
    std::uint32_t const p = a.characteristic();
    std::size_t const d = a.dim();
    auto random_vector = [&](int m) {
        fp_vector v(u_dimension(d, m));
        for (auto & x : v)
            x = static_cast<std::uint32_t>(draw_uniform(rng, 0, static_cast<long>(p) - 1));
        return v;
    };
    auto face = [&](int m, int i, fp_vector const & v) { return u_face(a, n, m, i, v); };
    auto degen = [&](int m, int i, fp_vector const & v) { return u_degeneracy(a, m, i, v); };
    auto record = [&](char const * family, int m) {
        for (auto const & f : failures)
            if (f.family == family && f.degree == m)
                return;
        failures.push_back({family, m});
    };

    for (int m = 0; m <= max_degree; ++m) {
        for (int trial = 0; trial < trials; ++trial) {
            fp_vector const v = random_vector(m);
            // d_i d_j = d_{j-1} d_i, i < j
            if (m >= 2)
                for (int j = 1; j <= m; ++j)
                    for (int i = 0; i < j; ++i)
                        if (face(m - 1, i, face(m, j, v)) != face(m - 1, j - 1, face(m, i, v)))
                            record("d_i d_j = d_{j-1} d_i", m);
            // s_i s_j = s_{j+1} s_i, i <= j
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= j; ++i)
                    if (degen(m + 1, i, degen(m, j, v)) != degen(m + 1, j + 1, degen(m, i, v)))
                        record("s_i s_j = s_{j+1} s_i", m);
            for (int j = 0; j <= m; ++j) {
                fp_vector const sj = degen(m, j, v);
                // d_j s_j = d_{j+1} s_j = id
                if (face(m + 1, j, sj) != v || face(m + 1, j + 1, sj) != v)
                    record("d_j s_j = d_{j+1} s_j = id", m);
                for (int i = 0; i <= m + 1; ++i) {
                    // d_i s_j = s_{j-1} d_i, i < j
                    if (i < j && face(m + 1, i, sj) != degen(m - 1, j - 1, face(m, i, v)))
                        record("d_i s_j = s_{j-1} d_i", m);
                    // d_i s_j = s_j d_{i-1}, i > j + 1
                    if (i > j + 1 && face(m + 1, i, sj) != degen(m - 1, j, face(m, i - 1, v)))
                        record("d_i s_j = s_j d_{i-1}", m);
                }
            }
        }
    }
    return failures;
}

/* ---- local structure ------------------------------------------------- */

namespace {

/// Matrix of the F_p-linear map x -> x^(p^k).
fp_matrix frobenius_power_matrix(fp_algebra const & a, int k)
{
    std::size_t const d = a.dim();
    unsigned long q = 1;
    for (int i = 0; i < k; ++i)
        q *= a.characteristic();
    fp_matrix m(a.characteristic(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
        fp_vector img = a.pow(a.basis(j), q);
        for (std::size_t i = 0; i < d; ++i)
            m(i, j) = img[i];
    }
    return m;
}

std::size_t span_rank(std::uint32_t p, std::vector<fp_vector> const & vs, std::size_t d)
{
    if (vs.empty())
        return 0;
    fp_matrix m(p, vs.size(), d);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < d; ++c)
            m(r, c) = vs[r][c];
    return fp_rank(std::move(m));
}

} // namespace

std::vector<fp_vector> nilradical(fp_algebra const & a)
{
    std::size_t const d = a.dim();
    int k = 0;
    for (unsigned long q = 1; q < d; q *= a.characteristic())
        ++k;
    if (k == 0)
        k = 1;
    return fp_kernel(frobenius_power_matrix(a, k));
}

std::vector<local_factor> local_decomposition(fp_algebra const & a)
{
    std::uint32_t const p = a.characteristic();
    std::size_t const d = a.dim();
    fp_matrix f = frobenius_power_matrix(a, 1);
    for (std::size_t i = 0; i < d; ++i)
        f(i, i) = (f(i, i) + p - 1) % p;
    std::vector<fp_vector> const fixed = fp_kernel(f);

    std::size_t count = 1;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        count *= p;
        if (count > (1u << 22))
            throw amod_error(errc::invalid_argument, "too many split factors to enumerate idempotents");
    }
    // the fixed subalgebra is a product of copies of F_p; its idempotents are
    // exactly those of A
    std::vector<fp_vector> idempotents;
    std::vector<std::uint32_t> coeff(fixed.size(), 0);
    for (std::size_t step = 0; step < count; ++step) {
        fp_vector e(d, 0);
        for (std::size_t b = 0; b < fixed.size(); ++b)
            for (std::size_t i = 0; i < d; ++i)
                e[i] = static_cast<std::uint32_t>((e[i] + static_cast<std::uint64_t>(coeff[b]) * fixed[b][i]) % p);
        bool nonzero = false;
        for (auto x : e)
            nonzero = nonzero || x != 0;
        if (nonzero && a.mul(e, e) == e)
            idempotents.push_back(e);
        for (std::size_t b = 0; b < coeff.size(); ++b) {
            if (++coeff[b] < p)
                break;
            coeff[b] = 0;
        }
    }

    std::vector<fp_vector> const rad = nilradical(a);
    std::vector<local_factor> out;
    for (auto const & e : idempotents) {
        bool primitive = true;
        for (auto const & g : idempotents)
            if (g != e && a.mul(g, e) == g) {
                primitive = false;
                break;
            }
        if (!primitive)
            continue;
        std::vector<fp_vector> ea, erad;
        for (std::size_t j = 0; j < d; ++j)
            ea.push_back(a.mul(e, a.basis(j)));
        for (auto const & r : rad)
            erad.push_back(a.mul(e, r));
        local_factor lf;
        lf.idempotent = e;
        lf.dimension = span_rank(p, ea, d);
        lf.residue_degree = static_cast<int>(lf.dimension - span_rank(p, erad, d));
        out.push_back(std::move(lf));
    }
    return out;
}

std::size_t u0_from_residue_fields(fp_algebra const & a, long n)
{
    std::size_t total = 0;
    for (auto const & lf : local_decomposition(a))
        total += u_homology(build_finite_field(a.characteristic(), lf.residue_degree), n, 0).dims[0];
    return total;
}

bool surjectivity_predicted(fp_algebra const & a, long n)
{
    auto pk = prime_power(n);
    if (!pk)
        throw amod_error(errc::non_prime_power, std::to_string(n) + " is not a prime power");
    if (pk->first != static_cast<long>(a.characteristic()))
        return true;
    for (auto const & lf : local_decomposition(a))
        if (pk->second % lf.residue_degree == 0)
            return false;
    return true;
}

} // namespace amod
