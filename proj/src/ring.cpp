#include "amod/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "amod/lattice.hpp"

namespace amod {

/* ---- small integer helpers ------------------------------------------ */

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

std::optional<std::pair<long, int>> prime_power(long n)
{
    if (n < 2)
        return std::nullopt;
    long p = 2;
    while (p * p <= n && n % p != 0)
        ++p;
    if (n % p != 0)
        p = n;
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1)
        return std::nullopt;
    return std::make_pair(p, k);
}

long nu(long n)
{
    if (n <= 1)
        throw amod_error(errc::invalid_argument, "nu(n) requires n >= 2, got " + std::to_string(n));
    auto pp = prime_power(n);
    return pp ? pp->first : 1;
}

long draw_uniform(std::mt19937_64 & rng, long lo, long hi)
{
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

/* ---- ring ----------------------------------------------------------- */

namespace detail {
struct ring_data {
    std::string name;
    std::vector<std::string> labels;
    std::size_t rank = 0;
    std::vector<integer> table;
    int_vector unit;
    std::vector<long> inverted;
    std::optional<std::size_t> unit_index;

    integer const & c(std::size_t i, std::size_t j, std::size_t k) const
    {
        return table[(i * rank + j) * rank + k];
    }
};
} // namespace detail

namespace {

int_vector table_mul(detail::ring_data const & r, int_vector const & a, int_vector const & b)
{
    std::size_t const d = r.rank;
    int_vector out(d, 0);
    integer ab;
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0)
                continue;
            ab = a[i] * b[j];
            integer const * row = &r.table[(i * d + j) * d];
            for (std::size_t k = 0; k < d; ++k)
                if (row[k] != 0)
                    out[k] += ab * row[k];
        }
    }
    return out;
}

int_vector unit_vector(std::size_t d, std::size_t i)
{
    int_vector v(d, 0);
    v[i] = 1;
    return v;
}

std::string coefficient_term(integer const & c, std::string const & label)
{
    if (label == "1")
        return c.get_str();
    if (c == 1)
        return label;
    if (c == -1)
        return "-" + label;
    return c.get_str() + "*" + label;
}

} // namespace

ring ring::from_table(std::string name,
                      std::vector<std::string> labels,
                      std::vector<integer> table,
                      int_vector unit,
                      std::vector<long> inverted)
{
    std::size_t const d = labels.size();
    if (d == 0)
        throw amod_error(errc::not_ring_axioms, "rank must be positive");
    if (table.size() != d * d * d)
        throw amod_error(errc::not_ring_axioms, "structure constants must be a d x d x d array");
    if (unit.size() != d)
        throw amod_error(errc::not_ring_axioms, "unit vector has wrong length");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != d)
            throw amod_error(errc::not_ring_axioms, "basis labels must be pairwise distinct");
    }
    for (long s : inverted)
        if (s < 1)
            throw amod_error(errc::not_ring_axioms, "inverted integers must be positive");

    auto data = std::make_shared<detail::ring_data>();
    data->name = std::move(name);
    data->labels = std::move(labels);
    data->rank = d;
    data->table = std::move(table);
    data->unit = std::move(unit);
    std::sort(inverted.begin(), inverted.end());
    inverted.erase(std::unique(inverted.begin(), inverted.end()), inverted.end());
    data->inverted = std::move(inverted);

    auto const & r = *data;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (r.c(i, j, k) != r.c(j, i, k))
                    throw amod_error(errc::not_ring_axioms,
                                     "not commutative: " + r.labels[i] + "*" + r.labels[j]);

    std::vector<int_vector> basis_products(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            basis_products[i * d + j] = int_vector(&r.table[(i * d + j) * d], &r.table[(i * d + j) * d] + d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto lhs = table_mul(r, basis_products[i * d + j], unit_vector(d, k));
                auto rhs = table_mul(r, unit_vector(d, i), basis_products[j * d + k]);
                if (lhs != rhs)
                    throw amod_error(errc::not_ring_axioms,
                                     "not associative on (" + r.labels[i] + ", " + r.labels[j] + ", " +
                                         r.labels[k] + ")");
            }
    for (std::size_t i = 0; i < d; ++i)
        if (table_mul(r, r.unit, unit_vector(d, i)) != unit_vector(d, i))
            throw amod_error(errc::not_ring_axioms, "unit does not fix " + r.labels[i]);

    for (std::size_t i = 0; i < d; ++i)
        if (r.unit == unit_vector(d, i))
            data->unit_index = i;

    return ring(std::move(data));
}

std::string const & ring::name() const { return data_->name; }
std::size_t ring::rank() const { return data_->rank; }
std::vector<std::string> const & ring::labels() const { return data_->labels; }
integer const & ring::constant(std::size_t i, std::size_t j, std::size_t k) const { return data_->c(i, j, k); }
int_vector const & ring::unit() const { return data_->unit; }
std::vector<long> const & ring::inverted() const { return data_->inverted; }
std::optional<std::size_t> ring::unit_index() const { return data_->unit_index; }

element ring::zero() const { return element(*this, int_vector(rank(), 0)); }
element ring::one() const { return element(*this, data_->unit); }
element ring::basis(std::size_t i) const { return element(*this, unit_vector(rank(), i)); }

element ring::from_integer(integer const & m) const
{
    int_vector v = data_->unit;
    for (auto & x : v)
        x *= m;
    return element(*this, std::move(v));
}

element ring::make(int_vector coords) const
{
    if (coords.size() != rank())
        throw amod_error(errc::invalid_argument, "coordinate vector has wrong length");
    return element(*this, std::move(coords));
}

integer ring::discriminant() const
{
    std::size_t const d = rank();
    // Tr(x) = trace of multiplication by x.
    auto trace = [&](int_vector const & x) {
        integer t = 0;
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i)
                if (x[i] != 0)
                    t += x[i] * data_->c(i, k, k);
        return t;
    };
    int_matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            gram(i, j) = trace(int_vector(&data_->table[(i * d + j) * d], &data_->table[(i * d + j) * d] + d));
    return determinant(gram);
}

std::string ring::format(int_vector const & coords) const
{
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        std::string term = coefficient_term(coords[i], data_->labels[i]);
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

/* ---- element -------------------------------------------------------- */

element::element(ring r, int_vector coords) : ring_(std::move(r)), coords_(std::move(coords))
{
    if (coords_.size() != ring_.rank())
        throw amod_error(errc::invalid_argument, "coordinate vector has wrong length");
}

bool element::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](integer const & x) { return x == 0; });
}

namespace {
void require_same(element const & a, element const & b)
{
    if (a.parent() != b.parent())
        throw amod_error(errc::ring_mismatch, "elements belong to different rings");
}
} // namespace

element element::operator+(element const & b) const
{
    element r = *this;
    r += b;
    return r;
}

element element::operator-(element const & b) const
{
    element r = *this;
    r -= b;
    return r;
}

element element::operator-() const
{
    element r = *this;
    for (auto & x : r.coords_)
        x = -x;
    return r;
}

element & element::operator+=(element const & b)
{
    require_same(*this, b);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += b.coords_[i];
    return *this;
}

element & element::operator-=(element const & b)
{
    require_same(*this, b);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= b.coords_[i];
    return *this;
}

element element::operator*(element const & b) const { return mul(*this, b); }

element element::operator*(integer const & m) const
{
    element r = *this;
    for (auto & x : r.coords_)
        x *= m;
    return r;
}

bool element::operator==(element const & b) const
{
    return ring_ == b.ring_ && coords_ == b.coords_;
}

std::optional<element> element::divided_by(integer const & m) const
{
    int_vector out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!mpz_divisible_p(coords_[i].get_mpz_t(), m.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(out[i].get_mpz_t(), coords_[i].get_mpz_t(), m.get_mpz_t());
    }
    return element(ring_, std::move(out));
}

element mul(element const & a, element const & b)
{
    require_same(a, b);
    ring const & r = a.parent();
    std::size_t const d = r.rank();
    int_vector out(d, 0);
    integer ab;
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0)
                continue;
            ab = a[i] * b[j];
            for (std::size_t k = 0; k < d; ++k) {
                integer const & c = r.constant(i, j, k);
                if (c != 0)
                    out[k] += ab * c;
            }
        }
    }
    return element(r, std::move(out));
}

element pow(element const & a, unsigned long n)
{
    element result = a.parent().one();
    element base = a;
    while (n > 0) {
        if (n & 1UL)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

element frobenius_defect(element const & a, long n)
{
    if (n <= 1)
        throw amod_error(errc::invalid_argument, "frobenius_defect requires n >= 2");
    return a - pow(a, static_cast<unsigned long>(n));
}

element random_element(ring const & r, std::mt19937_64 & rng)
{
    int_vector v(r.rank());
    for (auto & x : v)
        x = draw_uniform(rng, -9, 9);
    return element(r, std::move(v));
}

/* ---- constructors --------------------------------------------------- */

ring build_monogenic(std::vector<integer> const & minpoly, std::vector<long> inverted)
{
    if (minpoly.size() < 2)
        throw amod_error(errc::invalid_argument, "minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1)
        throw amod_error(errc::invalid_argument, "minimal polynomial must be monic");
    std::size_t const d = minpoly.size() - 1;

    // powers t^0 .. t^{2d-2} in the basis 1, t, ..., t^{d-1}
    std::vector<int_vector> powers;
    powers.push_back(unit_vector(d, 0));
    for (std::size_t e = 1; e + 1 < 2 * d; ++e) {
        int_vector const & prev = powers.back();
        int_vector next(d, 0);
        for (std::size_t k = 0; k + 1 < d; ++k)
            next[k + 1] = prev[k];
        integer top = prev[d - 1];
        for (std::size_t k = 0; k < d; ++k)
            next[k] -= top * minpoly[k];
        powers.push_back(std::move(next));
    }
    std::vector<integer> table(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                table[(i * d + j) * d + k] = powers[i + j][k];

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));

    std::ostringstream name;
    name << "Z[t]/(";
    for (std::size_t k = minpoly.size(); k-- > 0;) {
        if (minpoly[k] == 0)
            continue;
        if (name.str().size() > 7)
            name << (minpoly[k] < 0 ? " - " : " + ");
        else if (minpoly[k] < 0)
            name << "-";
        integer c = abs(minpoly[k]);
        if (k == 0 || c != 1)
            name << c;
        if (k >= 1)
            name << "t";
        if (k >= 2)
            name << "^" << k;
    }
    name << ")";
    return ring::from_table(name.str(), std::move(labels), std::move(table), unit_vector(d, 0),
                            std::move(inverted));
}

ring build_group_ring(long n, std::vector<long> inverted)
{
    if (n < 1)
        throw amod_error(errc::invalid_argument, "group order must be >= 1");
    std::size_t const d = static_cast<std::size_t>(n);
    std::vector<integer> table(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            table[(i * d + j) * d + (i + j) % d] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? "s" : "s^" + std::to_string(i));
    return ring::from_table("Z[C_" + std::to_string(n) + "]", std::move(labels), std::move(table),
                            unit_vector(d, 0), std::move(inverted));
}

ring build_quadratic_integers(long d, std::vector<long> inverted)
{
    if (d == 0 || d == 1)
        throw amod_error(errc::invalid_argument, "d must differ from 0 and 1");
    for (long q = 2; q * q <= std::labs(d); ++q)
        if (d % (q * q) == 0)
            throw amod_error(errc::invalid_argument, std::to_string(d) + " is not squarefree");
    long const r = ((d % 4) + 4) % 4;
    std::vector<integer> table(8, 0);
    auto c = [&](int i, int j, int k) -> integer & { return table[(i * 2 + j) * 2 + k]; };
    c(0, 0, 0) = 1;
    c(0, 1, 1) = 1;
    c(1, 0, 1) = 1;
    std::vector<std::string> labels{"1"};
    if (r == 1) {
        // w = (1 + sqrt d)/2, w^2 = w + (d - 1)/4
        c(1, 1, 0) = (d - 1) / 4;
        c(1, 1, 1) = 1;
        labels.push_back("(1+sqrt(" + std::to_string(d) + "))/2");
    } else {
        c(1, 1, 0) = d;
        labels.push_back("sqrt(" + std::to_string(d) + ")");
    }
    return ring::from_table("O_Q(sqrt(" + std::to_string(d) + "))", std::move(labels), std::move(table),
                            unit_vector(2, 0), std::move(inverted));
}

namespace {

using rat_poly = std::vector<rational>;

/// Product in Q[x]/(f), all polynomials of length deg f.
rat_poly rat_mul_mod(rat_poly const & a, rat_poly const & b, std::vector<rational> const & f_monic)
{
    std::size_t const n = f_monic.size() - 1;
    std::vector<rational> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] += a[i] * b[j];
    for (std::size_t e = prod.size(); e-- > n;) {
        rational top = prod[e];
        if (top == 0)
            continue;
        for (std::size_t k = 0; k <= n; ++k)
            prod[e - n + k] -= top * f_monic[k];
    }
    prod.resize(n);
    return prod;
}

/// Inverse of a square rational matrix (row-major); nullopt if singular.
std::optional<std::vector<std::vector<rational>>> rat_inverse(std::vector<std::vector<rational>> m)
{
    std::size_t const n = m.size();
    std::vector<std::vector<rational>> inv(n, std::vector<rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        rational s = 1 / m[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            m[col][k] *= s;
            inv[col][k] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            rational f = m[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

std::string default_label(std::vector<rational> const & v, std::size_t index)
{
    std::size_t nonzero = 0, at = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) {
            ++nonzero;
            at = k;
        }
    if (nonzero != 1)
        return "b" + std::to_string(index);
    rational q = v[at];
    std::string mono = at == 0 ? "1" : at == 1 ? "x" : "x^" + std::to_string(at);
    std::string num = q.get_num() == 1 ? "" : q.get_num() == -1 ? "-" : q.get_num().get_str() + "*";
    if (at == 0)
        return q.get_str();
    std::string out = num + mono;
    if (q.get_den() != 1)
        out += "/" + q.get_den().get_str();
    return out;
}

} // namespace

ring build_from_field_basis(std::vector<integer> const & minpoly,
                            std::vector<std::vector<rational>> const & basis,
                            std::vector<std::string> labels,
                            std::vector<long> inverted)
{
    if (minpoly.size() < 2 || minpoly.back() == 0)
        throw amod_error(errc::invalid_argument, "field polynomial must have degree >= 1");
    std::size_t const n = minpoly.size() - 1;
    if (basis.size() != n)
        throw amod_error(errc::invalid_argument, "need exactly deg(minpoly) basis vectors");
    for (auto const & v : basis)
        if (v.size() != n)
            throw amod_error(errc::invalid_argument, "basis vectors must have deg(minpoly) coordinates");

    std::vector<rational> f(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        f[k] = rational(minpoly[k]) / rational(minpoly[n]);

    // columns of bmat are the basis vectors
    std::vector<std::vector<rational>> bmat(n, std::vector<rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            bmat[r][c] = basis[c][r];
    auto inv = rat_inverse(bmat);
    if (!inv)
        throw amod_error(errc::invalid_argument, "basis vectors are not Q-linearly independent");

    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(default_label(basis[i], i));
    if (labels.size() != n)
        throw amod_error(errc::invalid_argument, "label count must equal rank");

    auto coordinates = [&](rat_poly const & v) {
        std::vector<rational> out(n, 0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                out[r] += (*inv)[r][c] * v[c];
        return out;
    };

    std::vector<integer> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto coords = coordinates(rat_mul_mod(basis[i], basis[j], f));
            for (std::size_t k = 0; k < n; ++k) {
                if (coords[k].get_den() != 1)
                    throw amod_error(errc::not_closed,
                                     "(" + labels[i] + ")*(" + labels[j] + ") has coordinate " +
                                         coords[k].get_str() + " at " + labels[k]);
                table[(i * n + j) * n + k] = coords[k].get_num();
                table[(j * n + i) * n + k] = coords[k].get_num();
            }
        }
    rat_poly one(n, 0);
    one[0] = 1;
    auto unit_coords = coordinates(one);
    int_vector unit(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (unit_coords[k].get_den() != 1)
            throw amod_error(errc::not_closed, "1 is not in the Z-span of the basis");
        unit[k] = unit_coords[k].get_num();
    }
    std::ostringstream name;
    name << "order in Q[x]/(";
    for (std::size_t k = 0; k <= n; ++k)
        name << (k ? "," : "") << minpoly[k];
    name << ")";
    return ring::from_table(name.str(), std::move(labels), std::move(table), std::move(unit),
                            std::move(inverted));
}

/* ---- F_p-algebras --------------------------------------------------- */

fp_algebra fp_algebra::from_table(std::string name,
                                  std::uint32_t p,
                                  std::vector<std::string> labels,
                                  std::vector<std::uint32_t> table,
                                  fp_vector unit)
{
    if (!is_prime(static_cast<long>(p)))
        throw amod_error(errc::not_prime, std::to_string(p) + " is not prime");
    if (p >= (1U << 15))
        throw amod_error(errc::invalid_argument, "characteristic must be below 2^15");
    std::size_t const d = labels.size();
    if (d == 0 || table.size() != d * d * d || unit.size() != d)
        throw amod_error(errc::not_ring_axioms, "F_p-algebra table has inconsistent dimensions");
    fp_algebra a;
    a.name_ = std::move(name);
    a.p_ = p;
    a.dim_ = d;
    a.labels_ = std::move(labels);
    a.table_ = std::move(table);
    for (auto & x : a.table_)
        x %= p;
    a.unit_ = std::move(unit);
    for (auto & x : a.unit_)
        x %= p;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (a.constant(i, j, k) != a.constant(j, i, k))
                    throw amod_error(errc::not_ring_axioms, "F_p-algebra is not commutative");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (a.mul(a.mul(a.basis(i), a.basis(j)), a.basis(k)) !=
                    a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k))))
                    throw amod_error(errc::not_ring_axioms, "F_p-algebra is not associative");
    for (std::size_t i = 0; i < d; ++i)
        if (a.mul(a.unit_, a.basis(i)) != a.basis(i))
            throw amod_error(errc::not_ring_axioms, "unit does not act as identity");
    return a;
}

fp_vector fp_algebra::basis(std::size_t i) const
{
    fp_vector v(dim_, 0);
    v[i] = 1;
    return v;
}

fp_vector fp_algebra::mul(fp_vector const & a, fp_vector const & b) const
{
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0)
                continue;
            std::uint64_t ab = static_cast<std::uint64_t>(a[i]) * b[j] % p_;
            std::uint32_t const * row = &table_[(i * dim_ + j) * dim_];
            for (std::size_t k = 0; k < dim_; ++k)
                acc[k] = (acc[k] + ab * row[k]) % p_;
        }
    }
    return fp_vector(acc.begin(), acc.end());
}

fp_vector fp_algebra::add(fp_vector const & a, fp_vector const & b) const
{
    fp_vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = (a[i] + b[i]) % p_;
    return out;
}

fp_vector fp_algebra::sub(fp_vector const & a, fp_vector const & b) const
{
    fp_vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = (a[i] + p_ - b[i]) % p_;
    return out;
}

fp_vector fp_algebra::pow(fp_vector const & a, unsigned long n) const
{
    fp_vector result = unit_;
    fp_vector base = a;
    while (n > 0) {
        if (n & 1UL)
            result = mul(result, base);
        n >>= 1;
        if (n > 0)
            base = mul(base, base);
    }
    return result;
}

fp_algebra reduce_mod_p(ring const & a, long p)
{
    if (!is_prime(p))
        throw amod_error(errc::not_prime, std::to_string(p) + " is not prime");
    std::size_t const d = a.rank();
    std::vector<std::uint32_t> table(d * d * d);
    integer r;
    auto reduce = [&](integer const & x) {
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
        return static_cast<std::uint32_t>(r.get_ui());
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                table[(i * d + j) * d + k] = reduce(a.constant(i, j, k));
    fp_vector unit(d);
    for (std::size_t k = 0; k < d; ++k)
        unit[k] = reduce(a.unit()[k]);
    return fp_algebra::from_table(a.name() + " / " + std::to_string(p), static_cast<std::uint32_t>(p),
                                  a.labels(), std::move(table), std::move(unit));
}

fp_algebra build_fp_monogenic(std::uint32_t p, std::vector<long> const & minpoly, std::string name)
{
    if (minpoly.size() < 2)
        throw amod_error(errc::invalid_argument, "polynomial must have degree >= 1");
    long const lp = static_cast<long>(p);
    if (((minpoly.back() % lp) + lp) % lp != 1)
        throw amod_error(errc::invalid_argument, "polynomial must be monic mod p");
    std::size_t const d = minpoly.size() - 1;
    std::vector<std::vector<long>> powers;
    powers.push_back(std::vector<long>(d, 0));
    powers[0][0] = 1;
    for (std::size_t e = 1; e + 1 < 2 * d; ++e) {
        auto const & prev = powers.back();
        std::vector<long> next(d, 0);
        for (std::size_t k = 0; k + 1 < d; ++k)
            next[k + 1] = prev[k];
        long top = prev[d - 1];
        for (std::size_t k = 0; k < d; ++k)
            next[k] = (((next[k] - top * minpoly[k]) % lp) + lp) % lp;
        powers.push_back(std::move(next));
    }
    std::vector<std::uint32_t> table(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                table[(i * d + j) * d + k] = static_cast<std::uint32_t>(powers[i + j][k]);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    fp_vector unit(d, 0);
    unit[0] = 1;
    if (name.empty()) {
        name = "F_" + std::to_string(p) + "[t]/(";
        for (std::size_t k = 0; k <= d; ++k)
            name += (k ? "," : "") + std::to_string(minpoly[k]);
        name += ")";
    }
    return fp_algebra::from_table(std::move(name), p, std::move(labels), std::move(table), std::move(unit));
}

namespace {

// polynomials over F_p, constant term first, trimmed
std::vector<long> poly_mod(std::vector<long> a, std::vector<long> const & b, long p)
{
    // b monic
    while (a.size() >= b.size()) {
        long top = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] = (((a[shift + k] - top * b[k]) % p) + p) % p;
        a.pop_back();
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

std::vector<long> monic_from_index(long index, int degree, long p)
{
    std::vector<long> f(static_cast<std::size_t>(degree) + 1, 0);
    for (int k = 0; k < degree; ++k) {
        f[static_cast<std::size_t>(k)] = index % p;
        index /= p;
    }
    f[static_cast<std::size_t>(degree)] = 1;
    return f;
}

bool irreducible(std::vector<long> const & f, long p)
{
    int const degree = static_cast<int>(f.size()) - 1;
    for (int g_deg = 1; 2 * g_deg <= degree; ++g_deg) {
        long count = 1;
        for (int k = 0; k < g_deg; ++k)
            count *= p;
        for (long idx = 0; idx < count; ++idx)
            if (poly_mod(f, monic_from_index(idx, g_deg, p), p).empty())
                return false;
    }
    return true;
}

} // namespace

fp_algebra build_finite_field(std::uint32_t p, int degree)
{
    if (degree < 1)
        throw amod_error(errc::invalid_argument, "field degree must be >= 1");
    long const lp = static_cast<long>(p);
    if (!is_prime(lp))
        throw amod_error(errc::not_prime, std::to_string(p) + " is not prime");
    long count = 1;
    for (int k = 0; k < degree; ++k)
        count *= lp;
    for (long idx = 0; idx < count; ++idx) {
        auto f = monic_from_index(idx, degree, lp);
        if (degree == 1 || irreducible(f, lp)) {
            long q = count;
            return build_fp_monogenic(p, f, "F_" + std::to_string(q));
        }
    }
    throw amod_error(errc::invalid_argument, "no irreducible polynomial found");
}

} // namespace amod
