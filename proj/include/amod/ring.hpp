#ifndef AMOD_RING_HPP
#define AMOD_RING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "amod/errors.hpp"

namespace amod {

using integer = mpz_class;
using rational = mpq_class;
using int_vector = std::vector<integer>;

/* ---- small integer helpers ------------------------------------------ */

bool is_prime(long n);

/// (p, k) with n = p^k, k >= 1, or nullopt when n is not a prime power.
std::optional<std::pair<long, int>> prime_power(long n);

/// p when n is a power of the prime p, 1 otherwise. Rejects n <= 1.
long nu(long n);

/// Deterministic uniform draw in [lo, hi] from the raw mt19937_64 stream.
/// (std::uniform_int_distribution is not portable across standard
/// libraries, and reports must be byte-identical for a fixed seed.)
long draw_uniform(std::mt19937_64 & rng, long lo, long hi);

/* ---- rings presented as free Z-modules ------------------------------ */

namespace detail {
struct ring_data;
}

class element;

/// A commutative ring whose underlying abelian group is free of finite rank
/// d, given by integer structure constants c[i][j][k] (coefficient of b_k in
/// b_i * b_j). Copies share the same immutable table.
class ring {
  public:
    /// Validates commutativity, associativity on every basis triple, the
    /// unit, and label distinctness. Throws errc::not_ring_axioms.
    static ring from_table(std::string name,
                           std::vector<std::string> labels,
                           std::vector<integer> table,
                           int_vector unit,
                           std::vector<long> inverted = {});

    std::string const & name() const;
    std::size_t rank() const;
    std::vector<std::string> const & labels() const;
    integer const & constant(std::size_t i, std::size_t j, std::size_t k) const;
    int_vector const & unit() const;
    std::vector<long> const & inverted() const;

    /// Index of the basis element equal to 1, if the unit is a basis vector.
    std::optional<std::size_t> unit_index() const;

    element zero() const;
    element one() const;
    element basis(std::size_t i) const;
    element from_integer(integer const & m) const;
    element make(int_vector coords) const;

    /// det(Tr(b_i b_j)).
    integer discriminant() const;

    std::string format(int_vector const & coords) const;

    /// Same underlying table (identity, not isomorphism).
    bool operator==(ring const & other) const { return data_ == other.data_; }
    bool operator!=(ring const & other) const { return data_ != other.data_; }

  private:
    explicit ring(std::shared_ptr<detail::ring_data const> d) : data_(std::move(d)) {}
    std::shared_ptr<detail::ring_data const> data_;
};

class element {
  public:
    element(ring r, int_vector coords);

    ring const & parent() const { return ring_; }
    int_vector const & coords() const { return coords_; }
    integer const & operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }

    bool is_zero() const;
    std::string str() const { return ring_.format(coords_); }

    element operator+(element const & b) const;
    element operator-(element const & b) const;
    element operator-() const;
    element operator*(element const & b) const;
    element operator*(integer const & m) const;
    element & operator+=(element const & b);
    element & operator-=(element const & b);

    bool operator==(element const & b) const;
    bool operator!=(element const & b) const { return !(*this == b); }

    /// Exact division of every coordinate by m; nullopt if some coordinate
    /// is not divisible.
    std::optional<element> divided_by(integer const & m) const;

  private:
    ring ring_;
    int_vector coords_;
};

element mul(element const & a, element const & b);
element pow(element const & a, unsigned long n);

/// a - a^n.
element frobenius_defect(element const & a, long n);

/// Coordinates uniform in [-9, 9].
element random_element(ring const & r, std::mt19937_64 & rng);

/* ---- constructors for the ring families ----------------------------- */

/// Z[t]/(f), f monic, coefficients constant term first.
ring build_monogenic(std::vector<integer> const & minpoly,
                     std::vector<long> inverted = {});

/// Z[C_n] with basis 1, s, ..., s^{n-1}.
ring build_group_ring(long n, std::vector<long> inverted = {});

/// Ring of integers of Q(sqrt(d)), d squarefree, d != 0, 1.
ring build_quadratic_integers(long d, std::vector<long> inverted = {});

/// Order spanned by the given rational vectors of Q[x]/(minpoly) (power
/// basis coordinates). Throws errc::not_closed naming the first pair whose
/// product leaves the Z-span.
ring build_from_field_basis(std::vector<integer> const & minpoly,
                            std::vector<std::vector<rational>> const & basis,
                            std::vector<std::string> labels = {},
                            std::vector<long> inverted = {});

/* ---- finite-dimensional commutative F_p-algebras --------------------- */

using fp_vector = std::vector<std::uint32_t>;

class fp_algebra {
  public:
    static fp_algebra from_table(std::string name,
                                 std::uint32_t p,
                                 std::vector<std::string> labels,
                                 std::vector<std::uint32_t> table,
                                 fp_vector unit);

    std::string const & name() const { return name_; }
    std::uint32_t characteristic() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::vector<std::string> const & labels() const { return labels_; }
    std::uint32_t constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return table_[(i * dim_ + j) * dim_ + k];
    }
    fp_vector const & unit() const { return unit_; }

    fp_vector basis(std::size_t i) const;
    fp_vector mul(fp_vector const & a, fp_vector const & b) const;
    fp_vector add(fp_vector const & a, fp_vector const & b) const;
    fp_vector sub(fp_vector const & a, fp_vector const & b) const;
    fp_vector pow(fp_vector const & a, unsigned long n) const;

  private:
    std::string name_;
    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint32_t> table_;
    fp_vector unit_;
};

/// Reduce the structure constants of a modulo the prime p (A/pA).
fp_algebra reduce_mod_p(ring const & a, long p);

/// F_p[t]/(f) for f monic over F_p (coefficients constant term first).
fp_algebra build_fp_monogenic(std::uint32_t p, std::vector<long> const & minpoly,
                              std::string name = {});

/// The field with p^degree elements, via the lexicographically first monic
/// irreducible polynomial of that degree.
fp_algebra build_finite_field(std::uint32_t p, int degree);

} // namespace amod

#endif
