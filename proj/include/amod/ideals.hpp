#ifndef AMOD_IDEALS_HPP
#define AMOD_IDEALS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amod/lattice.hpp"
#include "amod/ring.hpp"

namespace amod {

/// An ideal of A stored as its canonical Z-lattice: the columns of the HNF
/// basis (d rows, one column per lattice basis vector).
class ideal {
  public:
    ring const & parent() const { return ring_; }
    int_matrix const & hnf_basis() const { return hnf_; }
    std::vector<element> const & witnesses() const { return witnesses_; }

    std::size_t lattice_rank() const { return hnf_.cols(); }
    bool full_rank() const { return hnf_.cols() == ring_.rank(); }
    bool is_unit() const;

    bool contains(element const & a) const;

    /// Closure under multiplication by every basis element.
    bool is_closed() const;

    /// HNF rows, for reports.
    std::vector<int_vector> hnf_rows() const;

    bool operator==(ideal const & other) const;
    bool operator!=(ideal const & other) const { return !(*this == other); }

  private:
    ideal(ring r, int_matrix hnf, std::vector<element> witnesses)
        : ring_(std::move(r)), hnf_(std::move(hnf)), witnesses_(std::move(witnesses))
    {}

    friend ideal ideal_from_generators(ring const &, std::vector<element>);
    friend ideal ideal_product(ideal const &, ideal const &);

    ring ring_;
    int_matrix hnf_;
    std::vector<element> witnesses_;
};

/// Columns a*b_j, j = 0..d-1.
int_matrix multiplication_matrix(element const & a);

/// Throws errc::zero_ideal when every generator is zero.
ideal ideal_from_generators(ring const & r, std::vector<element> gens);

/// (nu(n), b_i - b_i^n for every basis element b_i).
ideal fundamental_ideal(ring const & r, long n);

ideal ideal_product(ideal const & a, ideal const & b);
ideal ideal_power(ideal const & a, unsigned k);
bool ideal_equal(ideal const & a, ideal const & b);

/// |A / I|; nullopt when I is not of full rank.
std::optional<integer> ideal_norm(ideal const & a);

/// |det(multiplication by a)|.
integer element_norm(element const & a);

struct principality_verdict {
    enum class status { principal, not_principal_certified, no_generator_within_bound };
    enum class method { definite_form_enumeration, bounded_search };

    status verdict = status::no_generator_within_bound;
    method how = method::bounded_search;
    std::optional<element> generator;
    long bound = 0;

    bool is_principal() const { return verdict == status::principal; }
    /// "yes", "no", or "unknown(<bound>)".
    std::string label() const;
};

/// True when A has rank 2 and a positive-definite norm form.
bool is_imaginary_quadratic(ring const & r);

/// Complete decision on imaginary quadratic rings; elsewhere an exhaustive
/// search of the elements of I with every coordinate in [-bound, bound]
/// (radius doubling, so the reported generator has the smallest sup-norm
/// radius in the sequence 1, 2, 4, ..., bound).
principality_verdict is_principal(ideal const & a, long bound);

/// (g1, g2) generating I: g1 is the least positive rational integer in I,
/// g2 the first hit among the HNF columns and then integer combinations of
/// them with coefficients in growing boxes up to the ceiling. Throws
/// errc::unreduced when the scan is exhausted.
std::pair<element, element> two_generator_reduction(ideal const & a, long ceiling = 10);

/// Least positive integer m with m*1 in I, or nullopt if there is none.
std::optional<integer> least_positive_integer(ideal const & a);

using syzygy = std::pair<element, element>;

/// A-module generators of {(u, v) : u g1 + v g2 = 0}, extracted greedily in
/// HNF order from the Z-kernel lattice. Throws errc::zero_ideal when both
/// inputs are zero.
std::vector<syzygy> linear_syzygies(element const & g1, element const & g2);

/// Z-kernel lattice of (u, v) -> u g1 + v g2 as columns in Z^{2d}.
int_matrix syzygy_lattice(element const & g1, element const & g2);

} // namespace amod

#endif
