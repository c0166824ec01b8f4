#ifndef AMOD_DRINFELD_HPP
#define AMOD_DRINFELD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amod/lattice.hpp"
#include "amod/ring.hpp"

namespace amod {

// The module generated over A by d and the symbols c_a, modulo
//   d (a - a^n) = nu c_a,
//   c_{a+b} - c_a - c_b = d (a^n + b^n - (a+b)^n) / nu,
//   a c_b + b^n c_a = c_{ab},
// presented on the generators d and c_b (b a basis element other than 1).
// An A-linear combination of generators is a vector of coefficients in A;
// over Z it is flattened to index g*rank + j for the coefficient of b_j on
// generator g.

using a_combination = std::vector<element>;

class generator_set {
  public:
    generator_set(ring r, long n);

    ring const & parent() const { return ring_; }
    long n() const { return n_; }
    long nu_n() const { return nu_; }

    /// d first, then one c per non-unit basis element.
    std::size_t size() const { return 1 + c_basis_.size(); }
    std::vector<std::size_t> const & c_basis() const { return c_basis_; }
    std::vector<std::string> names() const;

    a_combination zero() const;
    a_combination d_symbol() const;

    /// Generator slot of c_{b_i}, or -1 when b_i is the unit.
    long c_slot(std::size_t basis_index) const { return slot_[basis_index]; }

    int_vector flatten(a_combination const & v) const;
    std::size_t z_rank() const { return size() * ring_.rank(); }

  private:
    ring ring_;
    long n_;
    long nu_;
    std::vector<std::size_t> c_basis_;
    std::vector<long> slot_;
};

/// c_a written in the generators. Throws errc::divisibility_violation when a
/// correction term is not divisible by nu(n).
a_combination rewrite_c(generator_set const & gens, element const & a);

struct drinfeld_presentation {
    generator_set generators;
    /// Echelon basis of the Z-span of all harvested relation rows.
    row_lattice relations;
    std::size_t harvested_rows = 0;
    std::size_t sample = 0;
    /// Invariants of Z^N / relations (non-unit factors, then zeros).
    std::vector<integer> module_invariants;
    /// rank x N matrix of sigma on the Z-generators.
    int_matrix sigma;
};

/// Harvests relations from every basis element, basis pair, overlap
/// (b_i b_j, b_k) and a seeded sample of random elements, then repeats with
/// a doubled sample. Throws errc::saturation_failure when the invariants of
/// the presented module change.
drinfeld_presentation harvest_presentation(ring const & r, long n, std::size_t sample = 64,
                                           std::uint64_t seed = 0);

struct sigma_report {
    bool well_defined = false;
    bool injective = false;
    int_matrix image_hnf;
    bool image_is_fundamental_ideal = false;
    std::vector<integer> coker_invariants;
    /// Invariants of ker sigma on the presented module.
    std::vector<integer> kernel_invariants;
};

sigma_report sigma_analysis(drinfeld_presentation const & pres);

} // namespace amod

#endif
