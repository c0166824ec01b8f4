#ifndef AMOD_LAZARD_HPP
#define AMOD_LAZARD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amod/ideals.hpp"
#include "amod/ring.hpp"

namespace amod {

/// The suspended Rees algebra of I in degree 2(n-1): one generator when I
/// is principal, else two generators bound to a two-generator pair with the
/// computed linear syzygies as relations.
struct rees_presentation {
    long n = 0;
    long degree = 0;
    std::vector<std::string> generator_names;
    /// Images of the generators in A (one or two elements).
    std::vector<element> generator_images;
    std::vector<syzygy> relations;
    /// degree_ok[k]: the degree-k component is torsion free, its relation
    /// lattice is the full kernel of evaluation, and its image is I^k.
    std::vector<bool> degree_ok;

    bool graded_check_passed() const;
};

/// Principal ideals get a single generator when verdict carries one.
rees_presentation make_rees_presentation(ideal const & i, long n, principality_verdict const & verdict,
                                         int degree_check = 5);

/// Check of one degree-k component: (relations == ker evaluation, image == I^k).
bool rees_degree_check(rees_presentation const & pres, ideal const & i, int k);

struct lazard_entry {
    long n = 0;
    long nu = 1;
    long degree = 0;
    ideal fundamental;
    principality_verdict verdict;
    rees_presentation rees;
    std::optional<std::size_t> u0_dim;
    std::optional<std::size_t> u1_dim;
    std::optional<bool> injective;
    /// p lies in the inverted set of the ring.
    bool after_inverting = false;
};

struct lazard_options {
    long n_max = 12;
    int degree_check = 5;
    long principality_bound = 50;
    std::uint64_t seed = 0;
};

struct lazard_report {
    ring base;
    long n_max = 0;
    std::vector<lazard_entry> entries;
    /// Every entry is a single polynomial generator.
    bool polynomial = false;
    /// U_0 = U_1 = 0 at every prime power n <= n_max.
    bool polynomial_by_fundamental_comparison = false;
    bool injectivity_verified = true;
    std::vector<std::string> warnings;
};

lazard_report assemble_LA(ring const & r, lazard_options const & opts);

struct quadratic_case {
    long p = 0;
    int m = 0;
    principality_verdict verdict;
};

struct quadratic_report {
    long d = 0;
    integer discriminant;
    std::vector<long> ramified;
    /// Primes with a fundamental ideal not shown principal.
    std::vector<long> bad;
    std::vector<quadratic_case> cases;
    /// Every certified nonprincipal case sits at a ramified prime.
    bool nonprincipal_only_at_ramified = true;
};

quadratic_report classify_quadratic(long d, long p_bound, int m_bound, long principality_bound = 50);

struct group_ring_case {
    long p = 0;
    int m = 0;
    bool congruent_to_one = false; // p^m = 1 mod n
    bool matches = false;          // I_{p^m} == (p, 1 - s)
    long gcd_exponent = 1;         // g = gcd(p^m - 1, n)
    bool matches_gcd_form = false; // I_{p^m} == (p, 1 - s^g)
    std::vector<int_vector> ideal_hnf_rows;
    /// p x - (1 - s) y lies in the syzygy module of x -> 1 - s, y -> p.
    bool relation_holds = false;
    /// Number of A-generators of that syzygy module.
    std::size_t syzygy_generators = 0;
};

struct group_ring_report {
    long n = 0;
    std::vector<group_ring_case> cases;
};

group_ring_report verify_group_ring(long n, long p_bound, int m_bound);

} // namespace amod

#endif
