#ifndef AMOD_U_HOMOLOGY_HPP
#define AMOD_U_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "amod/fp_linalg.hpp"
#include "amod/ring.hpp"

namespace amod {

// The complex U_*(A/p; n). U_0 = A/p; for m >= 1 the basis of U_m is the
// family of tensors b_r c_{b_{i1}} ... c_{b_{im}}, stored at index
// ((i1 d + i2) d + ... + im) d + r. All maps are F_p-linear.

std::size_t u_dimension(std::size_t d, int m);

/// Coordinates of c_a in the F_p-basis c_{b_i}: the coordinates of a mod p.
fp_vector expand_c(element const & a, long p);

/// Face d_i : U_m -> U_{m-1}, 0 <= i <= m, m >= 1.
fp_vector u_face(fp_algebra const & a, long n, int m, int i, fp_vector const & v);

/// Degeneracy s_i : U_m -> U_{m+1}, 0 <= i <= m.
fp_vector u_degeneracy(fp_algebra const & a, int m, int i, fp_vector const & v);

/// Matrix of the face or degeneracy map.
fp_matrix face_matrix(fp_algebra const & a, long n, int m, int i);
fp_matrix degeneracy_matrix(fp_algebra const & a, int m, int i);

/// Alternating sum of faces, U_m -> U_{m-1} (dim U_{m-1} rows).
fp_matrix boundary_matrix(fp_algebra const & a, long n, int m);

struct homology_report {
    long p = 0;
    long n = 0;
    /// dims[m] = dim H_m, m = 0..max_h.
    std::vector<std::size_t> dims;
};

/// Throws errc::non_prime_power when nu(n) = 1. When nu(n) differs from the
/// characteristic every group vanishes.
homology_report u_homology(fp_algebra const & a, long n, int max_h);

/// Via A/p with p = nu(n).
homology_report u_homology(ring const & a, long n, int max_h);

struct identity_failure {
    std::string family;
    int degree = 0;
};

/// Checks the five families of simplicial identities on random vectors in
/// every degree up to max_degree. Returns the failures (empty on success).
std::vector<identity_failure> simplicial_identity_check(fp_algebra const & a, long n, int max_degree,
                                                        std::mt19937_64 & rng, int trials = 4);

/* ---- local structure ------------------------------------------------- */

struct local_factor {
    fp_vector idempotent;
    std::size_t dimension = 0;  // dim e A
    int residue_degree = 0;     // [e A / rad : F_p]
};

/// Primitive idempotents of the F_p-algebra with their local data.
std::vector<local_factor> local_decomposition(fp_algebra const & a);

/// Basis of the nilradical.
std::vector<fp_vector> nilradical(fp_algebra const & a);

/// dim U_0 predicted from the residue fields: the sum of dim U_0 of
/// F_{p^f} at n over the local factors.
std::size_t u0_from_residue_fields(fp_algebra const & a, long n);

/// H_0 = 0 iff no residue degree divides m, for n = p^m.
bool surjectivity_predicted(fp_algebra const & a, long n);

} // namespace amod

#endif
