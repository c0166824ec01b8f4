#include "doctest.h"

#include <random>

#include "amod/u_homology.hpp"

using namespace amod;

namespace {

std::vector<long> prime_powers_upto(long limit)
{
    std::vector<long> out;
    for (long n = 2; n <= limit; ++n)
        if (prime_power(n))
            out.push_back(n);
    return out;
}

bool composes_to_zero(fp_matrix const & a, fp_matrix const & b) { return (a * b).is_zero(); }

} // namespace

TEST_CASE("expand_c")
{
    ring zi = build_monogenic({1, 0, 1});
    CHECK(expand_c(zi.zero(), 2) == fp_vector{0, 0});
    CHECK(expand_c(zi.basis(1), 2) == fp_vector{0, 1});
    CHECK(expand_c(zi.make({3, 2}), 2) == fp_vector{1, 0});
    CHECK(expand_c(zi.make({-1, 2}), 3) == fp_vector{2, 2});
}

TEST_CASE("low degree boundaries")
{
    fp_algebra zi2 = reduce_mod_p(build_monogenic({1, 0, 1}), 2);
    fp_matrix d1 = boundary_matrix(zi2, 2, 1);
    // column (i1 = 1, r = 0) is c_i; its image is i - i^2 = 1 + i
    CHECK(d1(0, 2) == 1);
    CHECK(d1(1, 2) == 1);

    // delta_1(c_1 (x) c_1) = c_1
    fp_matrix d2 = boundary_matrix(zi2, 2, 2);
    CHECK(d2(0, 0) == 1);
    for (std::size_t r = 1; r < d2.rows(); ++r)
        CHECK(d2(r, 0) == 0);

    // Z[C_3], n = 2: delta_1(c_s (x) c_s) = s c_s - c_{s^2} + s^2 c_s
    fp_algebra c3 = reduce_mod_p(build_group_ring(3), 2);
    fp_matrix e2 = boundary_matrix(c3, 2, 2);
    std::size_t const col = (1 * 3 + 1) * 3 + 0;
    // U_1 index (i1, r): s c_s -> (1, 1), s^2 c_s -> (1, 2), c_{s^2} -> (2, 0)
    CHECK(e2(1 * 3 + 1, col) == 1);
    CHECK(e2(1 * 3 + 2, col) == 1);
    CHECK(e2(2 * 3 + 0, col) == 1);
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < e2.rows(); ++r)
        nonzero += e2(r, col) != 0;
    CHECK(nonzero == 3);
}

TEST_CASE("finite field examples")
{
    fp_algebra f4 = build_finite_field(2, 2);
    auto h = u_homology(f4, 2, 1);
    CHECK(h.dims == std::vector<std::size_t>{0, 0});
    h = u_homology(f4, 4, 1);
    CHECK(h.dims == std::vector<std::size_t>{2, 0});
    fp_algebra f3 = build_finite_field(3, 1);
    CHECK(u_homology(f3, 3, 1).dims == std::vector<std::size_t>{1, 0});
    CHECK_THROWS_AS(u_homology(f3, 6, 1), amod_error);
    // nu(n) different from the characteristic
    CHECK(u_homology(f3, 4, 1).dims == std::vector<std::size_t>{0, 0});
}

TEST_CASE("finite fields: H_1 vanishes, H_0 detects powers of q")
{
    for (auto [p, f] : {std::pair<std::uint32_t, int>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        fp_algebra k = build_finite_field(p, f);
        for (long n : prime_powers_upto(32)) {
            if (nu(n) != static_cast<long>(p))
                continue;
            auto pk = prime_power(n);
            auto h = u_homology(k, n, 1);
            CHECK(h.dims[1] == 0);
            bool const power_of_q = pk->second % f == 0;
            CHECK(h.dims[0] == (power_of_q ? static_cast<std::size_t>(f) : 0u));
        }
    }
}

TEST_CASE("boundaries compose to zero")
{
    std::vector<ring> rings = {build_monogenic({0, 1}), build_monogenic({1, 0, 1}), build_monogenic({5, 0, 1}),
                               build_group_ring(2), build_group_ring(3), build_quadratic_integers(-3),
                               build_quadratic_integers(13)};
    for (auto const & r : rings)
        for (long n : prime_powers_upto(32)) {
            fp_algebra a = reduce_mod_p(r, nu(n));
            fp_matrix d1 = boundary_matrix(a, n, 1);
            fp_matrix d2 = boundary_matrix(a, n, 2);
            fp_matrix d3 = boundary_matrix(a, n, 3);
            CHECK(composes_to_zero(d1, d2));
            CHECK(composes_to_zero(d2, d3));
        }
    fp_algebra f9 = build_finite_field(3, 2);
    CHECK(composes_to_zero(boundary_matrix(f9, 3, 1), boundary_matrix(f9, 3, 2)));
}

TEST_CASE("simplicial identities")
{
    std::mt19937_64 rng(314);
    std::vector<std::pair<fp_algebra, long>> cases = {
        {reduce_mod_p(build_monogenic({1, 0, 1}), 2), 2},
        {reduce_mod_p(build_monogenic({5, 0, 1}), 3), 9},
        {reduce_mod_p(build_group_ring(3), 2), 4},
        {build_finite_field(3, 2), 3},
    };
    for (auto const & [a, n] : cases) {
        auto failures = simplicial_identity_check(a, n, 3, rng, 2);
        for (auto const & f : failures)
            MESSAGE(a.name() << " n=" << n << ": " << f.family << " in degree " << f.degree);
        CHECK(failures.empty());
    }
    // d_j s_j = id on 20 samples in every degree up to 3
    fp_algebra a = reduce_mod_p(build_quadratic_integers(-3), 2);
    for (int sample = 0; sample < 20; ++sample)
        for (int m = 0; m <= 3; ++m) {
            fp_vector v(u_dimension(a.dim(), m));
            for (auto & x : v)
                x = static_cast<std::uint32_t>(draw_uniform(rng, 0, 1));
            for (int j = 0; j <= m; ++j)
                CHECK(u_face(a, 2, m + 1, j, u_degeneracy(a, m, j, v)) == v);
        }
}

TEST_CASE("local decomposition")
{
    // Z[i]/2 = F_2[x]/(x+1)^2: one local factor, residue degree 1
    auto l = local_decomposition(reduce_mod_p(build_monogenic({1, 0, 1}), 2));
    REQUIRE(l.size() == 1);
    CHECK(l[0].residue_degree == 1);
    CHECK(l[0].dimension == 2);
    // Z[i]/5 splits, Z[i]/3 is F_9
    CHECK(local_decomposition(reduce_mod_p(build_monogenic({1, 0, 1}), 5)).size() == 2);
    auto inert = local_decomposition(reduce_mod_p(build_monogenic({1, 0, 1}), 3));
    REQUIRE(inert.size() == 1);
    CHECK(inert[0].residue_degree == 2);
    // Z[C_6]/2 = F_2[s]/(s^3-1)^2 has factors of residue degree 1 and 2
    auto c6 = local_decomposition(reduce_mod_p(build_group_ring(6), 2));
    REQUIRE(c6.size() == 2);
    CHECK(c6[0].residue_degree + c6[1].residue_degree == 3);
    CHECK(nilradical(reduce_mod_p(build_group_ring(6), 2)).size() == 3);
}

TEST_CASE("surjectivity criterion and rigidity on quadratic rings")
{
    for (long d : {-1L, -2L, -3L, -5L, -6L, 13L}) {
        ring r = build_quadratic_integers(d);
        for (long n : prime_powers_upto(27)) {
            fp_algebra a = reduce_mod_p(r, nu(n));
            auto h = u_homology(a, n, 0);
            CHECK((h.dims[0] == 0) == surjectivity_predicted(a, n));
            CHECK(h.dims[0] == u0_from_residue_fields(a, n));
        }
    }
}
