#include "doctest.h"

#include <random>

#include "amod/ring.hpp"

using namespace amod;

namespace {

ring quartic()
{
    return build_from_field_basis({18, 0, 0, 0, 1},
                                  {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, rational(1, 3), 0}, {0, 0, 0, rational(1, 3)}},
                                  {"1", "a", "a^2/3", "a^3/3"});
}

// Independent oracle: multiply in Q[x]/(x^4 + 18) on power-basis coordinates.
std::vector<rational> qmul(std::vector<rational> const & a, std::vector<rational> const & b)
{
    std::vector<rational> full(7, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            full[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    for (int k = 6; k >= 4; --k) {
        full[static_cast<std::size_t>(k - 4)] -= 18 * full[static_cast<std::size_t>(k)];
        full[static_cast<std::size_t>(k)] = 0;
    }
    full.resize(4);
    return full;
}

} // namespace

TEST_CASE("nu")
{
    CHECK(nu(9) == 3);
    CHECK(nu(6) == 1);
    CHECK(nu(2) == 2);
    CHECK(nu(32) == 2);
    CHECK(nu(12) == 1);
    CHECK_THROWS_AS(nu(1), amod_error);
    for (long n = 2; n < 500; ++n) {
        long v = nu(n);
        CHECK((v == 1 || is_prime(v)));
    }
}

TEST_CASE("multiplication examples")
{
    ring zi = build_monogenic({1, 0, 1});
    CHECK(zi.basis(1) * zi.basis(1) == zi.from_integer(-1));

    ring z5 = build_monogenic({5, 0, 1});
    CHECK(z5.basis(1) * z5.basis(1) == z5.from_integer(-5));

    ring q = quartic();
    CHECK(q.basis(2) * q.basis(2) == q.from_integer(-2));
    CHECK(pow(q.basis(1), 4) == q.from_integer(-18));
    CHECK(q.basis(3) * q.basis(3) == q.basis(2) * integer(-6));
}

TEST_CASE("quartic order against rational arithmetic")
{
    ring q = quartic();
    std::vector<std::vector<rational>> basis = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, rational(1, 3), 0}, {0, 0, 0, rational(1, 3)}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            auto prod = qmul(basis[i], basis[j]);
            std::vector<rational> back(4, 0);
            element e = q.basis(i) * q.basis(j);
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t c = 0; c < 4; ++c)
                    back[c] += rational(e[k]) * basis[k][c];
            CHECK(back == prod);
        }
}

TEST_CASE("pow and frobenius defect")
{
    ring c2 = build_group_ring(2);
    CHECK(pow(c2.one() + c2.basis(1), 3) == c2.make({4, 4}));
    ring q = quartic();
    CHECK(pow(q.basis(3), 0) == q.one());

    ring zi = build_monogenic({1, 0, 1});
    CHECK(frobenius_defect(zi.basis(1), 2) == zi.make({1, 1}));
    CHECK(frobenius_defect(zi.one(), 7).is_zero());

    ring c3 = build_group_ring(3);
    CHECK(frobenius_defect(c3.basis(1), 4).is_zero());
    CHECK_THROWS_AS(frobenius_defect(c3.basis(1), 1), amod_error);
}

TEST_CASE("ring families")
{
    ring eis = build_monogenic({1, -1, 1});
    CHECK(eis.basis(1) * eis.basis(1) == eis.basis(1) - eis.one());

    ring c4 = build_group_ring(4);
    CHECK(c4.basis(2) * c4.basis(3) == c4.basis(1));
    CHECK(c4.rank() == 4);

    ring w = build_quadratic_integers(-3);
    CHECK(w.basis(1) * w.basis(1) == w.basis(1) - w.one());
    ring m5 = build_quadratic_integers(-5);
    CHECK(m5.basis(1) * m5.basis(1) == m5.from_integer(-5));
    ring i = build_quadratic_integers(-1);
    CHECK(i.basis(1) * i.basis(1) == i.from_integer(-1));
    CHECK(m5.discriminant() == -20);
    CHECK(w.discriminant() == -3);
    CHECK(build_quadratic_integers(13).discriminant() == 13);
    CHECK_THROWS_AS(build_quadratic_integers(-4), amod_error);
    CHECK_THROWS_AS(build_group_ring(0), amod_error);
}

TEST_CASE("field basis closure")
{
    try {
        build_from_field_basis({5, 0, 1}, {{1, 0}, {0, rational(1, 2)}});
        FAIL("expected NotClosed");
    } catch (amod_error const & e) {
        CHECK(e.code() == errc::not_closed);
    }
    ring a = build_from_field_basis({1, 0, 1}, {{1, 0}, {0, 1}});
    ring b = build_monogenic({1, 0, 1});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(a.constant(i, j, k) == b.constant(i, j, k));
}

TEST_CASE("table validation")
{
    // x*x = 1 + x, but 1 is not a unit for x: 1*x = 0
    std::vector<integer> bad = {1, 0, 0, 0, 1, 0, 1, 1};
    CHECK_THROWS_AS(ring::from_table("bad", {"1", "x"}, bad, {1, 0}), amod_error);
    std::vector<integer> noncomm = {1, 0, 0, 1, 0, 0, 0, 1};
    CHECK_THROWS_AS(ring::from_table("nc", {"1", "x"}, noncomm, {1, 0}), amod_error);
}

TEST_CASE("mismatched rings are rejected")
{
    ring a = build_monogenic({1, 0, 1});
    ring b = build_monogenic({1, 0, 1});
    CHECK_THROWS_AS(a.one() + b.one(), amod_error);
}

TEST_CASE("reduction mod p")
{
    fp_algebra zi2 = reduce_mod_p(build_monogenic({1, 0, 1}), 2);
    CHECK(zi2.mul(zi2.basis(1), zi2.basis(1)) == zi2.unit());
    fp_algebra z3 = reduce_mod_p(build_monogenic({0, 1}), 3);
    CHECK(z3.dim() == 1);
    fp_algebra c2 = reduce_mod_p(build_group_ring(2), 3);
    CHECK(c2.mul(c2.basis(1), c2.basis(1)) == c2.unit());
    CHECK_THROWS_AS(reduce_mod_p(build_group_ring(2), 4), amod_error);
}

TEST_CASE("finite fields")
{
    for (auto [p, f] : {std::pair<std::uint32_t, int>{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        fp_algebra k = build_finite_field(p, f);
        unsigned long q = 1;
        for (int i = 0; i < f; ++i)
            q *= p;
        // x^q = x for every basis vector and no nonzero nilpotents
        for (std::size_t i = 0; i < k.dim(); ++i)
            CHECK(k.pow(k.basis(i), q) == k.basis(i));
    }
}

TEST_CASE("frobenius additivity mod p on random elements")
{
    std::mt19937_64 rng(20240611);
    std::vector<ring> rings = {build_monogenic({1, 0, 1}), build_monogenic({5, 0, 1}), build_group_ring(3),
                               build_quadratic_integers(13), quartic()};
    for (auto const & r : rings)
        for (long p : {2L, 3L, 5L})
            for (unsigned long q : {static_cast<unsigned long>(p), static_cast<unsigned long>(p * p)}) {
                for (int trial = 0; trial < 100; ++trial) {
                    element a = random_element(r, rng);
                    element lhs = pow(a, q);
                    element rhs = r.zero();
                    for (std::size_t i = 0; i < r.rank(); ++i)
                        rhs += pow(r.basis(i), q) * a[i];
                    element diff = lhs - rhs;
                    CHECK(diff.divided_by(p).has_value());
                }
            }
}

TEST_CASE("deterministic draws")
{
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 50; ++i)
        CHECK(draw_uniform(a, -9, 9) == draw_uniform(b, -9, 9));
    std::mt19937_64 c(1);
    for (int i = 0; i < 1000; ++i) {
        long v = draw_uniform(c, -9, 9);
        CHECK((v >= -9 && v <= 9));
    }
}

TEST_CASE("formatting")
{
    ring z5 = build_monogenic({5, 0, 1});
    CHECK(z5.make({2, 1}).str() == "2 + t");
    CHECK(z5.zero().str() == "0");
    CHECK(z5.make({0, -1}).str() == "-t");
}
