#include "doctest.h"

#include <random>

#include "amod/ideals.hpp"

using namespace amod;

namespace {

ring gaussian() { return build_monogenic({1, 0, 1}); }
ring sqrt_m5() { return build_monogenic({5, 0, 1}); }

ring quartic()
{
    return build_from_field_basis({18, 0, 0, 0, 1},
                                  {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, rational(1, 3), 0}, {0, 0, 0, rational(1, 3)}},
                                  {"1", "a", "a^2/3", "a^3/3"});
}

element nonzero_element(ring const & r, std::mt19937_64 & rng)
{
    for (;;) {
        element a = random_element(r, rng);
        if (!a.is_zero())
            return a;
    }
}

int_matrix rows(std::vector<std::vector<long>> const & r)
{
    int_matrix m(r.size(), r.front().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            m(i, j) = r[i][j];
    return m;
}

} // namespace

TEST_CASE("ideals from generators")
{
    ring zi = gaussian();
    ideal a = ideal_from_generators(zi, {zi.make({1, 1})});
    CHECK(*ideal_norm(a) == 2);
    CHECK(a.contains(zi.from_integer(2)));
    CHECK(!a.contains(zi.one()));

    ideal unit = ideal_from_generators(zi, {zi.one()});
    CHECK(unit.hnf_basis() == int_matrix::identity(2));
    CHECK(unit.is_unit());

    ring r = sqrt_m5();
    ideal b = ideal_from_generators(r, {r.from_integer(2), r.make({1, 1})});
    CHECK(b.hnf_basis() == rows({{1, 0}, {1, 2}}));
    CHECK(*ideal_norm(b) == 2);

    CHECK_THROWS_AS(ideal_from_generators(r, {r.zero()}), amod_error);
    CHECK_THROWS_AS(ideal_from_generators(r, {}), amod_error);
}

TEST_CASE("fundamental ideals")
{
    ring zi = gaussian();
    ideal i2 = fundamental_ideal(zi, 2);
    CHECK(i2 == ideal_from_generators(zi, {zi.make({1, 1})}));
    CHECK(*ideal_norm(i2) == 2);

    ring r = sqrt_m5();
    element alpha = r.basis(1);
    for (long n : {2L, 4L, 8L, 16L})
        CHECK(fundamental_ideal(r, n) == ideal_from_generators(r, {r.from_integer(2), alpha - r.one()}));
    for (long n : {5L, 25L})
        CHECK(fundamental_ideal(r, n) == ideal_from_generators(r, {alpha}));

    ring c3 = build_group_ring(3);
    CHECK(fundamental_ideal(c3, 2) == ideal_from_generators(c3, {c3.from_integer(2), c3.one() - c3.basis(1)}));

    // non-prime-power n: nu = 1, the unit ideal
    CHECK(fundamental_ideal(r, 6).is_unit());
    CHECK_THROWS_AS(fundamental_ideal(r, 1), amod_error);
}

TEST_CASE("products, equality, norms")
{
    ring zi = gaussian();
    ideal a = ideal_from_generators(zi, {zi.make({1, 1})});
    ideal abar = ideal_from_generators(zi, {zi.make({1, -1})});
    ideal unit = ideal_from_generators(zi, {zi.one()});
    CHECK(ideal_product(unit, a) == a);
    CHECK(ideal_product(a, abar) == ideal_from_generators(zi, {zi.from_integer(2)}));
    CHECK(!ideal_equal(ideal_from_generators(zi, {zi.from_integer(2)}), a));
    CHECK(ideal_equal(a, a));
    CHECK(*ideal_norm(unit) == 1);

    ring r = sqrt_m5();
    ideal p2 = ideal_from_generators(r, {r.from_integer(2), r.basis(1) - r.one()});
    CHECK(ideal_product(p2, p2) == ideal_from_generators(r, {r.from_integer(2)}));
    CHECK(ideal_equal(ideal_from_generators(r, {r.from_integer(2), r.basis(1) + r.one()}), p2));
    CHECK(ideal_power(p2, 0).is_unit());
    CHECK(ideal_power(p2, 3) == ideal_product(p2, ideal_product(p2, p2)));

    CHECK_THROWS_AS(ideal_product(a, p2), amod_error);
}

TEST_CASE("element norm")
{
    ring r = sqrt_m5();
    CHECK(element_norm(r.make({1, 1})) == 6);
    CHECK(element_norm(r.basis(1)) == 5);
    ring q = quartic();
    CHECK(element_norm(q.basis(1)) == 18);
}

TEST_CASE("principality in imaginary quadratic rings")
{
    ring r = sqrt_m5();
    CHECK(is_imaginary_quadratic(r));
    CHECK(!is_imaginary_quadratic(build_group_ring(2)));
    CHECK(!is_imaginary_quadratic(build_quadratic_integers(13)));

    ideal p2 = ideal_from_generators(r, {r.from_integer(2), r.basis(1) - r.one()});
    auto v = is_principal(p2, 50);
    CHECK(v.verdict == principality_verdict::status::not_principal_certified);
    CHECK(v.how == principality_verdict::method::definite_form_enumeration);
    CHECK(v.label() == "no");

    ideal p5 = ideal_from_generators(r, {r.from_integer(5), frobenius_defect(r.basis(1), 5)});
    auto w = is_principal(p5, 50);
    REQUIRE(w.is_principal());
    CHECK((*w.generator == r.basis(1) || *w.generator == -r.basis(1)));
    CHECK(ideal_from_generators(r, {*w.generator}) == p5);

    auto u = is_principal(ideal_from_generators(r, {r.one()}), 50);
    REQUIRE(u.is_principal());
    CHECK(*u.generator == r.one());

    ideal p3 = ideal_from_generators(r, {r.from_integer(3), r.basis(1) + r.one()});
    CHECK(is_principal(p3, 50).verdict == principality_verdict::status::not_principal_certified);
    CHECK(is_principal(ideal_product(p2, p3), 50).is_principal());
}

TEST_CASE("bounded principality search")
{
    ring c2 = build_group_ring(2);
    ideal two = ideal_from_generators(c2, {c2.from_integer(2)});
    auto v = is_principal(two, 5);
    REQUIRE(v.is_principal());
    CHECK(v.how == principality_verdict::method::bounded_search);
    CHECK(ideal_from_generators(c2, {*v.generator}) == two);

    ring q = quartic();
    ideal a = ideal_from_generators(q, {q.basis(1)});
    auto w = is_principal(a, 4);
    REQUIRE(w.is_principal());
    CHECK(ideal_from_generators(q, {*w.generator}) == a);

    // a search box too small to contain any generator of (7)
    ring z = build_monogenic({0, 1});
    auto s = is_principal(ideal_from_generators(z, {z.from_integer(7)}), 3);
    CHECK(s.verdict == principality_verdict::status::no_generator_within_bound);
    CHECK(s.label() == "unknown(3)");
    CHECK(is_principal(ideal_from_generators(z, {z.from_integer(7)}), 7).is_principal());
}

TEST_CASE("bounded search agrees with a naive scan")
{
    // quartic order, ideals generated by small elements; the reported
    // generator must have the smallest radius in the doubling sequence
    ring q = quartic();
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        int_vector c(4);
        for (auto & x : c)
            x = draw_uniform(rng, -2, 2);
        element g = q.make(c);
        if (g.is_zero())
            continue;
        ideal a = ideal_from_generators(q, {g});
        auto v = is_principal(a, 2);
        REQUIRE(v.is_principal());
        CHECK(ideal_from_generators(q, {*v.generator}) == a);
        long rad = 0;
        for (auto const & x : v.generator->coords())
            rad = std::max(rad, integer(abs(x)).get_si());
        CHECK(rad <= 2);
    }
}

TEST_CASE("two generator reduction")
{
    ring zi = gaussian();
    auto [g1, g2] = two_generator_reduction(ideal_from_generators(zi, {zi.make({1, 1})}));
    CHECK(g1 == zi.from_integer(2));
    CHECK(g2 == zi.make({1, 1}));

    auto [u1, u2] = two_generator_reduction(ideal_from_generators(zi, {zi.one()}));
    CHECK(u1 == zi.one());
    CHECK(u2 == zi.one());

    ring r = sqrt_m5();
    ideal i2 = fundamental_ideal(r, 2);
    auto [h1, h2] = two_generator_reduction(i2);
    CHECK(h1 == r.from_integer(2));
    CHECK(ideal_from_generators(r, {h1, h2}) == i2);

    ring q = quartic();
    for (long n : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        ideal in = fundamental_ideal(q, n);
        auto [a, b] = two_generator_reduction(in);
        CHECK(ideal_from_generators(q, {a, b}) == in);
        CHECK(a == q.from_integer(*least_positive_integer(in)));
    }
}

TEST_CASE("linear syzygies")
{
    ring r = sqrt_m5();
    element alpha = r.basis(1);
    auto syz = linear_syzygies(r.from_integer(2), alpha - r.one());
    CHECK(syz.size() == 2);
    for (auto const & [u, v] : syz)
        CHECK((u * r.from_integer(2) + v * (alpha - r.one())).is_zero());

    ring z = build_monogenic({0, 1});
    auto s = linear_syzygies(z.from_integer(2), z.from_integer(4));
    REQUIRE(s.size() == 1);
    CHECK(s[0].first == z.from_integer(2));
    CHECK(s[0].second == z.from_integer(-1));

    auto t = linear_syzygies(z.one(), z.zero());
    REQUIRE(t.size() == 1);
    CHECK(t[0].first.is_zero());
    CHECK(t[0].second == z.one());

    CHECK_THROWS_AS(linear_syzygies(z.zero(), z.zero()), amod_error);
}

TEST_CASE("syzygy completeness")
{
    ring r = sqrt_m5();
    ring q = quartic();
    std::vector<std::pair<element, element>> cases = {
        {r.from_integer(2), r.basis(1) - r.one()},
        {r.from_integer(3), r.basis(1) + r.one()},
        {q.from_integer(2), q.basis(1)},
        {q.from_integer(3), q.basis(1)},
    };
    for (auto const & [g1, g2] : cases) {
        ring const & a = g1.parent();
        std::size_t const d = a.rank();
        auto syz = linear_syzygies(g1, g2);
        std::vector<int_vector> cols;
        for (auto const & [u, v] : syz) {
            CHECK((u * g1 + v * g2).is_zero());
            for (std::size_t j = 0; j < d; ++j) {
                int_vector c = (a.basis(j) * u).coords();
                auto w = (a.basis(j) * v).coords();
                c.insert(c.end(), w.begin(), w.end());
                cols.push_back(c);
            }
        }
        CHECK(hnf_basis(int_matrix::from_columns(cols, 2 * d)) == syzygy_lattice(g1, g2));
    }
}

TEST_CASE("ideal invariants on sampled data")
{
    std::mt19937_64 rng(2024);
    std::vector<ring> rings = {gaussian(), sqrt_m5(), build_group_ring(3), build_quadratic_integers(13), quartic()};
    for (auto const & r : rings) {
        for (long n : {2L, 3L, 4L, 5L, 9L}) {
            ideal in = fundamental_ideal(r, n);
            CHECK(in.is_closed());
            for (int trial = 0; trial < 100; ++trial)
                CHECK(in.contains(frobenius_defect(random_element(r, rng), n)));
        }
        for (int trial = 0; trial < 5; ++trial) {
            ideal a = ideal_from_generators(r, {nonzero_element(r, rng), random_element(r, rng)});
            ideal b = ideal_from_generators(r, {nonzero_element(r, rng)});
            ideal c = ideal_from_generators(r, {random_element(r, rng), r.from_integer(6)});
            CHECK(a.is_closed());
            CHECK(ideal_product(a, b) == ideal_product(b, a));
            CHECK(ideal_product(ideal_product(a, b), c) == ideal_product(a, ideal_product(b, c)));
            CHECK(ideal_product(ideal_from_generators(r, {r.one()}), a) == a);
        }
    }
}

TEST_CASE("bounded search against an exhaustive mpz scan")
{
    ring q = quartic();
    auto bucket = [](long rad) {
        long r = 1;
        while (r < rad)
            r *= 2;
        return r;
    };
    // smallest doubling radius containing a generator, by brute force
    auto naive = [&](ideal const & a, long bound) {
        integer const n = *ideal_norm(a);
        long best = 0;
        for (long c0 = -bound; c0 <= bound; ++c0)
            for (long c1 = -bound; c1 <= bound; ++c1)
                for (long c2 = -bound; c2 <= bound; ++c2)
                    for (long c3 = -bound; c3 <= bound; ++c3) {
                        element g = q.make({c0, c1, c2, c3});
                        if (g.is_zero() || !a.contains(g) || element_norm(g) != n)
                            continue;
                        if (ideal_from_generators(q, {g}) != a)
                            continue;
                        long rad = std::max({std::labs(c0), std::labs(c1), std::labs(c2), std::labs(c3)});
                        long b = std::min(bucket(rad), bound);
                        if (best == 0 || b < best)
                            best = b;
                    }
        return best;
    };
    for (long n : {2L, 3L}) {
        ideal a = fundamental_ideal(q, n);
        CHECK(naive(a, 2) == 0);
        CHECK(!is_principal(a, 2).is_principal());
    }
    for (auto const & g : {q.make({1, 1, 0, 0}), q.make({0, 1, 1, 0}), q.make({2, 0, 0, 1})}) {
        ideal a = ideal_from_generators(q, {g});
        auto v = is_principal(a, 2);
        REQUIRE(v.is_principal());
        long rad = 0;
        for (auto const & x : v.generator->coords())
            rad = std::max(rad, integer(abs(x)).get_si());
        CHECK(bucket(rad) == naive(a, 2));
    }
}
