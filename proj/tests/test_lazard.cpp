#include "doctest.h"

#include "amod/lazard.hpp"

using namespace amod;

namespace {

ring quartic()
{
    return build_from_field_basis({18, 0, 0, 0, 1},
                                  {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, rational(1, 3), 0}, {0, 0, 0, rational(1, 3)}});
}

std::vector<long> two_generator_ns(lazard_report const & rep)
{
    std::vector<long> out;
    for (auto const & e : rep.entries)
        if (e.rees.generator_names.size() == 2)
            out.push_back(e.n);
    return out;
}

} // namespace

TEST_CASE("Z[sqrt -5]: two generators exactly at powers of 2")
{
    auto rep = assemble_LA(build_monogenic({5, 0, 1}), {.n_max = 9});
    CHECK(two_generator_ns(rep) == std::vector<long>{2, 4, 8});
    CHECK_FALSE(rep.polynomial);
    CHECK_FALSE(rep.polynomial_by_fundamental_comparison);
    CHECK(rep.injectivity_verified);
    for (auto const & e : rep.entries) {
        CHECK(e.degree == 2 * (e.n - 1));
        CHECK(e.rees.graded_check_passed());
        if (e.n == 2) {
            CHECK(e.rees.generator_names == std::vector<std::string>{"x_1", "y_1"});
            CHECK(e.verdict.verdict == principality_verdict::status::not_principal_certified);
        }
    }
}

TEST_CASE("Z[i] up to 12 is polynomial")
{
    auto rep = assemble_LA(build_monogenic({1, 0, 1}), {.n_max = 12});
    CHECK(rep.entries.size() == 11);
    CHECK(two_generator_ns(rep).empty());
    CHECK(rep.polynomial);
    for (auto const & e : rep.entries) {
        CHECK(e.verdict.is_principal());
        CHECK(e.rees.graded_check_passed());
    }
}

TEST_CASE("Z and Z with 2 inverted")
{
    auto z = assemble_LA(build_monogenic({0, 1}), {.n_max = 8});
    CHECK(z.polynomial);
    // U_0(p) = F_p for Z, so the comparison flag stays false
    CHECK_FALSE(z.polynomial_by_fundamental_comparison);
    for (auto const & e : z.entries)
        if (e.nu > 1)
            CHECK(abs((*e.verdict.generator)[0]) == e.nu);

    auto z2 = assemble_LA(build_monogenic({0, 1}, {2}), {.n_max = 4});
    CHECK(z2.entries[0].after_inverting);
    CHECK_FALSE(z2.entries[1].after_inverting);
}

TEST_CASE("quartic order: unknown verdicts at 2 and 3 powers")
{
    auto rep = assemble_LA(quartic(), {.n_max = 9, .degree_check = 3});
    CHECK(two_generator_ns(rep) == std::vector<long>{2, 3, 4, 8, 9});
    for (auto const & e : rep.entries) {
        CHECK(e.rees.graded_check_passed());
        if (e.n == 2 || e.n == 3 || e.n == 4 || e.n == 8 || e.n == 9)
            CHECK(e.verdict.label() == "unknown(50)");
        if (e.n == 5 || e.n == 7)
            CHECK(e.verdict.is_principal());
    }
    CHECK(rep.injectivity_verified);
}

TEST_CASE("degree check rejects a wrong syzygy set")
{
    ring r = build_monogenic({5, 0, 1});
    ideal i = fundamental_ideal(r, 2);
    principality_verdict v;
    auto pres = make_rees_presentation(i, 2, v, 3);
    CHECK(pres.graded_check_passed());
    pres.relations.pop_back();
    bool all = true;
    for (int k = 1; k <= 3; ++k)
        all = all && rees_degree_check(pres, i, k);
    CHECK_FALSE(all);
}

TEST_CASE("quadratic classification")
{
    auto m5 = classify_quadratic(-5, 13, 2);
    CHECK(m5.discriminant == -20);
    CHECK(m5.ramified == std::vector<long>{2, 5});
    CHECK(m5.bad == std::vector<long>{2});
    CHECK(m5.nonprincipal_only_at_ramified);

    for (long d : {-1L, -2L, -3L, -6L, 13L}) {
        auto rep = classify_quadratic(d, 13, 2);
        CHECK(rep.nonprincipal_only_at_ramified);
        for (long p : rep.bad)
            CHECK(std::find(rep.ramified.begin(), rep.ramified.end(), p) != rep.ramified.end());
    }
    CHECK(classify_quadratic(-1, 13, 2).bad.empty());
}

TEST_CASE("group rings: gcd form holds everywhere")
{
    for (long n : {2L, 3L, 4L, 6L}) {
        auto rep = verify_group_ring(n, 11, 2);
        for (auto const & c : rep.cases) {
            CAPTURE(n);
            CAPTURE(c.p);
            CAPTURE(c.m);
            CHECK(c.matches_gcd_form);
            CHECK(c.relation_holds);
            CHECK(c.matches == (c.gcd_exponent == 1 || c.gcd_exponent == n ? c.matches : false));
        }
    }
    // (p, 1 - s) differs from the fundamental ideal at n = 4, p = 3.
    auto r4 = verify_group_ring(4, 3, 1);
    REQUIRE(r4.cases.size() == 1);
    CHECK(r4.cases[0].p == 3);
    CHECK_FALSE(r4.cases[0].matches);
    CHECK(r4.cases[0].gcd_exponent == 2);

    auto r3 = verify_group_ring(3, 5, 1);
    for (auto const & c : r3.cases)
        CHECK(c.matches);
}
