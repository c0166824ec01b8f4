#include "amod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "amod/drinfeld.hpp"
#include "amod/fp_linalg.hpp"
#include "amod/ideals.hpp"
#include "amod/lattice.hpp"
#include "amod/lazard.hpp"
#include "amod/u_homology.hpp"

namespace amod {

char const * criterion_result::status_name() const
{
    switch (status) {
    case outcome::pass: return "PASS";
    case outcome::fail: return "FAIL";
    case outcome::skipped: return "SKIP";
    }
    return "FAIL";
}

std::filesystem::path default_corpus_dir()
{
    if (char const * env = std::getenv("AMOD_CORPUS"))
        return env;
    return AMOD_CORPUS_DIR;
}

std::vector<std::pair<std::string, ring_spec>> load_corpus(std::filesystem::path const & dir)
{
    if (!std::filesystem::is_directory(dir))
        throw amod_error(errc::malformed_spec, "corpus directory " + dir.string() + " not found");
    std::vector<std::filesystem::path> files;
    for (auto const & f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".json")
            files.push_back(f.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, ring_spec>> out;
    for (auto const & f : files)
        out.emplace_back(f.stem().string(), load_ring_spec(f));
    return out;
}

namespace {

// Collects expectations; the detail keeps the first few failures.
struct tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
    bool skipped = false;

    void expect(bool ok, std::string const & what)
    {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
};

using criterion_fn = std::function<void(tally &, verify_options const &)>;

std::vector<long> prime_powers_upto(long n)
{
    std::vector<long> out;
    for (long q = 2; q <= n; ++q)
        if (nu(q) > 1)
            out.push_back(q);
    return out;
}

bool is_power_of(long n, long q)
{
    while (n % q == 0)
        n /= q;
    return n == 1;
}

std::string show(std::vector<integer> const & v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + v[i].get_str();
    return s + "]";
}

ring quartic_order()
{
    return build_from_field_basis({18, 0, 0, 0, 1},
                                  {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, rational(1, 3), 0}, {0, 0, 0, rational(1, 3)}},
                                  {"1", "a", "a^2/3", "a^3/3"});
}

std::vector<ring> corpus_integral(verify_options const & opts)
{
    std::vector<ring> out;
    for (auto & [name, spec] : load_corpus(opts.corpus_dir))
        if (spec.integral)
            out.push_back(*spec.integral);
    return out;
}

std::vector<fp_algebra> corpus_finite(verify_options const & opts)
{
    std::vector<fp_algebra> out;
    for (auto & [name, spec] : load_corpus(opts.corpus_dir))
        if (spec.finite)
            out.push_back(*spec.finite);
    return out;
}

fp_vector random_fp(fp_algebra const & a, std::mt19937_64 & rng)
{
    fp_vector v(a.dim());
    for (auto & x : v)
        x = static_cast<std::uint32_t>(draw_uniform(rng, 0, static_cast<long>(a.characteristic()) - 1));
    return v;
}

/* ---- 1: finite-field U-homology ---------------------------------------- */

void finite_fields(tally & t, verify_options const &)
{
    std::vector<std::pair<long, int>> const fields = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}};
    for (auto [p, f] : fields) {
        fp_algebra k = build_finite_field(static_cast<std::uint32_t>(p), f);
        long q = 1;
        for (int i = 0; i < f; ++i)
            q *= p;
        for (long n : prime_powers_upto(32)) {
            if (nu(n) != p)
                continue;
            auto h = u_homology(k, n, 1);
            std::size_t const expect0 = is_power_of(n, q) ? static_cast<std::size_t>(f) : 0;
            std::string const where = "F_" + std::to_string(q) + ", n = " + std::to_string(n);
            t.expect(h.dims[1] == 0, where + ": U_1 = " + std::to_string(h.dims[1]));
            t.expect(h.dims[0] == expect0, where + ": U_0 = " + std::to_string(h.dims[0]) + ", expected " +
                                               std::to_string(expect0));
        }
    }
}

/* ---- 2: coker sigma against U_0, ker sigma against U_1 ------------------ */

void sigma_vs_u(tally & t, verify_options const & opts)
{
    for (ring const & r : corpus_integral(opts)) {
        for (long n : prime_powers_upto(16)) {
            std::string const where = r.name() + ", n = " + std::to_string(n);
            auto pres = harvest_presentation(r, n, 64, opts.seed);
            auto s = sigma_analysis(pres);
            auto h = u_homology(r, n, 1);
            std::vector<integer> const expect(h.dims[0], integer(nu(n)));
            t.expect(s.well_defined, where + ": sigma not well defined");
            t.expect(s.coker_invariants == expect,
                     where + ": coker sigma " + show(s.coker_invariants) + " vs U_0 " + show(expect));
            t.expect(s.injective == (h.dims[1] == 0), where + ": injectivity disagrees with U_1");
        }
    }
}

/* ---- 3: Z[sqrt -5] ------------------------------------------------------ */

void sqrt_minus_five(tally & t, verify_options const &)
{
    ring const r = build_monogenic({5, 0, 1});
    element const a = r.basis(1);
    ideal const two = ideal_from_generators(r, {r.from_integer(2), a - r.one()});
    ideal const alpha = ideal_from_generators(r, {a});
    for (long n : {2L, 4L, 8L, 16L})
        t.expect(fundamental_ideal(r, n) == two, "I_" + std::to_string(n) + " != (2, a - 1)");
    for (long n : {5L, 25L})
        t.expect(fundamental_ideal(r, n) == alpha, "I_" + std::to_string(n) + " != (a)");
    auto v2 = is_principal(two, 50);
    t.expect(v2.verdict == principality_verdict::status::not_principal_certified &&
                 v2.how == principality_verdict::method::definite_form_enumeration,
             "(2, a - 1) not certified nonprincipal by form enumeration: " + v2.label());
    auto v5 = is_principal(alpha, 50);
    t.expect(v5.is_principal() && ideal_from_generators(r, {*v5.generator}) == alpha, "(a) not shown principal");
}

/* ---- 4: the order Z[a, a^2/3, a^3/3], a^4 = -18 ------------------------- */

void quartic(tally & t, verify_options const & opts)
{
    ring const r = quartic_order();
    element const a = r.basis(1);
    element const a2 = a * a;
    auto gen = [&](long m, element const & x) { return ideal_from_generators(r, {r.from_integer(m), x}); };
    t.expect(fundamental_ideal(r, 2) == gen(2, a - a2), "I_2 != (2, a - a^2)");
    for (long n : {4L, 8L})
        t.expect(fundamental_ideal(r, n) == gen(2, a), "I_" + std::to_string(n) + " != (2, a)");
    for (long n : {3L, 9L})
        t.expect(fundamental_ideal(r, n) == gen(3, a), "I_" + std::to_string(n) + " != (3, a)");

    long const bound = opts.principality_bound;
    for (long n : {2L, 3L, 4L, 8L, 9L}) {
        auto v = is_principal(fundamental_ideal(r, n), bound);
        if (bound < 50) {
            t.warnings.push_back("n = " + std::to_string(n) + ": bound " + std::to_string(bound) +
                                 " below the pinned 50; nonprincipality search skipped (" + v.label() + ")");
            t.skipped = true;
            continue;
        }
        t.expect(!v.is_principal(), "I_" + std::to_string(n) + " unexpectedly principal: " +
                                        (v.generator ? v.generator->str() : std::string("?")));
    }
    for (long p : {5L, 7L, 11L, 13L})
        for (long n : {p, p * p}) {
            ideal const i = fundamental_ideal(r, n);
            auto v = is_principal(i, bound);
            if (!v.is_principal()) {
                if (bound < 50) {
                    t.warnings.push_back("I_" + std::to_string(n) + ": " + v.label() + " at reduced bound");
                    t.skipped = true;
                } else {
                    t.expect(false, "no generator exhibited for I_" + std::to_string(n));
                }
                continue;
            }
            t.expect(ideal_from_generators(r, {*v.generator}) == i,
                     "generator " + v.generator->str() + " does not generate I_" + std::to_string(n));
        }
}

/* ---- 5: class number one ---------------------------------------------- */

void class_number_one(tally & t, verify_options const & opts)
{
    for (ring const & r : {build_monogenic({1, 0, 1}), build_quadratic_integers(-3)}) {
        for (long n = 2; n <= 30; ++n) {
            auto v = is_principal(fundamental_ideal(r, n), opts.principality_bound);
            t.expect(v.is_principal(), r.name() + ": I_" + std::to_string(n) + " " + v.label());
        }
        lazard_options lo;
        lo.n_max = 16;
        lo.degree_check = 1;
        lo.principality_bound = opts.principality_bound;
        lo.seed = opts.seed;
        auto rep = assemble_LA(r, lo);
        bool all_vanish = true;
        for (auto const & e : rep.entries) {
            if (e.nu == 1)
                continue;
            std::size_t const predicted = u0_from_residue_fields(reduce_mod_p(r, e.nu), e.n);
            t.expect(*e.u0_dim == predicted, r.name() + ", n = " + std::to_string(e.n) + ": U_0 = " +
                                                 std::to_string(*e.u0_dim) + ", residue fields predict " +
                                                 std::to_string(predicted));
            t.expect(*e.u1_dim == 0, r.name() + ", n = " + std::to_string(e.n) + ": U_1 != 0");
            all_vanish = all_vanish && *e.u0_dim == 0 && *e.u1_dim == 0;
        }
        t.expect(rep.polynomial_by_fundamental_comparison == all_vanish,
                 r.name() + ": comparison flag inconsistent with U-homology");
        t.expect(rep.polynomial, r.name() + ": some entry is not a single generator");
    }
}

/* ---- 6: group rings ----------------------------------------------------- */

void group_rings(tally & t, verify_options const &)
{
    std::size_t gcd_form = 0, cases = 0;
    for (long n : {3L, 4L, 6L}) {
        auto rep = verify_group_ring(n, 7, 2);
        for (auto const & c : rep.cases) {
            if (c.congruent_to_one)
                continue;
            ++cases;
            gcd_form += c.matches_gcd_form ? 1 : 0;
            long q = 1;
            for (int i = 0; i < c.m; ++i)
                q *= c.p;
            t.expect(c.matches, "n = " + std::to_string(n) + ", p^m = " + std::to_string(q) +
                                    ": I != (p, 1 - s); I = (p, 1 - s^" + std::to_string(c.gcd_exponent) + ")");
        }
    }
    auto two = verify_group_ring(2, 3, 1);
    bool flagged = false;
    for (auto const & c : two.cases)
        if (c.p == 3 && c.m == 1) {
            ring const r = build_group_ring(2);
            flagged = !c.matches && fundamental_ideal(r, 3) == ideal_from_generators(r, {r.from_integer(3)});
        }
    t.expect(flagged, "n = 2, p = 3: divergent case I = (3) not flagged");
    t.warnings.push_back("I = (p, 1 - s^g), g = gcd(p^m - 1, n), holds in " + std::to_string(gcd_form) + " of " +
                         std::to_string(cases) + " cases");
}

/* ---- 7: Rees algebra of (2, a - 1) ------------------------------------- */

void rees_graded(tally & t, verify_options const & opts)
{
    ring const r = build_monogenic({5, 0, 1});
    ideal const i = ideal_from_generators(r, {r.from_integer(2), r.basis(1) - r.one()});
    auto v = is_principal(i, opts.principality_bound);
    auto pres = make_rees_presentation(i, 2, v, 5);
    t.expect(pres.generator_names.size() == 2, "expected two generators");
    for (int k = 0; k <= 5; ++k) {
        t.expect(pres.degree_ok[static_cast<std::size_t>(k)], "degree " + std::to_string(k) + " component differs");
        t.expect(ideal_power(i, static_cast<unsigned>(k)).hnf_basis().cols() == 2,
                 "I^" + std::to_string(k) + " not of rank 2");
    }
}

/* ---- 8: property suites -------------------------------------------------- */

void properties(tally & t, verify_options const & opts)
{
    std::mt19937_64 rng(opts.seed + 8);
    std::size_t hnf_fail = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto const rows = static_cast<std::size_t>(draw_uniform(rng, 1, 5));
        auto const cols = static_cast<std::size_t>(draw_uniform(rng, 1, 6));
        int_matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = draw_uniform(rng, -20, 20);
        int_matrix const h = hnf(m);
        bool ok = hnf(h) == h;
        int_matrix const hb = hnf_basis(m);
        for (std::size_t c = 0; c < cols && ok; ++c)
            ok = lattice_membership(m.column(c), hb);
        for (std::size_t c = 0; c < hb.cols() && ok; ++c)
            ok = lattice_membership(hb.column(c), m);
        hnf_fail += ok ? 0 : 1;
    }
    t.expect(hnf_fail == 0, std::to_string(hnf_fail) + " random matrices break HNF idempotence or lattice preservation");

    std::vector<fp_algebra> algebras;
    std::vector<ring> const rings = corpus_integral(opts);
    for (ring const & r : rings)
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
            algebras.push_back(reduce_mod_p(r, p));
    for (auto const & f : corpus_finite(opts))
        algebras.push_back(f);

    for (auto const & a : algebras) {
        for (long n : prime_powers_upto(16)) {
            if (nu(n) != static_cast<long>(a.characteristic()))
                continue;
            std::string const where = a.name() + ", n = " + std::to_string(n);
            fp_matrix const d1 = boundary_matrix(a, n, 1), d2 = boundary_matrix(a, n, 2);
            t.expect((d1 * d2).is_zero(), where + ": d1 d2 != 0");
            if (a.dim() <= 4)
                t.expect((d2 * boundary_matrix(a, n, 3)).is_zero(), where + ": d2 d3 != 0");
            for (auto const & f : simplicial_identity_check(a, n, 2, rng, 2))
                t.expect(false, where + ": identity " + f.family + " fails in degree " + std::to_string(f.degree));
        }
        // Frobenius additivity
        std::size_t bad = 0;
        for (int i = 0; i < 100; ++i) {
            fp_vector const x = random_fp(a, rng), y = random_fp(a, rng);
            auto const p = a.characteristic();
            bad += a.pow(a.add(x, y), p) == a.add(a.pow(x, p), a.pow(y, p)) ? 0 : 1;
        }
        t.expect(bad == 0, a.name() + ": Frobenius not additive");
    }

    for (ring const & r : rings)
        for (long n = 2; n <= 16; ++n) {
            ideal const i = fundamental_ideal(r, n);
            std::size_t bad = 0;
            for (int s = 0; s < 100; ++s)
                bad += i.contains(frobenius_defect(random_element(r, rng), n)) ? 0 : 1;
            t.expect(bad == 0, r.name() + ", n = " + std::to_string(n) + ": a - a^n outside I_n");
        }
}

/* ---- 9: rigidity ---------------------------------------------------------- */

void rigidity(tally & t, verify_options const &)
{
    for (long d : {-1L, -2L, -3L, -5L, -6L, 13L}) {
        ring const r = build_quadratic_integers(d);
        for (long p : {2L, 3L, 5L}) {
            fp_algebra const a = reduce_mod_p(r, p);
            auto const factors = local_decomposition(a);
            long q = 1;
            for (int m = 1; m <= 2; ++m) {
                q *= p;
                std::size_t sum = 0;
                for (auto const & f : factors)
                    sum += u_homology(build_finite_field(static_cast<std::uint32_t>(p), f.residue_degree), q, 0).dims[0];
                std::size_t const whole = u_homology(r, q, 0).dims[0];
                t.expect(whole == sum, "d = " + std::to_string(d) + ", n = " + std::to_string(q) + ": U_0 = " +
                                           std::to_string(whole) + ", residue sum " + std::to_string(sum));
            }
        }
    }
}

/* ---- corpus load -------------------------------------------------------- */

void corpus_loads(tally & t, verify_options const & opts)
{
    auto corpus = load_corpus(opts.corpus_dir);
    t.expect(!corpus.empty(), "corpus is empty");
    for (auto const & [name, spec] : corpus)
        t.expect(spec.integral.has_value() != spec.finite.has_value(), name + ": ambiguous spec");
}

struct criterion {
    int id;
    char const * title;
    double limit;
    criterion_fn run;
};

std::vector<criterion> const & catalogue()
{
    static std::vector<criterion> const all = {
        {0, "corpus specs load and validate", 10, corpus_loads},
        {1, "finite-field U-homology", 10, finite_fields},
        {2, "coker/ker sigma equal U_0/U_1 on the corpus", 60, sigma_vs_u},
        {3, "Z[sqrt -5] fundamental ideals", 5, sqrt_minus_five},
        {4, "quartic order a^4 = -18", 120, quartic},
        {5, "class number one: Z[i], Z[w]", 60, class_number_one},
        {6, "group rings Z[C_n]: I = (p, 1 - s)", 10, group_rings},
        {7, "Rees algebra of (2, a - 1) up to degree 5", 10, rees_graded},
        {8, "property suites", 120, properties},
        {9, "rigidity of U_0 over residue fields", 30, rigidity},
    };
    return all;
}

} // namespace

std::vector<criterion_result> run_verify(verify_options const & in)
{
    std::vector<int> ids;
    if (in.suite == "paper")
        ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    else if (in.suite == "corpus")
        ids = {0, 2, 8};
    else
        throw amod_error(errc::invalid_argument, "unknown suite \"" + in.suite + "\" (expected paper or corpus)");
    if (in.principality_bound < 1)
        throw amod_error(errc::invalid_argument, "principality bound must be positive");
    verify_options opts = in;
    if (opts.corpus_dir.empty())
        opts.corpus_dir = default_corpus_dir();

    std::vector<criterion_result> out;
    for (auto const & c : catalogue()) {
        if (std::find(ids.begin(), ids.end(), c.id) == ids.end())
            continue;
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end())
            continue;
        criterion_result res;
        res.id = c.id;
        res.title = c.title;
        res.limit_seconds = c.limit;
        tally t;
        auto const start = std::chrono::steady_clock::now();
        try {
            c.run(t, opts);
        } catch (amod_error const & e) {
            t.expect(false, std::string("error: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.warnings = t.warnings;
        std::ostringstream detail;
        if (!t.failures.empty()) {
            res.status = criterion_result::outcome::fail;
            detail << t.failures.size() << " of " << t.checks << " checks failed";
            for (std::size_t i = 0; i < t.failures.size() && i < 6; ++i)
                detail << "; " << t.failures[i];
        } else if (res.seconds > c.limit) {
            res.status = criterion_result::outcome::fail;
            detail << "time limit exceeded";
        } else {
            res.status = t.skipped ? criterion_result::outcome::skipped : criterion_result::outcome::pass;
            detail << t.checks << " checks";
        }
        res.detail = detail.str();
        out.push_back(std::move(res));
    }
    return out;
}

json verify_json(verify_options const & opts, std::vector<criterion_result> const & results)
{
    json out;
    out["suite"] = opts.suite;
    out["principality_bound"] = opts.principality_bound;
    out["seed"] = opts.seed;
    json crit = json::array();
    for (auto const & r : results) {
        json j;
        j["id"] = r.id;
        j["title"] = r.title;
        j["status"] = r.status_name();
        j["detail"] = r.detail;
        j["limit_seconds"] = r.limit_seconds;
        j["warnings"] = r.warnings;
        crit.push_back(std::move(j));
    }
    out["criteria"] = crit;
    out["passed"] = suite_passed(results);
    return out;
}

bool suite_passed(std::vector<criterion_result> const & results)
{
    return std::none_of(results.begin(), results.end(),
                        [](auto const & r) { return r.status == criterion_result::outcome::fail; });
}

} // namespace amod
