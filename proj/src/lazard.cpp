#include "amod/lazard.hpp"

#include <algorithm>
#include <numeric>

#include "amod/drinfeld.hpp"
#include "amod/u_homology.hpp"

namespace amod {

bool rees_presentation::graded_check_passed() const
{
    return std::all_of(degree_ok.begin(), degree_ok.end(), [](bool b) { return b; });
}

bool rees_degree_check(rees_presentation const & pres, ideal const & i, int k)
{
    ring const & r = i.parent();
    std::size_t const d = r.rank();
    std::size_t const gens = pres.generator_images.size();
    std::size_t const monomials = gens == 1 ? 1 : static_cast<std::size_t>(k) + 1;
    std::size_t const dim = d * monomials;
    auto const uk = static_cast<unsigned long>(k);

    // evaluation x^(k-m) y^m b_j -> b_j g1^(k-m) g2^m
    int_matrix ev(d, dim);
    for (std::size_t m = 0; m < monomials; ++m) {
        element value = pow(pres.generator_images[0], uk - m);
        if (gens == 2)
            value = value * pow(pres.generator_images[1], m);
        for (std::size_t j = 0; j < d; ++j) {
            element col = r.basis(j) * value;
            for (std::size_t row = 0; row < d; ++row)
                ev(row, m * d + j) = col[row];
        }
    }

    row_lattice rel(dim);
    if (k >= 1)
        for (auto const & [u, v] : pres.relations)
            for (std::size_t m = 0; m + 1 < monomials; ++m)
                for (std::size_t j = 0; j < d; ++j) {
                    // b_j (u x + v y) x^(k-1-m) y^m
                    int_vector row(dim, 0);
                    element const bu = r.basis(j) * u, bv = r.basis(j) * v;
                    for (std::size_t t = 0; t < d; ++t) {
                        row[m * d + t] += bu[t];
                        row[(m + 1) * d + t] += bv[t];
                    }
                    rel.insert(std::move(row));
                }

    int_matrix const kernel = integer_kernel(ev);
    for (auto const & row : rel.basis())
        if (!lattice_membership(row, kernel))
            return false;
    for (std::size_t c = 0; c < kernel.cols(); ++c)
        if (!rel.contains(kernel.column(c)))
            return false;
    return hnf_basis(ev) == ideal_power(i, static_cast<unsigned>(k)).hnf_basis();
}

rees_presentation make_rees_presentation(ideal const & i, long n, principality_verdict const & verdict,
                                         int degree_check)
{
    rees_presentation out;
    out.n = n;
    out.degree = 2 * (n - 1);
    std::string const idx = std::to_string(n - 1);
    if (verdict.is_principal()) {
        out.generator_names = {"x_" + idx};
        out.generator_images = {*verdict.generator};
    } else {
        auto [g1, g2] = two_generator_reduction(i);
        out.generator_names = {"x_" + idx, "y_" + idx};
        out.generator_images = {g1, g2};
        out.relations = linear_syzygies(g1, g2);
    }
    for (int k = 0; k <= degree_check; ++k)
        out.degree_ok.push_back(rees_degree_check(out, i, k));
    return out;
}

lazard_report assemble_LA(ring const & r, lazard_options const & opts)
{
    if (opts.n_max < 2)
        throw amod_error(errc::invalid_argument, "n_max must be at least 2");
    if (opts.degree_check < 0)
        throw amod_error(errc::invalid_argument, "degree check bound must be non-negative");
    lazard_report out{r, opts.n_max, {}, true, true, true, {}};
    for (long n = 2; n <= opts.n_max; ++n) {
        long const v = nu(n);
        ideal fund = fundamental_ideal(r, n);
        principality_verdict verdict = is_principal(fund, opts.principality_bound);
        rees_presentation rees = make_rees_presentation(fund, n, verdict, opts.degree_check);
        lazard_entry e{.n = n, .nu = v, .degree = 2 * (n - 1), .fundamental = fund, .verdict = verdict, .rees = rees,
                       .u0_dim = {}, .u1_dim = {}, .injective = {}};
        if (v > 1) {
            auto const & inv = r.inverted();
            e.after_inverting = std::find(inv.begin(), inv.end(), v) != inv.end();
            auto h = u_homology(r, n, 1);
            e.u0_dim = h.dims[0];
            e.u1_dim = h.dims[1];
            try {
                auto s = sigma_analysis(harvest_presentation(r, n, 64, opts.seed));
                e.injective = s.well_defined && s.injective;
            } catch (amod_error const & err) {
                e.injective = false;
                out.warnings.push_back("n = " + std::to_string(n) + ": " + err.what());
            }
            if (!*e.injective) {
                if (e.after_inverting) {
                    out.warnings.push_back("n = " + std::to_string(n) +
                                           ": fundamental functional not injective; entry holds after inverting S");
                } else {
                    out.injectivity_verified = false;
                    out.warnings.push_back("InjectivityUnverified: fundamental functional not shown injective at n = " +
                                           std::to_string(n));
                }
            }
            if (*e.u0_dim != 0 || *e.u1_dim != 0)
                out.polynomial_by_fundamental_comparison = false;
        }
        if (rees.generator_names.size() != 1)
            out.polynomial = false;
        if (!rees.graded_check_passed())
            out.warnings.push_back("n = " + std::to_string(n) + ": graded components differ from the ideal powers");
        if (verdict.verdict == principality_verdict::status::no_generator_within_bound)
            out.warnings.push_back("n = " + std::to_string(n) + ": no generator within bound " +
                                   std::to_string(opts.principality_bound) + "; two-generator presentation used");
        out.entries.push_back(std::move(e));
    }
    return out;
}

quadratic_report classify_quadratic(long d, long p_bound, int m_bound, long principality_bound)
{
    ring const r = build_quadratic_integers(d);
    quadratic_report out;
    out.d = d;
    out.discriminant = r.discriminant();
    integer rest = abs(out.discriminant);
    for (long p = 2; rest > 1; ++p) {
        if (!is_prime(p) || !mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        out.ramified.push_back(p);
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p)))
            rest /= p;
    }
    for (long p = 2; p <= p_bound; ++p) {
        if (!is_prime(p))
            continue;
        bool bad = false;
        long q = 1;
        for (int m = 1; m <= m_bound; ++m) {
            q *= p;
            auto v = is_principal(fundamental_ideal(r, q), principality_bound);
            if (!v.is_principal())
                bad = true;
            if (v.verdict == principality_verdict::status::not_principal_certified &&
                std::find(out.ramified.begin(), out.ramified.end(), p) == out.ramified.end())
                out.nonprincipal_only_at_ramified = false;
            out.cases.push_back({p, m, v});
        }
        if (bad)
            out.bad.push_back(p);
    }
    return out;
}

group_ring_report verify_group_ring(long n, long p_bound, int m_bound)
{
    ring const r = build_group_ring(n);
    element const s = r.basis(n > 1 ? 1 : 0);
    group_ring_report out;
    out.n = n;
    for (long p = 2; p <= p_bound; ++p) {
        if (!is_prime(p) || n % p == 0)
            continue;
        long q = 1;
        for (int m = 1; m <= m_bound; ++m) {
            q *= p;
            group_ring_case c;
            c.p = p;
            c.m = m;
            c.congruent_to_one = q % n == 1 % n;
            ideal const fund = fundamental_ideal(r, q);
            c.ideal_hnf_rows = fund.hnf_rows();
            element const one_minus_s = r.one() - s;
            c.matches = fund == ideal_from_generators(r, {r.from_integer(p), one_minus_s});
            c.gcd_exponent = std::gcd(q - 1, n);
            element const one_minus_sg = r.one() - pow(s, static_cast<unsigned long>(c.gcd_exponent));
            c.matches_gcd_form = fund == ideal_from_generators(r, {r.from_integer(p), one_minus_sg});
            if (!one_minus_s.is_zero()) {
                auto lattice = syzygy_lattice(one_minus_s, r.from_integer(p));
                int_vector koszul = r.from_integer(p).coords();
                auto tail = (-one_minus_s).coords();
                koszul.insert(koszul.end(), tail.begin(), tail.end());
                c.relation_holds = lattice_membership(koszul, lattice);
                c.syzygy_generators = linear_syzygies(one_minus_s, r.from_integer(p)).size();
            }
            out.cases.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace amod
