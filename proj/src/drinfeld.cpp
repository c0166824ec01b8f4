#include "amod/drinfeld.hpp"

#include <random>

#include "amod/ideals.hpp"

namespace amod {

generator_set::generator_set(ring r, long n) : ring_(std::move(r)), n_(n), nu_(nu(n))
{
    auto const unit = ring_.unit_index();
    slot_.assign(ring_.rank(), -1);
    for (std::size_t i = 0; i < ring_.rank(); ++i) {
        if (unit && *unit == i)
            continue;
        slot_[i] = static_cast<long>(1 + c_basis_.size());
        c_basis_.push_back(i);
    }
}

std::vector<std::string> generator_set::names() const
{
    std::vector<std::string> out{"d"};
    for (auto i : c_basis_)
        out.push_back("c_{" + ring_.labels()[i] + "}");
    return out;
}

a_combination generator_set::zero() const { return a_combination(size(), ring_.zero()); }

a_combination generator_set::d_symbol() const
{
    a_combination v = zero();
    v[0] = ring_.one();
    return v;
}

int_vector generator_set::flatten(a_combination const & v) const
{
    int_vector out;
    out.reserve(z_rank());
    for (auto const & e : v)
        out.insert(out.end(), e.coords().begin(), e.coords().end());
    return out;
}

namespace {

a_combination scaled(a_combination v, element const & s)
{
    for (auto & e : v)
        e = s * e;
    return v;
}

void add_into(a_combination & acc, a_combination const & v, long sign = 1)
{
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] = sign > 0 ? acc[i] + v[i] : acc[i] - v[i];
}

element exact_div(element const & x, long nu, char const * what)
{
    auto q = x.divided_by(nu);
    if (!q)
        throw amod_error(errc::divisibility_violation, std::string(what) + " not divisible by " + std::to_string(nu));
    return *q;
}

} // namespace

a_combination rewrite_c(generator_set const & gens, element const & a)
{
    ring const & r = gens.parent();
    if (a.parent() != r)
        throw amod_error(errc::ring_mismatch, "element of another ring");
    auto const n = static_cast<unsigned long>(gens.n());
    long const v = gens.nu_n();
    a_combination out = gens.zero();
    element partial = r.zero();
    bool first = true;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        integer const & m = a[i];
        if (m == 0)
            continue;
        element const x = r.basis(i);
        element const t = x * m;
        // c_{m x} = m c_x + d x^n (m - m^n) / nu
        if (gens.c_slot(i) >= 0)
            out[static_cast<std::size_t>(gens.c_slot(i))] += r.from_integer(m);
        integer mn;
        mpz_pow_ui(mn.get_mpz_t(), m.get_mpz_t(), n);
        integer diff = m - mn;
        if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(v)))
            throw amod_error(errc::divisibility_violation, "m - m^n not divisible by nu");
        out[0] += pow(x, n) * integer(diff / v);
        // c_{s+t} = c_s + c_t + d (s^n + t^n - (s+t)^n) / nu
        if (!first)
            out[0] += exact_div(pow(partial, n) + pow(t, n) - pow(partial + t, n), v, "sum correction");
        partial += t;
        first = false;
    }
    return out;
}

namespace {

class harvester {
  public:
    explicit harvester(generator_set const & g) : gens_(g), lattice_(g.z_rank()) {}

    void frobenius_relation(element const & a)
    {
        auto const n = static_cast<unsigned long>(gens_.n());
        a_combination v = scaled(rewrite_c(gens_, a), gens_.parent().from_integer(-gens_.nu_n()));
        v[0] += a - pow(a, n);
        add(v);
    }

    void additivity_relation(element const & a, element const & b)
    {
        auto const n = static_cast<unsigned long>(gens_.n());
        a_combination v = rewrite_c(gens_, a + b);
        add_into(v, rewrite_c(gens_, a), -1);
        add_into(v, rewrite_c(gens_, b), -1);
        v[0] -= exact_div(pow(a, n) + pow(b, n) - pow(a + b, n), gens_.nu_n(), "additivity correction");
        add(v);
    }

    void product_relation(element const & a, element const & b)
    {
        auto const n = static_cast<unsigned long>(gens_.n());
        a_combination v = scaled(rewrite_c(gens_, b), a);
        add_into(v, scaled(rewrite_c(gens_, a), pow(b, n)));
        add_into(v, rewrite_c(gens_, a * b), -1);
        add(v);
    }

    row_lattice const & lattice() const { return lattice_; }
    std::size_t rows() const { return rows_; }

  private:
    void add(a_combination const & v)
    {
        ring const & r = gens_.parent();
        for (std::size_t j = 0; j < r.rank(); ++j) {
            lattice_.insert(gens_.flatten(scaled(v, r.basis(j))));
            ++rows_;
        }
    }

    generator_set const & gens_;
    row_lattice lattice_;
    std::size_t rows_ = 0;
};

drinfeld_presentation harvest_once(ring const & r, long n, std::size_t sample, std::uint64_t seed)
{
    generator_set gens(r, n);
    harvester h(gens);
    std::size_t const d = r.rank();
    for (std::size_t i = 0; i < d; ++i) {
        element const bi = r.basis(i);
        h.frobenius_relation(bi);
        for (std::size_t j = i; j < d; ++j) {
            element const bj = r.basis(j);
            h.frobenius_relation(bi + bj);
            h.frobenius_relation(bi * bj);
            h.additivity_relation(bi, bj);
            h.product_relation(bi, bj);
            if (j != i)
                h.product_relation(bj, bi);
            for (std::size_t k = 0; k < d; ++k) {
                element const bk = r.basis(k);
                h.additivity_relation(bi * bj, bk);
                h.product_relation(bi * bj, bk);
            }
        }
    }
    h.product_relation(r.one(), r.one());

    std::mt19937_64 rng(seed);
    std::vector<element> rand;
    for (std::size_t s = 0; s < sample; ++s)
        rand.push_back(random_element(r, rng));
    for (std::size_t s = 0; s < sample; ++s) {
        h.frobenius_relation(rand[s]);
        if (s + 1 < sample) {
            h.additivity_relation(rand[s], rand[s + 1]);
            h.product_relation(rand[s], rand[s + 1]);
        }
    }

    int_matrix sigma(d, gens.z_rank());
    auto const np = static_cast<unsigned long>(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        element const image =
            g == 0 ? r.from_integer(gens.nu_n()) : frobenius_defect(r.basis(gens.c_basis()[g - 1]), static_cast<long>(np));
        for (std::size_t j = 0; j < d; ++j) {
            element const col = r.basis(j) * image;
            for (std::size_t i = 0; i < d; ++i)
                sigma(i, g * d + j) = col[i];
        }
    }

    drinfeld_presentation out{gens, h.lattice(), h.rows(), sample, {}, std::move(sigma)};
    out.module_invariants = cokernel_invariants(out.relations.as_columns());
    return out;
}

} // namespace

drinfeld_presentation harvest_presentation(ring const & r, long n, std::size_t sample, std::uint64_t seed)
{
    if (n < 2)
        throw amod_error(errc::invalid_argument, "n must be at least 2");
    drinfeld_presentation first = harvest_once(r, n, sample, seed);
    drinfeld_presentation doubled = harvest_once(r, n, 2 * sample, seed);
    if (first.module_invariants != doubled.module_invariants)
        throw amod_error(errc::saturation_failure,
                         "presented module changes when the random sample is doubled (n = " + std::to_string(n) + ")");
    return first;
}

sigma_report sigma_analysis(drinfeld_presentation const & pres)
{
    sigma_report out;
    int_matrix const & s = pres.sigma;
    std::size_t const nz = s.cols();

    out.well_defined = true;
    for (auto const & row : pres.relations.basis()) {
        for (std::size_t i = 0; i < s.rows() && out.well_defined; ++i) {
            integer acc = 0;
            for (std::size_t c = 0; c < nz; ++c)
                acc += s(i, c) * row[c];
            out.well_defined = acc == 0;
        }
    }

    int_matrix const kernel = integer_kernel(s);
    std::vector<int_vector> coords;
    for (auto const & row : pres.relations.basis()) {
        auto c = lattice_coordinates(row, kernel);
        if (!c) {
            out.well_defined = false;
            continue;
        }
        coords.push_back(*c);
    }
    out.kernel_invariants = cokernel_invariants(int_matrix::from_columns(coords, kernel.cols()));
    out.injective = out.well_defined && out.kernel_invariants.empty();

    out.image_hnf = hnf_basis(s);
    out.coker_invariants = cokernel_invariants(s);
    ring const & r = pres.generators.parent();
    out.image_is_fundamental_ideal = out.image_hnf == fundamental_ideal(r, pres.generators.n()).hnf_basis();
    return out;
}

} // namespace amod
