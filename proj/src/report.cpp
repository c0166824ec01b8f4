#include "amod/report.hpp"

#include <sstream>

namespace amod {

json to_json(int_vector const & v)
{
    json out = json::array();
    for (auto const & x : v) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

json to_json(int_matrix const & m)
{
    json out = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
        out.push_back(to_json(m.column(c)));
    return out;
}

namespace {

json verdict_json(principality_verdict const & v)
{
    json out;
    out["label"] = v.label();
    out["method"] = v.how == principality_verdict::method::definite_form_enumeration ? "definite-form-enumeration"
                                                                                     : "bounded-search";
    out["bound"] = v.bound;
    if (v.generator)
        out["generator"] = v.generator->str();
    return out;
}

json fp_table_echo(fp_algebra const & a)
{
    json out;
    out["characteristic"] = a.characteristic();
    out["dimension"] = a.dim();
    out["basis"] = a.labels();
    return out;
}

} // namespace

json ring_info_json(ring_spec const & spec)
{
    json out;
    out["ring"] = spec.source;
    out["name"] = spec.name();
    if (spec.finite) {
        auto e = fp_table_echo(*spec.finite);
        out.update(e);
        out["rank"] = spec.finite->dim();
        out["axioms_verified"] = true;
        return out;
    }
    ring const & r = *spec.integral;
    out["rank"] = r.rank();
    out["basis"] = r.labels();
    out["unit"] = to_json(r.unit());
    out["axioms_verified"] = true;
    out["discriminant"] = r.discriminant().get_str();
    out["inverted"] = r.inverted();
    return out;
}

json ideals_json(ring_spec const & spec, std::vector<long> const & ns, long principality_bound)
{
    if (!spec.integral)
        throw amod_error(errc::invalid_argument, "ideals needs a ring free over Z");
    ring const & r = *spec.integral;
    json out;
    out["ring"] = spec.source;
    out["principality_bound"] = principality_bound;
    json entries = json::array();
    for (long n : ns) {
        ideal const i = fundamental_ideal(r, n);
        json e;
        e["n"] = n;
        e["nu"] = nu(n);
        e["ideal_hnf"] = to_json(i.hnf_basis());
        auto norm = ideal_norm(i);
        e["norm"] = norm ? json(norm->get_str()) : json(nullptr);
        auto v = is_principal(i, principality_bound);
        e["principal"] = v.label();
        e["verdict"] = verdict_json(v);
        if (!v.is_principal() && !i.is_unit()) {
            auto [g1, g2] = two_generator_reduction(i);
            e["two_generators"] = {g1.str(), g2.str()};
            json rels = json::array();
            for (auto const & [u, w] : linear_syzygies(g1, g2))
                rels.push_back({to_json(u.coords()), to_json(w.coords())});
            e["syzygies"] = rels;
        }
        entries.push_back(std::move(e));
    }
    out["entries"] = entries;
    return out;
}

json homology_json(ring_spec const & spec, homology_report const & h)
{
    json out;
    out["ring"] = spec.source;
    out["n"] = h.n;
    out["p"] = h.p;
    out["dims"] = h.dims;
    for (std::size_t m = 0; m < h.dims.size(); ++m)
        out["u" + std::to_string(m) + "_dim"] = h.dims[m];
    return out;
}

json lazard_json(ring_spec const & spec, lazard_report const & rep)
{
    json out;
    out["ring"] = spec.source;
    out["n_max"] = rep.n_max;
    json entries = json::array();
    for (auto const & e : rep.entries) {
        json j;
        j["n"] = e.n;
        j["nu"] = e.nu;
        j["degree"] = e.degree;
        j["ideal_hnf"] = to_json(e.fundamental.hnf_basis());
        j["principal"] = e.verdict.label();
        j["generators"] = e.rees.generator_names;
        json images = json::array();
        for (auto const & g : e.rees.generator_images)
            images.push_back(g.str());
        j["generator_images"] = images;
        json rels = json::array();
        for (auto const & [u, v] : e.rees.relations)
            rels.push_back({to_json(u.coords()), to_json(v.coords())});
        j["relations"] = rels;
        j["u0_dim"] = e.u0_dim ? json(*e.u0_dim) : json(nullptr);
        j["u1_dim"] = e.u1_dim ? json(*e.u1_dim) : json(nullptr);
        j["injective"] = e.injective ? json(*e.injective) : json(nullptr);
        j["graded_check"] = e.rees.degree_ok;
        if (e.after_inverting)
            j["annotation"] = "after inverting S";
        entries.push_back(std::move(j));
    }
    out["entries"] = entries;
    out["polynomial"] = rep.polynomial;
    out["polynomial_by_fundamental_comparison"] = rep.polynomial_by_fundamental_comparison;
    out["injectivity_verified"] = rep.injectivity_verified;
    out["warnings"] = rep.warnings;
    return out;
}

namespace {

std::string cell(json const & v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void render_value(std::ostringstream & os, std::string const & key, json const & v)
{
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        // table of homogeneous objects
        std::vector<std::string> cols;
        for (auto const & [k, _] : v.front().items())
            cols.push_back(k);
        os << "\n### " << key << "\n\n|";
        for (auto const & c : cols)
            os << ' ' << c << " |";
        os << "\n|";
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << " --- |";
        os << '\n';
        for (auto const & row : v) {
            os << '|';
            for (auto const & c : cols)
                os << ' ' << (row.contains(c) ? cell(row.at(c)) : "") << " |";
            os << '\n';
        }
        os << '\n';
        return;
    }
    if (v.is_array() && key == "warnings") {
        os << "\n### warnings\n\n";
        if (v.empty())
            os << "none\n";
        for (auto const & w : v)
            os << "- " << cell(w) << '\n';
        return;
    }
    os << "- **" << key << "**: `" << cell(v) << "`\n";
}

} // namespace

std::string render_markdown(json const & report)
{
    std::ostringstream os;
    os << "# amod report\n\n";
    for (auto const & [k, v] : report.items())
        render_value(os, k, v);
    return os.str();
}

} // namespace amod
