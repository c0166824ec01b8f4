#include "amod/spec_io.hpp"

#include <fstream>

namespace amod {

namespace {

[[noreturn]] void malformed(std::string const & what) { throw amod_error(errc::malformed_spec, what); }

json const & field(json const & j, char const * key)
{
    if (!j.contains(key))
        malformed(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long as_long(json const & v, char const * what)
{
    if (!v.is_number_integer())
        malformed(std::string(what) + " must be an integer");
    return v.get<long>();
}

std::vector<long> long_array(json const & v, char const * what)
{
    if (!v.is_array())
        malformed(std::string(what) + " must be an array of integers");
    std::vector<long> out;
    for (auto const & x : v)
        out.push_back(as_long(x, what));
    return out;
}

std::vector<integer> integer_array(json const & v, char const * what)
{
    if (!v.is_array())
        malformed(std::string(what) + " must be an array of integers");
    std::vector<integer> out;
    for (auto const & x : v) {
        if (x.is_string()) {
            integer z;
            if (z.set_str(x.get<std::string>(), 10) != 0)
                malformed(std::string(what) + ": bad integer \"" + x.get<std::string>() + "\"");
            out.push_back(z);
        } else {
            out.push_back(integer(as_long(x, what)));
        }
    }
    return out;
}

std::vector<std::string> labels_of(json const & j)
{
    std::vector<std::string> out;
    if (!j.contains("labels"))
        return out;
    if (!j.at("labels").is_array())
        malformed("\"labels\" must be an array of strings");
    for (auto const & x : j.at("labels")) {
        if (!x.is_string())
            malformed("\"labels\" must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<std::string> default_labels(std::size_t d)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d; ++i)
        out.push_back("b" + std::to_string(i));
    return out;
}

void check_prime_characteristic(long p)
{
    if (p < 2 || p >= 32768 || !is_prime(p))
        malformed("\"characteristic\" must be a prime below 2^15");
}

// d x d x d nested array flattened to c[(i*d+j)*d+k].
std::vector<integer> flatten_table(json const & v)
{
    if (!v.is_array() || v.empty())
        malformed("\"structure_constants\" must be a non-empty d x d x d array");
    std::size_t const d = v.size();
    std::vector<integer> out;
    out.reserve(d * d * d);
    for (auto const & plane : v) {
        if (!plane.is_array() || plane.size() != d)
            malformed("\"structure_constants\" must be a d x d x d array");
        for (auto const & row : plane) {
            if (!row.is_array() || row.size() != d)
                malformed("\"structure_constants\" must be a d x d x d array");
            auto r = integer_array(row, "structure constant");
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    return out;
}

std::uint32_t mod_p(integer const & x, long p)
{
    integer r = x % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

std::string ring_spec::name() const { return integral ? integral->name() : finite->name(); }

rational parse_rational(std::string const & s)
{
    rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        malformed("bad rational \"" + s + "\"");
    q.canonicalize();
    return q;
}

ring_spec parse_ring_spec(json const & j)
{
    if (!j.is_object())
        malformed("ring spec must be a JSON object");
    json const & kind_v = field(j, "kind");
    if (!kind_v.is_string())
        malformed("\"kind\" must be a string");
    std::string const kind = kind_v.get<std::string>();
    std::vector<long> const inverted = j.contains("invert") ? long_array(j.at("invert"), "\"invert\"") : std::vector<long>{};
    for (long p : inverted)
        if (p < 2)
            malformed("\"invert\" entries must be integers >= 2");
    auto labels = labels_of(j);
    std::optional<long> characteristic;
    if (j.contains("characteristic")) {
        characteristic = as_long(j.at("characteristic"), "\"characteristic\"");
        check_prime_characteristic(*characteristic);
    }

    ring_spec out;
    out.source = j;
    if (kind == "monogenic") {
        auto f = integer_array(field(j, "minpoly"), "\"minpoly\"");
        if (f.size() < 2 || f.back() != 1)
            malformed("\"minpoly\" must be monic of degree >= 1 (constant term first)");
        if (characteristic) {
            std::vector<long> fl;
            for (auto const & c : f)
                fl.push_back(static_cast<long>(mod_p(c, *characteristic)));
            std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
            out.finite = build_fp_monogenic(static_cast<std::uint32_t>(*characteristic), fl, name);
        } else {
            out.integral = build_monogenic(f, inverted);
        }
    } else if (kind == "group-ring") {
        long const n = as_long(field(j, "n"), "\"n\"");
        if (n < 1)
            malformed("\"n\" must be positive");
        out.integral = build_group_ring(n, inverted);
    } else if (kind == "quadratic-integers") {
        long const d = as_long(field(j, "d"), "\"d\"");
        if (d == 0 || d == 1)
            malformed("\"d\" must be a squarefree integer other than 0 and 1");
        for (long q = 2; q * q <= std::labs(d); ++q)
            if (d % (q * q) == 0)
                malformed("\"d\" must be squarefree");
        out.integral = build_quadratic_integers(d, inverted);
    } else if (kind == "field-basis") {
        auto f = integer_array(field(j, "minpoly"), "\"minpoly\"");
        if (f.size() < 2 || f.back() != 1)
            malformed("\"minpoly\" must be monic of degree >= 1 (constant term first)");
        json const & b = field(j, "basis");
        std::size_t const d = f.size() - 1;
        if (!b.is_array() || b.size() != d)
            malformed("\"basis\" must list " + std::to_string(d) + " vectors");
        std::vector<std::vector<rational>> basis;
        for (auto const & v : b) {
            if (!v.is_array() || v.size() != d)
                malformed("each basis vector must have " + std::to_string(d) + " rational entries");
            std::vector<rational> row;
            for (auto const & x : v) {
                if (x.is_string())
                    row.push_back(parse_rational(x.get<std::string>()));
                else
                    row.push_back(rational(as_long(x, "basis entry")));
            }
            basis.push_back(std::move(row));
        }
        if (!labels.empty() && labels.size() != d)
            malformed("\"labels\" must have one entry per basis vector");
        out.integral = build_from_field_basis(f, basis, labels, inverted);
    } else if (kind == "table") {
        auto table = flatten_table(field(j, "structure_constants"));
        std::size_t const d = field(j, "structure_constants").size();
        auto unit = integer_array(field(j, "unit"), "\"unit\"");
        if (unit.size() != d)
            malformed("\"unit\" must have " + std::to_string(d) + " entries");
        if (labels.empty())
            labels = default_labels(d);
        if (labels.size() != d)
            malformed("\"labels\" must have one entry per basis element");
        std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "table";
        if (characteristic) {
            std::vector<std::uint32_t> t;
            for (auto const & c : table)
                t.push_back(mod_p(c, *characteristic));
            fp_vector u;
            for (auto const & c : unit)
                u.push_back(mod_p(c, *characteristic));
            out.finite = fp_algebra::from_table(name, static_cast<std::uint32_t>(*characteristic), labels, t, u);
        } else {
            out.integral = ring::from_table(name, labels, table, unit, inverted);
        }
    } else {
        malformed("unknown kind \"" + kind + "\"");
    }
    if (out.finite && !inverted.empty())
        malformed("\"invert\" is meaningless for an F_p-algebra");
    return out;
}

ring_spec load_ring_spec(std::filesystem::path const & path)
{
    std::ifstream in(path);
    if (!in)
        malformed("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (json::parse_error const & e) {
        malformed(path.string() + ": " + e.what());
    }
    return parse_ring_spec(j);
}

} // namespace amod
