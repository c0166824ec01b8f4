#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amod/cli.hpp"
#include "amod/spec_io.hpp"
#include "amod/verify.hpp"

using namespace amod;

namespace {

struct run_result {
    int code;
    std::string out;
    std::string err;
};

run_result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(std::string const & name) { return std::string(AMOD_CORPUS_DIR) + "/" + name + ".json"; }

std::string write_temp(std::string const & name, std::string const & body)
{
    auto path = std::filesystem::temp_directory_path() / ("amod_test_" + name + ".json");
    std::ofstream(path) << body;
    return path.string();
}

json parse(run_result const & r) { return json::parse(r.out); }

} // namespace

TEST_CASE("corpus specs load")
{
    auto all = load_corpus(AMOD_CORPUS_DIR);
    CHECK(all.size() == 21);
    std::size_t finite = 0;
    for (auto const & [name, spec] : all)
        finite += spec.finite ? 1 : 0;
    CHECK(finite == 7);
}

TEST_CASE("ring command")
{
    auto q = run({"ring", "--spec", corpus("quadratic_-5")});
    REQUIRE(q.code == 0);
    CHECK(parse(q)["rank"] == 2);
    CHECK(parse(q)["discriminant"] == "-20");

    auto g = run({"ring", "--spec", corpus("group_ring_C3")});
    CHECK(parse(g)["rank"] == 3);

    auto o = run({"ring", "--spec", corpus("quartic_-18")});
    CHECK(parse(o)["rank"] == 4);
    CHECK(parse(o)["axioms_verified"] == true);
    CHECK(parse(o)["basis"][2] == "a^2/3");
}

TEST_CASE("uhomology command")
{
    auto f9 = parse(run({"uhomology", "--spec", corpus("F_9"), "--n", "9"}));
    CHECK(f9["u0_dim"] == 2);
    CHECK(f9["u1_dim"] == 0);

    CHECK(parse(run({"uhomology", "--spec", corpus("Z_i"), "--n", "3"}))["u0_dim"] == 0);
    CHECK(parse(run({"uhomology", "--spec", corpus("Z_i"), "--n", "9"}))["u0_dim"] > 0);
    CHECK(parse(run({"uhomology", "--spec", corpus("Z_i"), "--n", "4", "--max-h", "2"}))["dims"].size() == 3);

    auto bad = run({"uhomology", "--spec", corpus("Z_i"), "--n", "6"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("NonPrimePower") != std::string::npos);
    CHECK(run({"uhomology", "--spec", corpus("Z_i"), "--n", "4", "--max-h", "3"}).code == 2);
}

TEST_CASE("ideals command")
{
    auto r = parse(run({"ideals", "--spec", corpus("Z_sqrt-5"), "--n", "2"}));
    auto e = r["entries"][0];
    CHECK(e["principal"] == "no");
    CHECK(e["norm"] == "2");
    CHECK(e["two_generators"].size() == 2);

    auto all = parse(run({"ideals", "--spec", corpus("Z_i"), "--n-max", "6"}));
    CHECK(all["entries"].size() == 5);
    CHECK(run({"ideals", "--spec", corpus("F_4")}).code == 2);
}

TEST_CASE("lazard command")
{
    auto a = run({"lazard", "--spec", corpus("Z_i"), "--n-max", "12"});
    REQUIRE(a.code == 0);
    auto j = parse(a);
    CHECK(j["polynomial"] == true);
    CHECK(j["entries"].size() == 11);
    for (auto const & e : j["entries"]) {
        CHECK(e["generators"].size() == 1);
        CHECK(e["degree"] == 2 * (e["n"].get<long>() - 1));
    }
    auto b = run({"lazard", "--spec", corpus("Z_i"), "--n-max", "12"});
    CHECK(a.out == b.out);

    auto s5 = parse(run({"lazard", "--spec", corpus("Z_sqrt-5"), "--n-max", "9"}));
    std::vector<long> two;
    for (auto const & e : s5["entries"])
        if (e["generators"].size() == 2)
            two.push_back(e["n"].get<long>());
    CHECK(two == std::vector<long>{2, 4, 8});

    auto md = run({"lazard", "--spec", corpus("Z_i"), "--n-max", "3", "--format", "markdown"});
    CHECK(md.out.find("| n | nu | degree |") != std::string::npos);

    auto inv = write_temp("inv", R"({"kind": "monogenic", "minpoly": [5, 0, 1], "invert": [2]})");
    auto ji = parse(run({"lazard", "--spec", inv, "--n-max", "3"}));
    CHECK(ji["entries"][0]["annotation"] == "after inverting S");

    auto out = (std::filesystem::temp_directory_path() / "amod_test_out.json").string();
    CHECK(run({"lazard", "--spec", corpus("Z"), "--n-max", "4", "--out", out}).out.empty());
    std::ifstream f(out);
    CHECK(json::parse(f)["n_max"] == 4);
}

TEST_CASE("malformed specs exit 2")
{
    CHECK(run({"ring", "--spec", "/nonexistent/spec.json"}).code == 2);
    CHECK(run({"ring", "--spec", write_temp("syntax", "{\"kind\": ")}).code == 2);
    CHECK(run({"ring", "--spec", write_temp("kind", R"({"kind": "banana"})")}).code == 2);
    CHECK(run({"ring", "--spec", write_temp("sqf", R"({"kind": "quadratic-integers", "d": -20})")}).code == 2);
    CHECK(run({"ring", "--spec", write_temp("monic", R"({"kind": "monogenic", "minpoly": [1, 2]})")}).code == 2);
    CHECK(run({"ring", "--spec", write_temp("rat", R"({"kind": "field-basis", "minpoly": [5, 0, 1],
        "basis": [["1", "0"], ["0", "x/2"]]})")})
              .code == 2);
    CHECK(run({"ring", "--spec", write_temp("dims", R"({"kind": "table", "structure_constants": [[[1, 0]]],
        "unit": [1]})")})
              .code == 2);
    CHECK(run({"ring"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"lazard", "--spec", corpus("Z"), "--n-max", "1"}).code == 2);
    CHECK(run({"lazard", "--spec", corpus("Z"), "--format", "xml"}).code == 2);
}

TEST_CASE("invalid rings are domain errors")
{
    auto open = write_temp("open", R"({"kind": "field-basis", "minpoly": [5, 0, 1], "basis": [["1", "0"], ["0", "1/2"]]})");
    auto r = run({"ring", "--spec", open});
    CHECK(r.code == 3);
    CHECK(r.err.find("NotClosed") != std::string::npos);

    auto noncomm = write_temp("axioms", R"({"kind": "table", "structure_constants":
        [[[1, 0], [0, 1]], [[0, 0], [0, 0]]], "unit": [1, 0]})");
    CHECK(run({"ring", "--spec", noncomm}).code == 3);
}

TEST_CASE("verify command")
{
    CHECK(run({"verify", "--suite", "nope"}).code == 2);

    auto ok = run({"verify", "--criterion", "3", "--criterion", "7"});
    CHECK(ok.code == 0);
    auto j = parse(ok);
    CHECK(j["criteria"].size() == 2);
    CHECK(j["passed"] == true);

    auto low = run({"verify", "--criterion", "4", "--principality-bound", "1"});
    CHECK(low.code == 0);
    CHECK(parse(low)["criteria"][0]["status"] == "SKIP");

    auto six = run({"verify", "--criterion", "6"});
    CHECK(six.code == 4);
    CHECK(parse(six)["criteria"][0]["status"] == "FAIL");
}
