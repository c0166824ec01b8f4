#include "amod/cli.hpp"

#include <fstream>

#include "CLI11.hpp"

#include "amod/lazard.hpp"
#include "amod/report.hpp"
#include "amod/spec_io.hpp"
#include "amod/u_homology.hpp"
#include "amod/verify.hpp"

namespace amod {

namespace {

struct cli_config {
    std::string spec;
    long n = 0;
    long n_max = 12;
    int max_h = 1;
    long principality_bound = 50;
    int degree_check = 5;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
    std::string suite = "paper";
    std::string corpus;
    std::vector<int> criteria;
};

void emit(cli_config const & cfg, json const & report, std::ostream & out)
{
    std::string const text = cfg.format == "markdown" ? render_markdown(report) : report.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw amod_error(errc::invalid_argument, "cannot write " + cfg.out);
    f << text;
}

} // namespace

int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    cli_config cfg;
    CLI::App app{"Exact computations for the classifying ring of formal A-modules", "amod"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--out", cfg.out, "Write the report to this path");
    };
    auto add_spec = [&](CLI::App * sub) { sub->add_option("--spec", cfg.spec, "Ring spec JSON")->required(); };
    auto add_bound = [&](CLI::App * sub) {
        sub->add_option("--principality-bound", cfg.principality_bound, "Coordinate bound of the generator search")
            ->check(CLI::PositiveNumber);
    };

    auto * ring_cmd = app.add_subcommand("ring", "Validate a ring spec and print its invariants");
    add_spec(ring_cmd);
    add_common(ring_cmd);

    auto * ideals_cmd = app.add_subcommand("ideals", "Fundamental ideals I_n with principality verdicts");
    add_spec(ideals_cmd);
    ideals_cmd->add_option("--n", cfg.n, "Single n (default: every 2 <= n <= n-max)")->check(CLI::Range(2L, 1L << 20));
    ideals_cmd->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(2L, 1L << 20));
    add_bound(ideals_cmd);
    add_common(ideals_cmd);

    auto * uh_cmd = app.add_subcommand("uhomology", "U-homology in low degrees");
    add_spec(uh_cmd);
    uh_cmd->add_option("--n", cfg.n, "Prime power n")->required()->check(CLI::Range(2L, 1L << 20));
    uh_cmd->add_option("--max-h", cfg.max_h, "Top homological degree")->check(CLI::Range(1, 2));
    add_common(uh_cmd);

    auto * lz_cmd = app.add_subcommand("lazard", "Presentation of the classifying ring through degree 2(n-max - 1)");
    add_spec(lz_cmd);
    lz_cmd->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(2L, 4096L));
    lz_cmd->add_option("--degree-check", cfg.degree_check, "Graded check bound")->check(CLI::Range(0, 64));
    lz_cmd->add_option("--seed", cfg.seed, "Seed of the sampled relations");
    add_bound(lz_cmd);
    add_common(lz_cmd);

    auto * vf_cmd = app.add_subcommand("verify", "Run the verification suite");
    vf_cmd->add_option("--suite", cfg.suite, "paper or corpus");
    vf_cmd->add_option("--corpus", cfg.corpus, "Directory of ring specs");
    vf_cmd->add_option("--criterion", cfg.criteria, "Run only these criteria");
    vf_cmd->add_option("--seed", cfg.seed, "Seed of the randomized checks");
    add_bound(vf_cmd);
    add_common(vf_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return 0;
    } catch (CLI::ParseError const & e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << '\n';
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*ring_cmd) {
            emit(cfg, ring_info_json(load_ring_spec(cfg.spec)), out);
            return 0;
        }
        if (*ideals_cmd) {
            auto spec = load_ring_spec(cfg.spec);
            std::vector<long> ns;
            if (cfg.n > 0)
                ns.push_back(cfg.n);
            else
                for (long n = 2; n <= cfg.n_max; ++n)
                    ns.push_back(n);
            emit(cfg, ideals_json(spec, ns, cfg.principality_bound), out);
            return 0;
        }
        if (*uh_cmd) {
            auto spec = load_ring_spec(cfg.spec);
            auto h = spec.integral ? u_homology(*spec.integral, cfg.n, cfg.max_h)
                                   : u_homology(*spec.finite, cfg.n, cfg.max_h);
            emit(cfg, homology_json(spec, h), out);
            return 0;
        }
        if (*lz_cmd) {
            auto spec = load_ring_spec(cfg.spec);
            if (!spec.integral)
                throw amod_error(errc::invalid_argument, "lazard needs a ring free over Z");
            lazard_options opts;
            opts.n_max = cfg.n_max;
            opts.degree_check = cfg.degree_check;
            opts.principality_bound = cfg.principality_bound;
            opts.seed = cfg.seed;
            auto rep = assemble_LA(*spec.integral, opts);
            emit(cfg, lazard_json(spec, rep), out);
            for (auto const & w : rep.warnings)
                err << "warning: " << w << '\n';
            return rep.injectivity_verified ? 0 : exit_code(errc::injectivity_unverified);
        }
        if (*vf_cmd) {
            verify_options opts;
            opts.suite = cfg.suite;
            opts.principality_bound = cfg.principality_bound;
            opts.seed = cfg.seed;
            opts.corpus_dir = cfg.corpus;
            opts.only = cfg.criteria;
            auto results = run_verify(opts);
            emit(cfg, verify_json(opts, results), out);
            for (auto const & r : results)
                err << r.status_name() << "  criterion " << r.id << ": " << r.title << " (" << r.detail << ")\n";
            return suite_passed(results) ? 0 : 4;
        }
    } catch (amod_error const & e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (std::exception const & e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

} // namespace amod
