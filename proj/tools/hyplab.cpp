#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <hyplab/cli.hpp>

int main(int argc, char **argv)
{
    using namespace hyplab;
    cli::RunConfig cfg;
    std::string family = "C", format, suite_pos;
    std::optional<int> n, k, max_n, cdes_inv;
    std::optional<long long> r;

    CLI::App app{"Ehrhart h* of type-C hypersimplices, alcoves and signed permutation statistics"};
    app.add_option("command", cfg.command, "stats | hstar | poset | verify | psi")
        ->required()
        ->check(CLI::IsMember({"stats", "hstar", "poset", "verify", "psi"}));
    app.add_option("target", suite_pos, "verify: all | ehrhart | series | alcoves | limits | conjecture");
    app.add_option("--suite", cfg.suite, "same as the positional target");
    app.add_option("--family", family, "A | B | C | D (psi)");
    app.add_option("--n", n, "rank");
    app.add_option("--k", k, "slice index 1..2n-1 (hstar)");
    app.add_option("--r", r, "dilation: also print lattice point counts (hstar)");
    app.add_option("--method", cfg.method, "basc | flag | oracle | all (hstar)");
    app.add_option("--format", format, "json | csv | dot | plain");
    app.add_option("--max-n", max_n, "raise or lower the enumeration and rank caps");
    app.add_option("--out", cfg.out, "write output to this file");
    app.add_option("--cdes-inv", cdes_inv, "stats: keep rows with cdes(w^-1) equal to this");
    app.add_flag("--bn", cfg.whole_group, "stats: enumerate all of B_n instead of X_n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::exit_error;
    }

    cfg.n = n;
    cfg.k = k;
    cfg.r = r;
    cfg.max_n = max_n;
    cfg.cdes_inv = cdes_inv;
    if (!suite_pos.empty()) cfg.suite = suite_pos;
    try {
        cfg.family = parse_family(family);
        if (!format.empty()) cfg.format = cli::parse_format(format);
    } catch (const Error &e) {
        std::cerr << "hyplab: " << e.what() << '\n';
        return cli::exit_error;
    }

    if (cfg.out.empty()) return cli::run(cfg, std::cout, std::cerr);
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        std::cerr << "hyplab: cannot open " << cfg.out << '\n';
        return cli::exit_error;
    }
    return cli::run(cfg, file, std::cerr);
}
