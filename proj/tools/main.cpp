#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagsphere/commands.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/parallel.hpp"
#include "flagsphere/version.hpp"

int main(int argc, char** argv) {
    using namespace flagsphere;

    CLI::App app{
        "flagsphere: certificates, face vectors, equators and complement "
        "matchings for flag homology spheres"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CliOptions opt;
    std::string format = "text";

    app.add_option("--char", opt.params.p,
                   "homology coefficient characteristic (a prime)")
        ->envname("FLAGSPHERE_CHAR")
        ->default_val(2);
    app.add_option("--subset-budget", opt.params.subset_budget,
                   "equator enumeration candidate budget")
        ->envname("FLAGSPHERE_SUBSET_BUDGET")
        ->default_val(2'000'000);
    app.add_option("--jobs", opt.params.jobs, "worker threads")
        ->envname("FLAGSPHERE_JOBS")
        ->default_val(default_jobs());
    app.add_option("--seed", opt.seed, "base seed for generated members")
        ->envname("FLAGSPHERE_SEED")
        ->default_val(1);
    app.add_option("--format", format, "report format: text or structured")
        ->envname("FLAGSPHERE_FORMAT")
        ->check(CLI::IsMember({"text", "structured"}))
        ->default_val("text");
    app.add_option("--out", opt.out_dir,
                   "directory for generated and counterexample files")
        ->envname("FLAGSPHERE_OUT")
        ->default_val(".");
    app.add_option("--coloring-cap", opt.params.coloring_cap,
                   "balanced-coloring backtracking node cap")
        ->envname("FLAGSPHERE_COLORING_CAP")
        ->default_val(10'000'000);

    std::string analyze_file, matching_file, equators_file;
    auto* analyze = app.add_subcommand(
        "analyze", "certify one facet-list file and report its vectors");
    analyze->add_option("file", analyze_file, "facet-list file")->required();

    int gen_d = 3, gen_steps = 0, gen_count = 1;
    auto* generate = app.add_subcommand(
        "generate", "write seeded subdivision-family members with scripts");
    generate->add_option("-d,--start-dim", gen_d,
                         "cross-polytope start dimension (sphere dim d-1)")
        ->required();
    generate->add_option("--steps", gen_steps, "number of edge subdivisions")
        ->default_val(0);
    generate->add_option("--count", gen_count,
                         "how many members (seeds seed, seed+1, ...)")
        ->default_val(1);

    std::vector<std::string> scan_files, scan_checks;
    auto* scan = app.add_subcommand(
        "scan", "run checks over a catalog (built-in when no files given)");
    scan->add_option("files", scan_files, "facet-list files");
    scan->add_option("--checks", scan_checks,
                     "comma-separated checks (default: all): gal link "
                     "equator structure dim2 h-ineq h1hi matching mcmullen "
                     "contraction-id suspension-id balanced")
        ->delimiter(',');

    auto* matching = app.add_subcommand(
        "matching", "half-integral perfect matching of the complement graph");
    matching->add_option("file", matching_file, "facet-list file")->required();

    auto* equators = app.add_subcommand(
        "equators", "enumerate equators and compare their gamma vectors");
    equators->add_option("file", equators_file, "facet-list file")->required();

    // global flags may appear after the subcommand name
    for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!is_prime(opt.params.p)) {
        std::cerr << "error: --char must be a prime, got " << opt.params.p
                  << '\n';
        return 2;
    }
    if (opt.params.jobs < 1) opt.params.jobs = 1;
    if (opt.params.subset_budget < 0) {
        std::cerr << "error: --subset-budget must be nonnegative\n";
        return 2;
    }
    opt.structured = (format == "structured");

    try {
        if (*analyze)
            return cmd_analyze(analyze_file, opt, std::cout, std::cerr);
        if (*generate)
            return cmd_generate(gen_d, gen_steps, gen_count, opt, std::cout,
                                std::cerr);
        if (*scan)
            return cmd_scan(scan_files, scan_checks, opt, std::cout,
                            std::cerr);
        if (*matching)
            return cmd_matching(matching_file, opt, std::cout, std::cerr);
        if (*equators)
            return cmd_equators(equators_file, opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
