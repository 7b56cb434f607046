#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flagsphere/checks.hpp"

namespace flagsphere {

/// Everything a command needs beyond its own arguments. Each field mirrors
/// one CLI flag (and its environment override).
struct CliOptions {
    CheckParams params;
    uint64_t seed = 1;
    bool structured = false;    // report format
    std::string out_dir = ".";  // generated files and counterexamples
};

/// Commands return the process exit code: 0 all pass, 1 a check failed
/// (counterexample written), 2 usage or parse error, 3 a resource cap was
/// hit. Reports go to `out`, diagnostics and the summary to `err`.

/// Flagness, sphere certificate, f/h/gamma and Dehn–Sommerville for one
/// file; the gamma-nonnegativity check runs when the input certifies.
int cmd_analyze(const std::string& path, const CliOptions& opt,
                std::ostream& out, std::ostream& err);

/// `count` seeded subdivision-family members (start dimension d, `steps`
/// subdivisions, seeds seed, seed+1, ...): writes one complex file and one
/// script file each, byte-reproducible for a fixed seed.
int cmd_generate(int d, int steps, int count, const CliOptions& opt,
                 std::ostream& out, std::ostream& err);

/// Requested checks over a catalog: the given files, or the built-in
/// catalog when none. Unreadable members become error reports; the scan
/// continues. Failing members get their complex written out as a
/// counterexample file.
int cmd_scan(const std::vector<std::string>& files,
             std::vector<std::string> checks, const CliOptions& opt,
             std::ostream& out, std::ostream& err);

/// Half-integral perfect matching of the file's complement graph, with the
/// decomposition listed. Absence only fails certified flag homology spheres.
int cmd_matching(const std::string& path, const CliOptions& opt,
                 std::ostream& out, std::ostream& err);

/// Equator enumeration for one file (honoring the subset budget), plus the
/// gamma comparison over everything found.
int cmd_equators(const std::string& path, const CliOptions& opt,
                 std::ostream& out, std::ostream& err);

}  // namespace flagsphere
