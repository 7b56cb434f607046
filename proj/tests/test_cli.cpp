#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagsphere/catalog.hpp"
#include "flagsphere/io.hpp"

using namespace flagsphere;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("flagsphere-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

/// Runs the tool through the shell; `env` is prepended verbatim (e.g.
/// "FLAGSPHERE_SEED=5").
RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out = work_dir() / ("out" + std::to_string(counter));
    const fs::path err = work_dir() / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
           err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

fs::path write_fixture(const std::string& name, const SimplicialComplex& k) {
    const fs::path p = work_dir() / name;
    write_complex_file(p.string(), k);
    return p;
}

SimplicialComplex torus7() {
    std::vector<Face> fs;
    for (int i = 0; i < 7; ++i) {
        fs.push_back(Face{static_cast<VertexId>(i),
                          static_cast<VertexId>((i + 1) % 7),
                          static_cast<VertexId>((i + 3) % 7)});
        fs.push_back(Face{static_cast<VertexId>(i),
                          static_cast<VertexId>((i + 2) % 7),
                          static_cast<VertexId>((i + 3) % 7)});
    }
    return SimplicialComplex::from_facets(fs);
}

SimplicialComplex tetra_boundary() {
    std::vector<Face> tri;
    for (int a = 0; a < 4; ++a) {
        Face f = Face::full(4);
        f.erase(a);
        tri.push_back(f);
    }
    return SimplicialComplex::from_facets(tri);
}

}  // namespace

TEST_CASE("version and usage") {
    RunResult v = run_cli("--version");
    CHECK(v.code == 0);
    CHECK(contains(v.out, "0.1.0"));

    CHECK(run_cli("").code == 2);            // a subcommand is required
    CHECK(run_cli("frobnicate").code == 2);  // unknown subcommand
    CHECK(run_cli("analyze").code == 2);     // missing file argument
    RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.out, "scan"));
}

TEST_CASE("analyze") {
    const fs::path octa =
        write_fixture("octa3.txt", SimplicialComplex::octahedral_sphere(3));

    SUBCASE("a certified sphere reports vectors and the sign check") {
        RunResult r = run_cli("analyze " + octa.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "certificate"));
        CHECK(contains(r.out, "flag, sphere"));
        CHECK(contains(r.out, "h = (1, 3, 3, 1)"));
        CHECK(contains(r.out, "gamma = (1)"));
        CHECK(contains(r.out, "3 check(s): 3 pass"));
    }
    SUBCASE("non-flag spheres are informational, not failures") {
        const fs::path tetra = write_fixture("tetra.txt", tetra_boundary());
        RunResult r = run_cli("analyze " + tetra.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "not flag, sphere"));
        CHECK(contains(r.out, "2 check(s): 2 pass"));  // no gamma sign check
    }
    SUBCASE("global flags work after the subcommand") {
        RunResult r = run_cli("analyze " + octa.string() + " --char 3");
        CHECK(r.code == 0);
    }
    SUBCASE("missing and malformed files exit 2") {
        RunResult missing = run_cli("analyze " + work_dir().string() +
                                    "/no-such-file.txt");
        CHECK(missing.code == 2);
        CHECK(contains(missing.err, "cannot open"));

        const fs::path bad = work_dir() / "bad.txt";
        std::ofstream(bad) << "0 1 2\n1 1 2\n";
        RunResult malformed = run_cli("analyze " + bad.string());
        CHECK(malformed.code == 2);
        CHECK(contains(malformed.err, "line 2"));
    }
    SUBCASE("composite characteristics are rejected") {
        RunResult r = run_cli("analyze " + octa.string() + " --char 4");
        CHECK(r.code == 2);
        CHECK(contains(r.err, "prime"));
    }
}

TEST_CASE("scan") {
    SUBCASE("unknown check names exit 2") {
        RunResult r = run_cli("scan --checks bogus");
        CHECK(r.code == 2);
        CHECK(contains(r.err, "unknown check"));
    }
    SUBCASE("a starved equator budget truncates (exit 3)") {
        RunResult r = run_cli("scan --checks equator --subset-budget 1");
        CHECK(r.code == 3);
        CHECK(contains(r.out, "TRUNCATED"));
        CHECK(contains(r.out, "16 pass, 0 fail, 0 error, 16 truncated"));
    }
    SUBCASE("environment variables mirror the flags") {
        RunResult r = run_cli("scan --checks equator",
                              "FLAGSPHERE_SUBSET_BUDGET=1");
        CHECK(r.code == 3);
    }
    SUBCASE("fast checks over the built-in catalog all pass") {
        RunResult r = run_cli("scan --checks gal,link,h-ineq,h1hi,matching,"
                              "mcmullen,suspension-id --jobs 4");
        CHECK(r.code == 0);
        CHECK(contains(r.out, "0 fail, 0 error, 0 truncated"));
    }
    SUBCASE("structured reports are one json document per line") {
        RunResult r = run_cli("scan --checks gal --format structured");
        CHECK(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        int count = 0;
        while (std::getline(lines, line)) {
            auto doc = nlohmann::ordered_json::parse(line);
            CHECK(doc["schema_version"] == 1);
            CHECK(doc.contains("verdict"));
            ++count;
        }
        CHECK(count == 32);  // 16 members x (certify + gal)
        CHECK(contains(r.err, "32 check(s)"));
    }
    SUBCASE("a failing member writes a counterexample and exits 1") {
        const fs::path dir = work_dir() / "scan-fail";
        fs::create_directories(dir);
        const fs::path torus = dir / "torus.txt";
        write_complex_file(torus.string(), torus7());
        RunResult r = run_cli("scan " + torus.string() + " --checks gal --out " +
                              dir.string());
        CHECK(r.code == 1);
        CHECK(contains(r.err, "counterexample written"));
        bool found = false;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".counterexample") {
                found = true;
                ComplexDocument doc = read_complex_file(
                    entry.path().string(), FileFormat::kText);
                CHECK(doc.complex == torus7());
            }
        CHECK(found);
    }
    SUBCASE("unreadable files are reported but the scan continues") {
        const fs::path octa =
            write_fixture("octa-scan.txt", SimplicialComplex::octahedral_sphere(3));
        RunResult r = run_cli("scan " + work_dir().string() +
                              "/absent.txt " + octa.string() + " --checks gal");
        CHECK(r.code == 2);  // the load error dominates (no failures)
        CHECK(contains(r.out, "load"));
        CHECK(contains(r.out, "cannot open"));
        CHECK(contains(r.out, "gal"));  // the good member still ran
        CHECK(contains(r.out, "1 error"));
    }
}

TEST_CASE("generate") {
    SUBCASE("seeded runs are byte-reproducible") {
        const fs::path d1 = work_dir() / "gen1";
        const fs::path d2 = work_dir() / "gen2";
        RunResult r1 = run_cli("generate -d 3 --steps 4 --count 2 --seed 9 --out " +
                               d1.string());
        RunResult r2 = run_cli("generate -d 3 --steps 4 --count 2 --seed 9 --out " +
                               d2.string());
        CHECK(r1.code == 0);
        CHECK(r2.code == 0);

        std::vector<std::string> names;
        for (const auto& entry : fs::directory_iterator(d1))
            names.push_back(entry.path().filename().string());
        CHECK(names.size() == 4);  // two members, complex + script each
        for (const std::string& name : names)
            CHECK(slurp(d1 / name) == slurp(d2 / name));

        // different seed, different complex
        const fs::path d3 = work_dir() / "gen3";
        RunResult r3 = run_cli(
            "generate -d 3 --steps 4 --count 1 --seed 10 --out " + d3.string());
        CHECK(r3.code == 0);
        CHECK(slurp(d1 / "family-s-d3-steps4-seed10.txt") ==
              slurp(d3 / "family-s-d3-steps4-seed10.txt"));
    }
    SUBCASE("scripts replay to the generated complex") {
        const fs::path dir = work_dir() / "gen-replay";
        RunResult r = run_cli("generate -d 2 --steps 5 --seed 77 --out " +
                              dir.string());
        CHECK(r.code == 0);
        SubdivisionScript s = read_script_file(
            (dir / "family-s-d2-steps5-seed77.script.json").string());
        ComplexDocument doc = read_complex_file(
            (dir / "family-s-d2-steps5-seed77.txt").string());
        CHECK(replay_script(s) == doc.complex);
        CHECK(s.seeded);
        CHECK(s.seed == 77);
    }
    SUBCASE("bad parameters exit 2") {
        CHECK(run_cli("generate -d 0").code == 2);
        CHECK(run_cli("generate -d 3 --steps -1").code == 2);
        CHECK(run_cli("generate -d 3 --count 0").code == 2);
    }
}

TEST_CASE("matching") {
    SUBCASE("certified members must have one") {
        const fs::path octa =
            write_fixture("octa-m.txt", SimplicialComplex::octahedral_sphere(3));
        RunResult r = run_cli("matching " + octa.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "3 edge(s), 0 odd cycle(s)"));
    }
    SUBCASE("absence on an uncertified input is informational") {
        const fs::path tetra = write_fixture("tetra-m.txt", tetra_boundary());
        RunResult r = run_cli("matching " + tetra.string());
        CHECK(r.code == 0);
        CHECK(contains(r.out, "absence is informational"));
    }
    SUBCASE("missing file exits 2") {
        CHECK(run_cli("matching /does/not/exist.txt").code == 2);
    }
}

TEST_CASE("equators") {
    const fs::path octa =
        write_fixture("octa-e.txt", SimplicialComplex::octahedral_sphere(3));
    RunResult r = run_cli("equators " + octa.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "3 equator(s)"));
    CHECK(contains(r.out, "no violation in 3 equator(s)"));

    RunResult trunc = run_cli("equators " + octa.string() +
                              " --subset-budget 2 --format structured");
    CHECK(trunc.code == 3);
    std::istringstream lines(trunc.out);
    std::string first;
    std::getline(lines, first);
    auto doc = nlohmann::ordered_json::parse(first);
    CHECK(doc["verdict"] == "truncated");
    CHECK(doc["parameters"]["subset_budget"] == 2);
}
