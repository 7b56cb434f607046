#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "flagsphere/report.hpp"
#include "flagsphere/version.hpp"

using namespace flagsphere;

TEST_CASE("verdict names") {
    CHECK(std::string(to_string(Verdict::kPass)) == "pass");
    CHECK(std::string(to_string(Verdict::kFail)) == "fail");
    CHECK(std::string(to_string(Verdict::kTruncated)) == "truncated");
    CHECK(std::string(to_string(Verdict::kError)) == "error");
}

TEST_CASE("structured lines have a fixed key order and omit empties") {
    Report r;
    r.check = "gal";
    r.input = "icosahedron";
    r.verdict = Verdict::kPass;
    r.millis = 1.5;
    nlohmann::ordered_json doc = report_to_json(r);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema_version", "tool_version",
                                           "input", "check", "verdict",
                                           "millis"});
    CHECK(doc["schema_version"] == kReportSchemaVersion);
    CHECK(doc["tool_version"] == std::string(kToolVersion));
    CHECK(doc["verdict"] == "pass");

    r.note = "because";
    r.parameters = {{"p", 2}};
    r.witnesses = {{"w", {0, 1, 2}}};
    nlohmann::ordered_json full = report_to_json(r);
    keys.clear();
    for (auto it = full.begin(); it != full.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{
                      "schema_version", "tool_version", "input", "check",
                      "verdict", "note", "parameters", "witnesses", "millis"});
}

TEST_CASE("human lines are padded and carry the note") {
    Report r;
    r.check = "equator";
    r.input = "k.txt";
    r.verdict = Verdict::kFail;
    r.note = "violation at {0, 2}";
    r.millis = 12.34;
    const std::string line = report_human_line(r);
    CHECK(line ==
          "[FAIL     ] equator          k.txt — violation at {0, 2} (12.3 ms)");

    Report ok;
    ok.check = "certify";
    ok.input = "x";
    ok.millis = 0.0;
    CHECK(report_human_line(ok) == "[PASS     ] certify          x (0.0 ms)");
}

namespace {

Report with_verdict(Verdict v) {
    Report r;
    r.check = "c";
    r.input = "i";
    r.verdict = v;
    return r;
}

}  // namespace

TEST_CASE("sink exit codes: fail beats error beats truncated") {
    struct Case {
        std::vector<Verdict> emitted;
        int expected;
    };
    const Case cases[] = {
        {{}, 0},
        {{Verdict::kPass, Verdict::kPass}, 0},
        {{Verdict::kPass, Verdict::kTruncated}, 3},
        {{Verdict::kTruncated, Verdict::kError}, 2},
        {{Verdict::kError, Verdict::kFail, Verdict::kTruncated}, 1},
        {{Verdict::kFail}, 1},
    };
    for (const Case& c : cases) {
        std::ostringstream out, err;
        ReportSink sink(out, err, /*structured=*/true);
        for (Verdict v : c.emitted) sink.emit(with_verdict(v));
        CHECK(sink.exit_code() == c.expected);
        CHECK(sink.total() == static_cast<int>(c.emitted.size()));
    }
}

TEST_CASE("sink counters and summary") {
    std::ostringstream out, err;
    ReportSink sink(out, err, /*structured=*/true);
    sink.emit(with_verdict(Verdict::kPass));
    sink.emit(with_verdict(Verdict::kFail));
    sink.emit(with_verdict(Verdict::kError));
    sink.emit(with_verdict(Verdict::kTruncated));
    sink.emit(with_verdict(Verdict::kPass));
    CHECK(sink.total() == 5);
    CHECK(sink.failures() == 1);
    CHECK(sink.errors() == 1);
    CHECK(sink.truncations() == 1);

    sink.finish();
    sink.finish();  // idempotent: summary printed once
    CHECK(err.str() == "5 check(s): 2 pass, 1 fail, 1 error, 1 truncated\n");

    // structured mode: one json document per line on out, summary on err
    std::istringstream lines(out.str());
    std::string line;
    int parsed = 0;
    while (std::getline(lines, line)) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(line);
        CHECK(doc.contains("verdict"));
        ++parsed;
    }
    CHECK(parsed == 5);
}

TEST_CASE("text mode sends rows and summary to the same stream") {
    std::ostringstream out, err;
    ReportSink sink(out, err, /*structured=*/false);
    sink.emit(with_verdict(Verdict::kPass));
    sink.finish();
    CHECK(err.str().empty());
    CHECK(out.str() ==
          "[PASS     ] c                i (0.0 ms)\n"
          "1 check(s): 1 pass, 0 fail, 0 error, 0 truncated\n");
}
