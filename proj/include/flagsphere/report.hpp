#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace flagsphere {

/// Outcome of one check. kFail means a genuine counterexample (with a
/// machine-readable witness attached); kTruncated means a resource limit was
/// hit before the check could finish; kError means the check could not run
/// on this input at all.
enum class Verdict { kPass, kFail, kTruncated, kError };

const char* to_string(Verdict v);

/// One check outcome on one input. Serializes to a single structured line;
/// the text renderer prints a fixed-width human row instead. A failing
/// report must carry its witness in `witnesses`; a truncated one records the
/// limit that was hit in `note` or `parameters`.
struct Report {
    std::string check;
    std::string input;
    Verdict verdict = Verdict::kPass;
    std::string note;                  // short human-readable detail
    nlohmann::ordered_json parameters; // caps/characteristic/seed in effect
    nlohmann::ordered_json witnesses;  // machine-readable evidence
    double millis = 0.0;
};

/// Structured line document (adds schema_version and tool_version). The
/// field order is fixed so identical runs are byte-identical apart from the
/// trailing timing field.
nlohmann::ordered_json report_to_json(const Report& r);

std::string report_human_line(const Report& r);

/// Serializes reports as they arrive (one line each) and aggregates the
/// process exit code: 1 if anything failed, else 2 if anything errored,
/// else 3 if anything was truncated by a resource cap, else 0. In
/// structured mode the lines go to `out` and a closing human summary goes
/// to `err`; in text mode the human rows and summary both go to `out`.
class ReportSink {
public:
    ReportSink(std::ostream& out, std::ostream& err, bool structured);

    void emit(const Report& r);
    void finish();  // prints the summary; idempotent

    int exit_code() const;
    int failures() const { return fail_; }
    int errors() const { return error_; }
    int truncations() const { return truncated_; }
    int total() const { return total_; }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool structured_;
    bool finished_ = false;
    int total_ = 0, fail_ = 0, error_ = 0, truncated_ = 0;
};

}  // namespace flagsphere
