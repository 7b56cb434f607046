#include "flagsphere/report.hpp"

#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "flagsphere/version.hpp"

namespace flagsphere {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::kPass: return "pass";
        case Verdict::kFail: return "fail";
        case Verdict::kTruncated: return "truncated";
        case Verdict::kError: return "error";
    }
    return "?";
}

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["input"] = r.input;
    doc["check"] = r.check;
    doc["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) doc["note"] = r.note;
    if (!r.parameters.is_null()) doc["parameters"] = r.parameters;
    if (!r.witnesses.is_null()) doc["witnesses"] = r.witnesses;
    doc["millis"] = r.millis;
    return doc;
}

std::string report_human_line(const Report& r) {
    std::ostringstream ss;
    std::string tag = to_string(r.verdict);
    for (char& c : tag) c = static_cast<char>(std::toupper(c));
    ss << '[' << std::left << std::setw(9) << tag << "] " << std::setw(16)
       << r.check << ' ' << r.input;
    if (!r.note.empty()) ss << " — " << r.note;
    ss << " (" << std::fixed << std::setprecision(1) << r.millis << " ms)";
    return ss.str();
}

ReportSink::ReportSink(std::ostream& out, std::ostream& err, bool structured)
    : out_(out), err_(err), structured_(structured) {}

void ReportSink::emit(const Report& r) {
    ++total_;
    switch (r.verdict) {
        case Verdict::kPass: break;
        case Verdict::kFail: ++fail_; break;
        case Verdict::kError: ++error_; break;
        case Verdict::kTruncated: ++truncated_; break;
    }
    if (structured_)
        out_ << report_to_json(r).dump() << '\n';
    else
        out_ << report_human_line(r) << '\n';
}

void ReportSink::finish() {
    if (finished_) return;
    finished_ = true;
    std::ostringstream ss;
    ss << total_ << " check(s): " << (total_ - fail_ - error_ - truncated_)
       << " pass, " << fail_ << " fail, " << error_ << " error, "
       << truncated_ << " truncated";
    (structured_ ? err_ : out_) << ss.str() << '\n';
}

int ReportSink::exit_code() const {
    if (fail_ > 0) return 1;
    if (error_ > 0) return 2;
    if (truncated_ > 0) return 3;
    return 0;
}

}  // namespace flagsphere
