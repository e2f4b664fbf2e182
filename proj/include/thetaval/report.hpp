#pragma once

// Serialization of verification records.
//
// JSON layout (stable within one "version" string):
//   {"version": "...", "records": [{name, paper_anchor, lhs, rhs, abs_error,
//    combined_bound, tolerance, pass, runtime_ms}, ...],
//    "summary": {"total": n, "passed": n, "failed": n}}
// Reals are written with 17 significant digits; non-finite reals as null.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetaval/verification.hpp"

namespace thetaval {

inline constexpr const char* kReportVersion = "thetaval-report/1";

enum class ReportFormat { json, markdown };

/// Raised when the report cannot be written.
class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

inline ReportSummary summarize(const std::vector<VerificationRecord>& records) {
    ReportSummary s;
    s.total = records.size();
    for (const auto& r : records) (r.pass ? s.passed : s.failed) += 1;
    return s;
}

namespace detail {

inline std::string json_real(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string short_real(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

inline std::string markdown_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

inline void write_json(const std::vector<VerificationRecord>& records, std::ostream& os) {
    const ReportSummary s = summarize(records);
    os << "{\n  \"version\": " << detail::json_string(kReportVersion) << ",\n  \"records\": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        os << (i == 0 ? "\n" : ",\n") << "    {"
           << "\"name\": " << detail::json_string(r.name) << ", "
           << "\"paper_anchor\": " << detail::json_string(r.paper_anchor) << ", "
           << "\"lhs\": " << detail::json_real(r.lhs) << ", "
           << "\"rhs\": " << detail::json_real(r.rhs) << ", "
           << "\"abs_error\": " << detail::json_real(r.abs_error) << ", "
           << "\"combined_bound\": " << detail::json_real(r.combined_bound) << ", "
           << "\"tolerance\": " << detail::json_real(r.tolerance) << ", "
           << "\"pass\": " << (r.pass ? "true" : "false") << ", "
           << "\"runtime_ms\": " << r.runtime_ms << "}";
    }
    os << (records.empty() ? "],\n" : "\n  ],\n");
    os << "  \"summary\": {\"total\": " << s.total << ", \"passed\": " << s.passed << ", \"failed\": " << s.failed << "}\n}\n";
}

inline void write_markdown(const std::vector<VerificationRecord>& records, std::ostream& os) {
    os << "| Name | Anchor | \\|lhs-rhs\\| | Bound+Tol | Pass |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& r : records) {
        os << "| " << detail::markdown_cell(r.name) << " | " << detail::markdown_cell(r.paper_anchor) << " | "
           << detail::short_real(r.abs_error) << " | " << detail::short_real(r.combined_bound + r.tolerance) << " | "
           << (r.pass ? "yes" : "**no**") << " |\n";
    }
}

inline std::string render_report(const std::vector<VerificationRecord>& records, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::json) {
        write_json(records, os);
    } else {
        write_markdown(records, os);
    }
    return os.str();
}

/// Writes the report to path; throws ReportError on any IO failure.
inline void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ReportError("cannot open report file: " + path);
    out << render_report(records, format);
    out.flush();
    if (!out) throw ReportError("failed writing report file: " + path);
}

}  // namespace thetaval
