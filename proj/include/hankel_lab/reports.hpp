#ifndef HANKEL_LAB_REPORTS_HPP
#define HANKEL_LAB_REPORTS_HPP

// Verification report records and the three output encodings. Reports are
// sorted by (target, params) before printing so output is deterministic
// regardless of execution order.

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/check.hpp"

namespace hankel_lab {

struct VerificationReport {
    std::string target;
    std::string params;
    std::string status;  // pass | fail | skipped
    std::string lhs;
    std::string rhs;
    double elapsed_ms = 0.0;
};

enum class ReportFormat { Pretty, Json, Csv };

inline ReportFormat report_format(const std::string& s) {
    if (s == "pretty") return ReportFormat::Pretty;
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

inline VerificationReport make_report(std::string target, std::string params,
                                      const CheckResult& check, double elapsed_ms) {
    VerificationReport r;
    r.target = std::move(target);
    r.params = std::move(params);
    r.status = check.pass ? "pass" : "fail";
    r.lhs = check.lhs;
    r.rhs = check.rhs;
    if (!check.pass && !check.note.empty()) r.params += " [" + check.note + "]";
    r.elapsed_ms = elapsed_ms;
    return r;
}

inline VerificationReport skipped_report(std::string target, std::string params,
                                         std::string reason) {
    VerificationReport r;
    r.target = std::move(target);
    r.params = std::move(params);
    r.status = "skipped";
    r.lhs = std::move(reason);
    r.rhs = "";
    return r;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline std::string format_ms(double ms) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << ms;
    return os.str();
}

}  // namespace detail

inline void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.target != b.target) return a.target < b.target;
                         return a.params < b.params;
                     });
}

inline void print_reports(std::ostream& os, std::vector<VerificationReport> reports,
                          ReportFormat format) {
    sort_reports(reports);
    switch (format) {
        case ReportFormat::Pretty:
            for (const auto& r : reports) {
                os << (r.status == "pass" ? "[pass]" : r.status == "fail" ? "[FAIL]" : "[skip]")
                   << " " << r.target;
                if (!r.params.empty()) os << " (" << r.params << ")";
                if (r.status == "fail") os << ": lhs=" << r.lhs << " rhs=" << r.rhs;
                else if (r.status == "skipped") os << ": " << r.lhs;
                os << " [" << detail::format_ms(r.elapsed_ms) << " ms]\n";
            }
            break;
        case ReportFormat::Json:
            for (const auto& r : reports)
                os << "{\"target\":\"" << detail::json_escape(r.target) << "\",\"params\":\""
                   << detail::json_escape(r.params) << "\",\"status\":\"" << r.status
                   << "\",\"lhs\":\"" << detail::json_escape(r.lhs) << "\",\"rhs\":\""
                   << detail::json_escape(r.rhs) << "\",\"elapsed_ms\":"
                   << detail::format_ms(r.elapsed_ms) << "}\n";
            break;
        case ReportFormat::Csv:
            os << "target,params,status,lhs,rhs,elapsed_ms\n";
            for (const auto& r : reports)
                os << detail::csv_escape(r.target) << "," << detail::csv_escape(r.params) << ","
                   << r.status << "," << detail::csv_escape(r.lhs) << ","
                   << detail::csv_escape(r.rhs) << "," << detail::format_ms(r.elapsed_ms)
                   << "\n";
            break;
    }
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status == "fail") return false;
    return true;
}

}  // namespace hankel_lab

#endif
