#include "podq/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace podq {

void VerificationReport::add(ReportEntry entry, std::optional<MappingRecord> record) {
    if (!entry.passed && !entry.informational) {
        ++failure_count;
        if (witnesses.size() < witness_cap) {
            witnesses.push_back({entry.label, entry.detail, std::move(record)});
        }
    }
    entries.push_back(std::move(entry));
}

void VerificationReport::add_failure(std::string label, std::string detail, std::optional<MappingRecord> record) {
    ++failure_count;
    if (witnesses.size() < witness_cap) {
        witnesses.push_back({std::move(label), std::move(detail), std::move(record)});
    }
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
    for (ReportEntry e : other.entries) {
        e.label = prefix + e.label;
        entries.push_back(std::move(e));
    }
    failure_count += other.failure_count;
    for (Witness w : other.witnesses) {
        if (witnesses.size() >= witness_cap) break;
        w.label = prefix + w.label;
        witnesses.push_back(std::move(w));
    }
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "subject: " << subject << "\n";
    if (!method.empty()) out << "method:  " << method << "\n";
    if (range_lo && range_hi) out << "range:   " << *range_lo << ".." << *range_hi << "\n";

    std::size_t width = 5;
    for (const auto& e : entries) width = std::max(width, e.label.size());
    for (const auto& e : entries) {
        const char* status = e.informational ? (e.passed ? "holds" : "fails") : (e.passed ? "ok" : "FAIL");
        out << "  " << std::left << std::setw(static_cast<int>(width)) << e.label << "  " << std::setw(5) << status;
        for (const auto& [k, v] : e.values) out << "  " << k << "=" << v;
        if (!e.detail.empty()) out << "  " << e.detail;
        if (e.informational) out << "  (informational)";
        out << "\n";
    }
    if (!witnesses.empty()) {
        out << "failures:\n";
        for (const auto& w : witnesses) {
            out << "  " << w.label << ": " << w.detail << "\n";
        }
    }
    out << (passed() ? "PASS" : "FAIL") << " (" << entries.size() << " rows, " << failure_count << " failures, "
        << std::fixed << std::setprecision(3) << wall_seconds << " s)\n";
    return out.str();
}

}  // namespace podq
