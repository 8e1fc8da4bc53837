#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "podq/bijection.hpp"

namespace podq {

/// One row of a report: a value of n or a named sub-check.
struct ReportEntry {
    std::string label;
    std::optional<long long> n;
    bool passed = true;
    /// Recorded but never counted as a failure (e.g. n below an identity's
    /// validity range).
    bool informational = false;
    /// Ordered name/value pairs, values as decimal strings.
    std::vector<std::pair<std::string, std::string>> values;
    std::string detail;
};

struct Witness {
    std::string label;
    std::string detail;
    std::optional<MappingRecord> record;
};

struct VerificationReport {
    std::string subject;
    std::string method;
    std::optional<long long> range_lo;
    std::optional<long long> range_hi;
    std::vector<ReportEntry> entries;
    std::vector<Witness> witnesses;
    std::size_t failure_count = 0;
    std::size_t witness_cap = 10;
    double wall_seconds = 0.0;

    bool passed() const noexcept { return failure_count == 0; }

    /// Appends the entry; a failing non-informational entry bumps the failure
    /// count and, while under the cap, leaves a witness.
    void add(ReportEntry entry, std::optional<MappingRecord> record = std::nullopt);

    /// Adds a failure witness that does not correspond to an entry row.
    void add_failure(std::string label, std::string detail, std::optional<MappingRecord> record = std::nullopt);

    /// Merges another report's rows and failures (used for range audits).
    void absorb(const VerificationReport& other, const std::string& prefix);

    /// Plain-text table followed by a one-line verdict.
    std::string to_text() const;
};

}  // namespace podq
