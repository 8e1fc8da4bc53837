#include "podq/partition.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace podq {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

void check_positive(std::span<const int> values) {
    for (int v : values) {
        if (v <= 0) {
            throw DomainError("partition parts must be positive, got " + std::to_string(v));
        }
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("invalid integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    }
    return v;
}

}  // namespace

Partition::Partition(std::initializer_list<int> values) : Partition(std::vector<int>(values)) {}

Partition::Partition(std::vector<int> values) : parts_(std::move(values)) {
    check_positive(parts_);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_sorted(std::vector<int> parts) {
    assert(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
    assert(parts.empty() || parts.back() > 0);
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

long long Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::multiplicity(int part) const {
    if (part < 1) throw DomainError("multiplicity queried for non-positive part " + std::to_string(part));
    // parts_ is sorted descending
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part, std::greater<>());
    return static_cast<int>(hi - lo);
}

std::map<int, int, std::greater<>> Partition::multiplicities() const {
    std::map<int, int, std::greater<>> m;
    for (int v : parts_) ++m[v];
    return m;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
        const char close = s.front() == '(' ? ')' : ']';
        if (s.back() != close) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<int> values;
    if (s.empty()) return Partition{};
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) comma = s.size();
        std::string_view token = trim(s.substr(start, comma - start));
        if (token.empty()) throw ParseError("empty part in '" + std::string(text) + "'");
        long long value = 0;
        long long count = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            value = parse_int(token.substr(0, caret), text);
            count = parse_int(token.substr(caret + 1), text);
            if (count < 0) throw ParseError("negative exponent in '" + std::string(token) + "'");
        } else {
            value = parse_int(token, text);
        }
        if (value <= 0) throw ParseError("parts must be positive: '" + std::string(token) + "'");
        if (value > 1'000'000'000LL) throw ParseError("part too large: '" + std::string(token) + "'");
        values.insert(values.end(), static_cast<std::size_t>(count), static_cast<int>(value));
        start = comma + 1;
    }
    return Partition(std::move(values));
}

Partition canonicalize(std::span<const int> values) {
    return Partition(std::vector<int>(values.begin(), values.end()));
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<>());
    return Partition::from_sorted(std::move(merged));
}

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::Pod: return "pod";
        case Family::PodGt2: return "podgt2";
        case Family::O1: return "o1";
        case Family::O2: return "o2";
        case Family::O3: return "o3";
        case Family::C: return "c";
    }
    return "?";
}

std::string_view family_label(Family f) noexcept {
    switch (f) {
        case Family::Pod: return "Pod";
        case Family::PodGt2: return "Pod>2";
        case Family::O1: return "O1";
        case Family::O2: return "O2";
        case Family::O3: return "O3";
        case Family::C: return "C";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    std::string lower;
    for (char ch : trim(name)) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "pod>2" || lower == "pod_gt2" || lower == "pod-gt2") return Family::PodGt2;
    for (Family f : kAllFamilies) {
        if (lower == family_name(f)) return f;
    }
    throw ParseError("unknown family '" + std::string(name) + "' (expected pod, podgt2, o1, o2, o3, c)");
}

bool has_distinct_odd_parts(const Partition& p) noexcept {
    auto parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1] && parts[i] % 2 != 0) return false;
    }
    return true;
}

bool is_in_family(const Partition& p, Family f) noexcept {
    auto parts = p.parts();
    const int top = p.largest();
    const bool top_once = parts.size() < 2 || parts[1] != top;
    switch (f) {
        case Family::Pod:
            return has_distinct_odd_parts(p);
        case Family::PodGt2:
            return has_distinct_odd_parts(p) && (parts.empty() || parts.back() > 2);
        case Family::O1:
            return has_distinct_odd_parts(p) && top % 2 == 0;
        case Family::O2:
            return !p.empty() && has_distinct_odd_parts(p) && top % 2 == 0 && !top_once;
        case Family::O3:
            return has_distinct_odd_parts(p) && top % 2 == 0 && top_once;
        case Family::C:
            return std::none_of(parts.begin(), parts.end(), [](int v) { return v % 4 == 2; });
    }
    return false;
}

}  // namespace podq
