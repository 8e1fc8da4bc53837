#include "podq/bijection.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace podq {

std::string_view theorem_name(Theorem t) noexcept { return t == Theorem::T31 ? "3.1" : "3.2"; }

Theorem parse_theorem(std::string_view text) {
    if (text == "3.1" || text == "T31" || text == "t31" || text == "31") return Theorem::T31;
    if (text == "3.2" || text == "T32" || text == "t32" || text == "32") return Theorem::T32;
    throw ParseError("unknown theorem '" + std::string(text) + "' (expected 3.1 or 3.2)");
}

long long theorem_min_n(Theorem t) noexcept { return t == Theorem::T31 ? 2 : 3; }

int case_count(Theorem t) noexcept { return t == Theorem::T31 ? 7 : 11; }

std::string CaseLabel::to_string() const {
    return (converse ? "CONVERSE " : "CASE ") + std::to_string(number);
}

std::string Target::symbolic() const {
    std::string out(family_label(family));
    out += "(n";
    if (offset > 0) out += "+" + std::to_string(offset);
    if (offset < 0) out += std::to_string(offset);
    return out + ")";
}

std::string Target::to_string(long long n) const {
    return std::string(family_label(family)) + "(" + std::to_string(n + offset) + ")";
}

std::pair<Target, Target> theorem_targets(Theorem t) noexcept {
    if (t == Theorem::T31) return {kO1n, kO1nMinus1};
    return {kO3nPlus2, kO3nMinus1};
}

Target parse_source(Theorem t, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (auto open = s.find('('); open != std::string::npos && s.back() == ')') {
        s = s.substr(open + 1, s.size() - open - 2);
    }
    const auto [first, second] = theorem_targets(t);
    for (Target cand : {first, second}) {
        std::string sym = cand.symbolic();
        sym = sym.substr(sym.find('(') + 1);
        sym.pop_back();
        if (s == sym) return cand;
    }
    throw ParseError("source '" + std::string(text) + "' is not valid for theorem " +
                     std::string(theorem_name(t)) + " (expected " + first.symbolic() + " or " +
                     second.symbolic() + ")");
}

std::string MappingRecord::target_string() const {
    return std::string(family_label(target_family)) + "(" + std::to_string(target_n) + ")";
}

ContractViolation::ContractViolation(const std::string& what, MappingRecord record)
    : std::logic_error(what), record_(std::move(record)) {}

Partition phi(const Partition& p) {
    std::vector<int> out;
    for (auto [part, mult] : p.multiplicities()) {
        if (part % 2 == 0) {
            out.insert(out.end(), static_cast<std::size_t>(mult), part);
        } else if (mult % 2 != 0) {
            throw DomainError("phi: odd part " + std::to_string(part) + " has odd multiplicity " +
                              std::to_string(mult));
        } else {
            out.insert(out.end(), static_cast<std::size_t>(mult / 2), 2 * part);
        }
    }
    return Partition(std::move(out));
}

Partition phi_inverse(const Partition& p) {
    std::vector<int> out;
    out.reserve(p.length() * 2);
    for (int part : p.parts()) {
        if (part % 4 == 2) {
            out.push_back(part / 2);
            out.push_back(part / 2);
        } else {
            out.push_back(part);
        }
    }
    return Partition(std::move(out));
}

std::pair<Partition, Partition> split_alpha_beta(const Partition& p) {
    std::vector<int> alpha;
    std::vector<int> beta;
    for (auto [part, mult] : p.multiplicities()) {
        if (part % 2 == 0) {
            alpha.insert(alpha.end(), static_cast<std::size_t>(mult), part);
        } else {
            alpha.insert(alpha.end(), static_cast<std::size_t>(mult % 2), part);
            beta.insert(beta.end(), static_cast<std::size_t>(mult - mult % 2), part);
        }
    }
    return {Partition::from_sorted(std::move(alpha)), Partition::from_sorted(std::move(beta))};
}

std::optional<int> largest_repeated_odd(const Partition& p) {
    auto parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1] && parts[i] % 2 != 0) return parts[i];
    }
    return std::nullopt;
}

namespace {

// Quantities every case predicate is phrased in.
struct Shape {
    int top;              // λ₁
    int second;           // λ₂, 0 when absent
    int top_mult;         // m(λ₁)
    int below_top_mult;   // m(λ₁ - 1)
    std::optional<int> rep;  // largest repeated odd part
};

Shape shape_of(const Partition& p) {
    Shape s{};
    s.top = p.largest();
    s.second = p.part_or_zero(1);
    s.top_mult = p.multiplicity(s.top);
    s.below_top_mult = s.top > 1 ? p.multiplicity(s.top - 1) : 0;
    s.rep = largest_repeated_odd(p);
    return s;
}

// Comparisons against (λ₁ ± k)/2 are done as 2a vs λ₁ ± k.
bool t31_case(int c, const Shape& s) {
    const int L = s.top;
    const bool odd = L % 2 != 0;
    const bool single_top_with_repeats = s.top_mult == 1 && s.rep.has_value();
    switch (c) {
        case 1: return !odd;
        case 2: return odd && !s.rep;
        case 3: return odd && s.top_mult > 1;
        case 4: return L % 4 == 1 && single_top_with_repeats && 2 * *s.rep < L + 1;
        case 5: return L % 4 == 1 && single_top_with_repeats && 2 * *s.rep >= L + 1;
        case 6: return L % 4 == 3 && single_top_with_repeats && 2 * *s.rep > L - 1;
        case 7: return L % 4 == 3 && single_top_with_repeats && 2 * *s.rep <= L - 1;
        default: return false;
    }
}

bool t32_case(int c, const Shape& s) {
    const int L = s.top;
    const bool odd = L % 2 != 0;
    const bool single_top_with_repeats = s.top_mult == 1 && s.rep.has_value();
    switch (c) {
        case 1: return !odd && !s.rep;
        case 2: return !odd && s.rep && 2 * *s.rep >= L + 2;
        case 3: return !odd && s.rep && 2 * *s.rep < L + 2;
        case 4: return odd && !s.rep && s.second < L - 1;
        case 5: return odd && !s.rep && s.second == L - 1;
        case 6: return odd && s.top_mult >= 2;
        case 7: return L % 4 == 1 && single_top_with_repeats && 2 * *s.rep >= L + 1;
        case 8: return L % 4 == 1 && single_top_with_repeats && 2 * *s.rep < L + 1 && s.below_top_mult == 0;
        case 9: return L % 4 == 1 && single_top_with_repeats && 2 * *s.rep < L + 1 && s.below_top_mult >= 1;
        case 10: return L % 4 == 3 && single_top_with_repeats && 2 * *s.rep >= L - 1;
        case 11: return L % 4 == 3 && single_top_with_repeats && 2 * *s.rep < L - 1;
        default: return false;
    }
}

void require_forward_domain(const Partition& p) {
    if (p.empty()) throw DomainError("the empty partition falls under no case");
    if (!is_in_family(p, Family::C)) {
        throw DomainError("(" + p.to_string() + ") is not in C: it has a part congruent to 2 mod 4");
    }
}

// Removes `count` copies of `old_part` and inserts `new_part` (dropped if 0).
Partition replace_parts(const Partition& p, int old_part, int count, int new_part) {
    std::vector<int> v(p.parts().begin(), p.parts().end());
    for (int k = 0; k < count; ++k) {
        auto it = std::find(v.begin(), v.end(), old_part);
        if (it == v.end()) throw std::logic_error("replace_parts: part " + std::to_string(old_part) + " missing");
        v.erase(it);
    }
    if (new_part > 0) v.push_back(new_part);
    return Partition(std::move(v));
}

void finish_forward(MappingRecord& rec, const Partition& base) {
    auto [alpha, beta] = split_alpha_beta(base);
    rec.alpha = std::move(alpha);
    rec.beta = std::move(beta);
    rec.phi_beta = phi(rec.beta);
    rec.output = multiset_union(rec.alpha, rec.phi_beta);
    if (rec.output.size() != rec.target_n || !is_in_family(rec.output, rec.target_family)) {
        throw ContractViolation("theorem " + std::string(theorem_name(rec.case_label.theorem)) + " " +
                                    rec.case_label.to_string() + ": output (" + rec.output.to_string() +
                                    ") is not in " + rec.target_string(),
                                rec);
    }
}

}  // namespace

bool case_applies(Theorem t, int case_number, const Partition& p) {
    if (p.empty()) return false;
    const Shape s = shape_of(p);
    return t == Theorem::T31 ? t31_case(case_number, s) : t32_case(case_number, s);
}

CaseLabel classify_case(const Partition& p, Theorem t) {
    require_forward_domain(p);
    const Shape s = shape_of(p);
    int found = 0;
    int matches = 0;
    for (int c = 1; c <= case_count(t); ++c) {
        const bool hit = t == Theorem::T31 ? t31_case(c, s) : t32_case(c, s);
        if (hit) {
            if (found == 0) found = c;
            ++matches;
        }
    }
    if (matches != 1) {
        throw std::logic_error("theorem " + std::string(theorem_name(t)) + ": " + std::to_string(matches) +
                               " cases apply to (" + p.to_string() + ")");
    }
    return CaseLabel{t, found, false};
}

MappingRecord thm31_forward(const Partition& p) {
    const CaseLabel label = classify_case(p, Theorem::T31);
    const long long n = p.size();
    const int L = p.largest();

    MappingRecord rec;
    rec.input = p;
    rec.case_label = label;
    rec.target_family = Family::O1;
    rec.target_n = n;
    switch (label.number) {
        case 1:
        case 5:
        case 6:
            break;
        case 2:
        case 4:
        case 7:
            rec.mu = replace_parts(p, L, 1, L - 1);
            rec.target_n = n - 1;
            break;
        case 3:
            rec.mu = replace_parts(p, L, 2, 2 * L);
            break;
    }
    finish_forward(rec, rec.mu ? *rec.mu : p);
    return rec;
}

MappingRecord thm32_forward(const Partition& p) {
    const CaseLabel label = classify_case(p, Theorem::T32);
    const long long n = p.size();
    const int L = p.largest();

    MappingRecord rec;
    rec.input = p;
    rec.case_label = label;
    rec.target_family = Family::O3;
    rec.target_n = n + 2;
    switch (label.number) {
        case 1:
        case 3:
            rec.mu = replace_parts(p, L, 1, L + 2);
            break;
        case 2:
        case 7:
        case 10: {
            const int a = *largest_repeated_odd(p);
            rec.mu = replace_parts(p, a, 2, 2 * a + 2);
            break;
        }
        case 4:
        case 8:
        case 11:
            rec.mu = replace_parts(p, L, 1, L - 1);
            rec.target_n = n - 1;
            break;
        case 5: {
            // (λ₁+1, λ₂+1, λ₃, ...)
            const int second = p.part_or_zero(1);
            rec.mu = replace_parts(replace_parts(p, L, 1, L + 1), second, 1, second + 1);
            break;
        }
        case 6:
            rec.mu = replace_parts(p, L, 2, 2 * L + 2);
            break;
        case 9:
            // λ₁ → λ₁+1 and one copy of λ₁-1 → λ₁
            rec.mu = replace_parts(replace_parts(p, L, 1, L + 1), L - 1, 1, L);
            break;
    }
    finish_forward(rec, *rec.mu);
    return rec;
}

MappingRecord forward_map(Theorem t, const Partition& p) {
    return t == Theorem::T31 ? thm31_forward(p) : thm32_forward(p);
}

MappingRecord converse_map(Theorem t, const Partition& p, Target source) {
    const auto [first, second] = theorem_targets(t);
    if (!(source == first) && !(source == second)) {
        throw DomainError(source.symbolic() + " is not a source family of theorem " + std::string(theorem_name(t)));
    }
    if (!is_in_family(p, source.family)) {
        throw DomainError("(" + p.to_string() + ") is not in " + std::string(family_label(source.family)));
    }
    const long long n = p.size() - source.offset;
    if (n < 0) throw DomainError("source " + source.symbolic() + " with |λ| = " + std::to_string(p.size()) +
                                 " gives negative n");

    MappingRecord rec;
    rec.input = p;
    // CONVERSE 1 is O1(n) for 3.1 and O3(n-1) for 3.2; CONVERSE 2 the other family.
    const bool is_first = t == Theorem::T31 ? source == kO1n : source == kO3nMinus1;
    rec.case_label = CaseLabel{t, is_first ? 1 : 2, true};
    rec.target_family = Family::C;
    rec.target_n = n;

    // the largest part moves by -offset: +1 for the n-1 sources, -2 for n+2
    const int delta = -source.offset;
    Partition adjusted = p;
    if (delta != 0) {
        const int top = p.largest();
        adjusted = p.empty() ? Partition{delta} : replace_parts(p, top, 1, top + delta);
    }
    std::vector<int> keep;
    std::vector<int> split;
    for (int part : adjusted.parts()) (part % 4 == 2 ? split : keep).push_back(part);
    rec.mu = adjusted;
    rec.alpha = Partition::from_sorted(std::move(keep));
    rec.phi_beta = Partition::from_sorted(std::move(split));
    rec.beta = phi_inverse(rec.phi_beta);
    rec.output = multiset_union(rec.alpha, rec.beta);
    if (rec.output.size() != n || !is_in_family(rec.output, Family::C)) {
        throw ContractViolation("theorem " + std::string(theorem_name(t)) + " converse: output (" +
                                    rec.output.to_string() + ") is not in " + rec.target_string(),
                                rec);
    }
    return rec;
}

Partition thm31_backward(const Partition& p, Target source) {
    return converse_map(Theorem::T31, p, source).output;
}

Partition thm32_backward(const Partition& p, Target source) {
    return converse_map(Theorem::T32, p, source).output;
}

}  // namespace podq
