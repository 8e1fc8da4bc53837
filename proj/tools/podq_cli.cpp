// podq: count, enumerate, map and verify partitions with distinct odd parts
// and the related restricted families.

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "podq/bfile.hpp"
#include "podq/bijection.hpp"
#include "podq/enumerate.hpp"
#include "podq/named_series.hpp"
#include "podq/serialize.hpp"
#include "podq/verify.hpp"

namespace {

using namespace podq;

enum class Format { Plain, Json, Csv };

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "plain";
    long long max_enum_n = EnumerationLimits::kDefaultMaxN;
    std::size_t order = 1000;

    Format fmt() const {
        if (format == "plain") return Format::Plain;
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        throw UsageError("unknown format '" + format + "' (expected plain, json or csv)");
    }
    EnumerationLimits limits() const { return {max_enum_n}; }
};

long long parse_ll(const std::string& s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad integer '" + s + "'");
    return v;
}

// "3..7" or "5"
std::pair<long long, long long> parse_range(const std::string& s) {
    if (auto dots = s.find(".."); dots != std::string::npos) {
        const long long lo = parse_ll(s.substr(0, dots));
        const long long hi = parse_ll(s.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range '" + s + "'");
        return {lo, hi};
    }
    const long long v = parse_ll(s);
    return {v, v};
}

// "-q^3", "q", "-1", "0"
Monomial parse_monomial(std::string s) {
    Monomial m;
    if (s == "0") return {0, 0};
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        m.sign = s[0] == '-' ? -1 : 1;
        s.erase(0, 1);
    }
    if (s == "1") {
        m.exponent = 0;
    } else if (s == "q") {
        m.exponent = 1;
    } else if (s.rfind("q^", 0) == 0) {
        const long long e = parse_ll(s.substr(2));
        if (e < 0) throw UsageError("negative exponent in monomial");
        m.exponent = static_cast<std::size_t>(e);
    } else {
        throw UsageError("bad monomial '" + s + "' (expected forms like -q^3, q, 1, 0)");
    }
    return m;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

// ---- count ---------------------------------------------------------------

int run_count(const Globals& g, const std::string& family_text, const std::string& range_text,
              const std::string& method_text) {
    const Family family = parse_family(family_text);
    const auto [lo, hi] = parse_range(range_text);
    if (lo < 0) throw UsageError("n must be nonnegative");
    const Method method = parse_method(method_text);
    const bool use_enum = method != Method::Series;
    const bool use_series = method != Method::Enumeration;
    if (use_enum) check_enumeration_bound(hi, g.limits());

    std::optional<Series> series;
    if (use_series) series = named_gf(series_for_family(family), static_cast<std::size_t>(hi));

    struct Row {
        long long n;
        std::optional<Integer> by_enum, by_series;
    };
    std::vector<Row> rows;
    bool all_match = true;
    for (long long n = lo; n <= hi; ++n) {
        Row r{n, {}, {}};
        if (use_enum) r.by_enum = count_family(n, family, g.limits());
        if (use_series) r.by_series = series->coefficient(static_cast<std::size_t>(n));
        if (r.by_enum && r.by_series && *r.by_enum != *r.by_series) all_match = false;
        rows.push_back(std::move(r));
    }

    const bool both = method == Method::Both;
    switch (g.fmt()) {
        case Format::Plain:
            for (const auto& r : rows) {
                std::cout << r.n;
                if (r.by_enum) std::cout << ' ' << r.by_enum->get_str();
                if (r.by_series) std::cout << ' ' << r.by_series->get_str();
                if (both) std::cout << (*r.by_enum == *r.by_series ? " match" : " MISMATCH");
                std::cout << '\n';
            }
            break;
        case Format::Csv:
            std::cout << (both ? "n,enumeration,series,match\n" : "n,count\n");
            for (const auto& r : rows) {
                std::cout << r.n;
                if (r.by_enum) std::cout << ',' << r.by_enum->get_str();
                if (r.by_series) std::cout << ',' << r.by_series->get_str();
                if (both) std::cout << ',' << (*r.by_enum == *r.by_series ? "true" : "false");
                std::cout << '\n';
            }
            break;
        case Format::Json: {
            Json out;
            out["family"] = std::string(family_name(family));
            out["method"] = std::string(method_name(method));
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json row{{"n", std::to_string(r.n)}};
                if (both) {
                    row["enumeration"] = r.by_enum->get_str();
                    row["series"] = r.by_series->get_str();
                    row["match"] = *r.by_enum == *r.by_series;
                } else {
                    row["count"] = (r.by_enum ? *r.by_enum : *r.by_series).get_str();
                }
                arr.push_back(std::move(row));
            }
            out["rows"] = std::move(arr);
            std::cout << out.dump() << '\n';
            break;
        }
    }
    return all_match ? 0 : kExitFailure;
}

// ---- enumerate -----------------------------------------------------------

int run_enumerate(const Globals& g, const std::string& family_text, long long n) {
    const bool all = family_text == "all";
    std::vector<Partition> parts =
        all ? enumerate_partitions(n, g.limits()) : enumerate_family(n, parse_family(family_text), g.limits());
    switch (g.fmt()) {
        case Format::Plain:
            for (const auto& p : parts) std::cout << paren(p) << '\n';
            break;
        case Format::Csv:
            std::cout << "n,partition\n";
            for (const auto& p : parts) std::cout << n << ',' << csv_quote(p.to_string()) << '\n';
            break;
        case Format::Json: {
            Json out;
            out["n"] = std::to_string(n);
            out["family"] = all ? "all" : std::string(family_name(parse_family(family_text)));
            out["count"] = std::to_string(parts.size());
            Json arr = Json::array();
            for (const auto& p : parts) arr.push_back(to_json(p));
            out["partitions"] = std::move(arr);
            std::cout << out.dump() << '\n';
            break;
        }
    }
    return 0;
}

// ---- map -----------------------------------------------------------------

// phi, phi-inverse and union on a single partition, outside any theorem.
int run_operator(const Globals& g, const std::string& op, const Partition& p, const std::string& with_text) {
    std::optional<Partition> other;
    Partition out;
    if (op == "union") {
        if (with_text.empty()) throw UsageError("--operator union needs --with");
        other = Partition::parse(with_text);
        out = multiset_union(p, *other);
    } else if (!with_text.empty()) {
        throw UsageError("--with only applies to --operator union");
    } else if (op == "phi") {
        out = phi(p);
    } else if (op == "phi-inverse") {
        out = phi_inverse(p);
    } else {
        throw UsageError("unknown operator '" + op + "' (expected phi, phi-inverse or union)");
    }

    switch (g.fmt()) {
        case Format::Json: {
            Json j;
            j["operator"] = op;
            j["input"] = to_json(p);
            if (other) j["with"] = to_json(*other);
            j["output"] = to_json(out);
            std::cout << j.dump() << '\n';
            break;
        }
        case Format::Plain:
            std::cout << "operator: " << op << '\n' << "input:    " << paren(p) << '\n';
            if (other) std::cout << "with:     " << paren(*other) << '\n';
            std::cout << "output:   " << paren(out) << '\n';
            break;
        case Format::Csv:
            std::cout << "field,value\n" << "operator," << op << '\n' << "input," << csv_quote(p.to_string()) << '\n';
            if (other) std::cout << "with," << csv_quote(other->to_string()) << '\n';
            std::cout << "output," << csv_quote(out.to_string()) << '\n';
            break;
    }
    return 0;
}

int run_map(const Globals& g, const std::string& theorem_text, const std::string& partition_text,
            const std::string& direction, const std::string& source_text, const std::string& op,
            const std::string& with_text) {
    if (!op.empty()) {
        if (!theorem_text.empty()) throw UsageError("--operator and --theorem are mutually exclusive");
        return run_operator(g, op, Partition::parse(partition_text), with_text);
    }
    if (theorem_text.empty()) throw UsageError("map needs --theorem or --operator");
    if (!with_text.empty()) throw UsageError("--with only applies to --operator union");
    const Theorem t = parse_theorem(theorem_text);
    const Partition p = Partition::parse(partition_text);
    MappingRecord rec;
    if (direction == "forward") {
        if (!source_text.empty()) throw UsageError("--source only applies to --direction backward");
        rec = forward_map(t, p);
    } else if (direction == "backward") {
        if (source_text.empty()) {
            const auto [a, b] = theorem_targets(t);
            throw UsageError("backward mapping needs --source (" + a.symbolic() + " or " + b.symbolic() + ")");
        }
        rec = converse_map(t, p, parse_source(t, source_text));
    } else {
        throw UsageError("unknown direction '" + direction + "' (expected forward or backward)");
    }

    switch (g.fmt()) {
        case Format::Json:
            std::cout << to_json(rec).dump() << '\n';
            break;
        case Format::Plain:
            std::cout << "theorem:  " << theorem_name(t) << '\n'
                      << "input:    " << paren(rec.input) << '\n'
                      << "case:     " << rec.case_label.to_string() << '\n'
                      << "mu:       " << (rec.mu ? paren(*rec.mu) : "-") << '\n'
                      << "alpha:    " << paren(rec.alpha) << '\n'
                      << "beta:     " << paren(rec.beta) << '\n'
                      << "phi_beta: " << paren(rec.phi_beta) << '\n'
                      << "output:   " << paren(rec.output) << '\n'
                      << "target:   " << rec.target_string() << '\n';
            break;
        case Format::Csv:
            std::cout << "field,value\n"
                      << "theorem," << theorem_name(t) << '\n'
                      << "input," << csv_quote(rec.input.to_string()) << '\n'
                      << "case," << rec.case_label.to_string() << '\n'
                      << "mu," << (rec.mu ? csv_quote(rec.mu->to_string()) : "") << '\n'
                      << "alpha," << csv_quote(rec.alpha.to_string()) << '\n'
                      << "beta," << csv_quote(rec.beta.to_string()) << '\n'
                      << "phi_beta," << csv_quote(rec.phi_beta.to_string()) << '\n'
                      << "output," << csv_quote(rec.output.to_string()) << '\n'
                      << "target," << rec.target_string() << '\n';
            break;
    }
    return 0;
}

// ---- verify --------------------------------------------------------------

void print_report(const Globals& g, const VerificationReport& r) {
    switch (g.fmt()) {
        case Format::Plain:
            std::cout << r.to_text();
            break;
        case Format::Json:
            std::cout << to_json(r).dump() << '\n';
            break;
        case Format::Csv:
            std::cout << "label,n,passed,informational,values,detail\n";
            for (const auto& e : r.entries) {
                std::string values;
                for (const auto& [k, v] : e.values) values += (values.empty() ? "" : " ") + k + "=" + v;
                std::cout << csv_quote(e.label) << ',' << (e.n ? std::to_string(*e.n) : "") << ','
                          << (e.passed ? "true" : "false") << ',' << (e.informational ? "true" : "false") << ','
                          << csv_quote(values) << ',' << csv_quote(e.detail) << '\n';
            }
            break;
    }
}

struct VerifyArgs {
    std::string identity;
    std::string bijection;
    bool proof_chain = false;
    std::string cross_check;
    std::string oeis;
    bool qbinomial = false;
    std::string method = "both";
    long long max_n = 45;
    std::string n_range;
    std::string partition;
    std::string bfile;
    long long offset = 0;
    std::string a = "-q";
    std::string z = "q^2";
    std::size_t base = 1;
    std::size_t witnesses = 10;
};

int run_verify(const Globals& g, const VerifyArgs& v) {
    const int chosen = !v.identity.empty() + !v.bijection.empty() + v.proof_chain + !v.cross_check.empty() +
                       !v.oeis.empty() + v.qbinomial;
    if (chosen != 1) {
        throw UsageError(
            "choose exactly one of --identity, --bijection, --proof-chain, --cross-check, --oeis, --qbinomial");
    }
    VerifyOptions opts;
    opts.limits = g.limits();
    opts.witness_cap = v.witnesses;

    VerificationReport report;
    if (!v.identity.empty()) {
        report = verify_identity(parse_identity(v.identity), v.max_n, parse_method(v.method), opts);
    } else if (!v.bijection.empty()) {
        const Theorem t = parse_theorem(v.bijection);
        if (!v.partition.empty()) {
            report = verify_mapping(t, Partition::parse(v.partition), opts);
        } else {
            auto [lo, hi] = v.n_range.empty() ? std::pair{theorem_min_n(t), t == Theorem::T31 ? 35LL : 30LL}
                                              : parse_range(v.n_range);
            report = lo == hi ? verify_bijection(t, lo, opts) : verify_bijection_range(t, lo, hi, opts);
        }
    } else if (v.proof_chain) {
        report = verify_proof_chain(g.order, opts);
    } else if (!v.cross_check.empty()) {
        report = cross_check_counts(parse_family(v.cross_check), v.max_n, opts);
    } else if (!v.oeis.empty()) {
        if (v.bfile.empty()) throw UsageError("--oeis needs --bfile");
        report = oeis_cross_check(parse_family(v.oeis), load_bfile(v.bfile), v.offset, opts);
    } else {
        const Monomial a = parse_monomial(v.a);
        const Monomial z = parse_monomial(v.z);
        const QBinomialReport q = qbinomial_check(a, z, g.order, v.base);
        report.subject = "q-binomial theorem, a = " + v.a + ", z = " + v.z +
                         (v.base == 1 ? std::string() : ", base q^" + std::to_string(v.base));
        report.method = "series to order " + std::to_string(g.order);
        ReportEntry e;
        e.label = "sum = product";
        e.passed = q.equal;
        if (q.first_mismatch) e.detail = "first difference at q^" + std::to_string(*q.first_mismatch);
        report.add(std::move(e));
    }
    print_report(g, report);
    return report.passed() ? 0 : kExitFailure;
}

// ---- series --------------------------------------------------------------

int run_series(const Globals& g, const std::string& name) {
    const NamedSeries which = parse_series_name(name);
    const Series s = named_gf(which, g.order);
    switch (g.fmt()) {
        case Format::Plain:
            for (std::size_t n = 0; n <= s.order(); ++n) std::cout << n << ' ' << s.coefficient(n).get_str() << '\n';
            break;
        case Format::Csv:
            std::cout << "n,coefficient\n";
            for (std::size_t n = 0; n <= s.order(); ++n) std::cout << n << ',' << s.coefficient(n).get_str() << '\n';
            break;
        case Format::Json: {
            Json out{{"name", std::string(series_name(which))}};
            for (auto& [k, val] : to_json(s).items()) out[k] = val;
            std::cout << out.dump() << '\n';
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partitions with distinct odd parts: counting, enumeration, q-series and bijections"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format: plain, json or csv")
        ->envname("PODQ_FORMAT")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--max-enum-n", g.max_enum_n, "Largest n the enumerators will accept")
        ->envname("PODQ_MAX_ENUM_N")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--order", g.order, "Truncation order for series")->envname("PODQ_ORDER");

    std::string family, range = "0..10", method = "enum";
    auto* count = app.add_subcommand("count", "Count a family for a range of n");
    count->add_option("--family", family, "pod, podgt2, o1, o2, o3, c")->required();
    count->add_option("--n", range, "n or a range lo..hi");
    count->add_option("--method", method, "enum, series or both");

    std::string enum_family;
    long long enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "List the partitions of n in a family");
    enumerate->add_option("--family", enum_family, "pod, podgt2, o1, o2, o3, c or all")->required();
    enumerate->add_option("--n", enum_n, "n")->required()->check(CLI::NonNegativeNumber);

    std::string theorem, partition_text, direction = "forward", source, map_operator, map_with;
    auto* map = app.add_subcommand("map", "Apply a bijection to one partition and print the audit record");
    map->add_option("--theorem", theorem, "3.1 or 3.2");
    map->add_option("--operator", map_operator, "phi, phi-inverse or union instead of a theorem");
    map->add_option("--with", map_with, "second operand for --operator union");
    map->add_option("--partition", partition_text, "e.g. 11,8,5^3,4,3")->required();
    map->add_option("--direction", direction, "forward or backward");
    map->add_option("--source", source, "for backward: n, n-1 (3.1) or n+2, n-1 (3.2)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification and report; nonzero exit on failure");
    verify->add_option("--identity", va.identity, "1.1, 1.2, 1.3, 1.4, 1.6 or 1.7");
    verify->add_option("--bijection", va.bijection, "3.1 or 3.2");
    verify->add_flag("--proof-chain", va.proof_chain, "Series identities behind the q-series proofs");
    verify->add_option("--cross-check", va.cross_check, "Family whose counts are compared with its series");
    verify->add_option("--oeis", va.oeis, "Family to compare against a b-file");
    verify->add_flag("--qbinomial", va.qbinomial, "Check the q-binomial theorem for monomials --a and --z");
    verify->add_option("--method", va.method, "enum, series or both (identities)");
    verify->add_option("--max-n", va.max_n, "Largest n (identities, cross-check)");
    verify->add_option("--n", va.n_range, "n or lo..hi (bijections)");
    verify->add_option("--partition", va.partition, "Audit a single input (bijections)");
    verify->add_option("--bfile", va.bfile, "Path to a b-file");
    verify->add_option("--offset", va.offset, "Series degree = b-file index + offset");
    verify->add_option("--a", va.a, "Monomial a, e.g. -q");
    verify->add_option("--z", va.z, "Monomial z, e.g. q^2");
    verify->add_option("--base", va.base, "Base q^k of the q-binomial check")->check(CLI::PositiveNumber);
    verify->add_option("--witnesses", va.witnesses, "Maximum failure witnesses to keep");

    std::string series_name_text;
    auto* series = app.add_subcommand("series", "Print coefficients of a named series up to --order");
    series->add_option("--name", series_name_text, "Series name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*count) return run_count(g, family, range, method);
        if (*enumerate) return run_enumerate(g, enum_family, enum_n);
        if (*map) return run_map(g, theorem, partition_text, direction, source, map_operator, map_with);
        if (*verify) return run_verify(g, va);
        if (*series) return run_series(g, series_name_text);
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << '\n' << to_json(e.record()).dump() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
