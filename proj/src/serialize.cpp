#include "podq/serialize.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace podq {

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int v : p.parts()) j.push_back(std::to_string(v));
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("partition JSON must be an array");
    std::vector<int> values;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            values.push_back(v.get<int>());
            continue;
        }
        if (!v.is_string()) throw ParseError("partition parts must be integers or decimal strings");
        const auto& text = v.get_ref<const std::string&>();
        int part = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), part);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            throw ParseError("bad part '" + text + "'");
        }
        values.push_back(part);
    }
    try {
        return Partition(std::move(values));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
        throw ParseError("series JSON needs 'order' and 'coeffs'");
    }
    if (!j["order"].is_number_unsigned()) throw ParseError("series 'order' must be a nonnegative integer");
    const auto order = j["order"].get<std::size_t>();
    std::vector<Integer> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw ParseError("series coefficients must be decimal strings");
        Integer v;
        if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
        coeffs.push_back(std::move(v));
    }
    if (coeffs.size() != order + 1) throw ParseError("series JSON has the wrong number of coefficients");
    return Series(order, std::move(coeffs));
}

Json to_json(const MappingRecord& r) {
    Json j;
    j["theorem"] = std::string(theorem_name(r.case_label.theorem));
    j["input"] = to_json(r.input);
    j["case"] = r.case_label.to_string();
    j["mu"] = r.mu ? to_json(*r.mu) : Json(nullptr);
    j["alpha"] = to_json(r.alpha);
    j["beta"] = to_json(r.beta);
    j["phi_beta"] = to_json(r.phi_beta);
    j["output"] = to_json(r.output);
    j["target"] = r.target_string();
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["subject"] = r.subject;
    j["method"] = r.method;
    j["range"] = (r.range_lo && r.range_hi) ? Json{{"from", std::to_string(*r.range_lo)}, {"to", std::to_string(*r.range_hi)}}
                                            : Json(nullptr);
    j["passed"] = r.passed();
    j["failures"] = std::to_string(r.failure_count);
    j["wall_seconds"] = r.wall_seconds;
    Json rows = Json::array();
    for (const auto& e : r.entries) {
        Json row;
        row["label"] = e.label;
        row["n"] = e.n ? Json(std::to_string(*e.n)) : Json(nullptr);
        row["passed"] = e.passed;
        row["informational"] = e.informational;
        Json values = Json::object();
        for (const auto& [k, v] : e.values) values[k] = v;
        row["values"] = std::move(values);
        row["detail"] = e.detail;
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    Json wit = Json::array();
    for (const auto& w : r.witnesses) {
        Json x{{"label", w.label}, {"detail", w.detail}};
        x["record"] = w.record ? to_json(*w.record) : Json(nullptr);
        wit.push_back(std::move(x));
    }
    j["witnesses"] = std::move(wit);
    return j;
}

}  // namespace podq
