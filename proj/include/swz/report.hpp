// JSON serialization of classification and reduction results.
// Rational values are rendered as exact strings ("p/q" or "p").
#pragma once

#include <json.hpp>

#include "swz/reducer.hpp"

namespace swz {

using json = nlohmann::json;

inline json feasibility_json(const FeasibilityReport& r) {
    json j;
    j["tag"] = qtag_name(r.tag);
    j["m"] = r.m;
    j["s"] = r.s;
    j["feasible"] = r.feasible;
    j["required_sum"] = r.required_sum.to_string();
    if (r.forced_n) j["forced_n"] = *r.forced_n;
    if (!r.beta_example.empty()) j["beta_example"] = r.beta_example;
    if (!r.k1_over_m.empty()) j["k1_over_m"] = r.k1_over_m;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json qclass_json(const QClass& qc, const std::vector<QTag>& alternates) {
    json j;
    j["tag"] = qtag_name(qc.tag);
    json params = json::object();
    for (const auto& [key, value] : qc.param_strings()) params[key] = value;
    j["params"] = params;
    json alts = json::array();
    for (QTag t : alternates) alts.push_back(qtag_name(t));
    j["alternates"] = alts;
    return j;
}

inline json verdict_json(const ReductionVerdict& v) {
    json j;
    j["outcome"] = outcome_name(v.primary());
    json admissible = json::array();
    for (Outcome o : v.outcomes) admissible.push_back(outcome_name(o));
    j["admissible"] = admissible;
    j["template"] = v.template_text;
    if (!v.branch_templates.empty()) j["branch_templates"] = v.branch_templates;
    j["mobius"] = v.mobius_used.to_string();
    return j;
}

inline json reduce_report_json(const std::string& input, const SchwarzEquation& eq,
                               const ReductionVerdict& v) {
    json j;
    j["input"] = input;
    j["m"] = eq.m();
    j["degP"] = eq.deg_p();
    j["degQ"] = eq.deg_q();
    j["coprime"] = true;  // the equation object is reduced on construction
    j["qclass"] = qclass_json(v.qclass, v.alternates);
    j["verdict"] = verdict_json(v);
    json certs = json::array();
    for (const auto& c : v.certificates) {
        json cj;
        cj["kind"] = c.kind;
        if (!c.text.empty()) cj["text"] = c.text;
        if (c.feasibility) cj["feasibility"] = feasibility_json(*c.feasibility);
        certs.push_back(cj);
    }
    j["certificates"] = certs;
    j["diagnostics"] = v.diagnostics;
    return j;
}

inline json classify_report_json(const std::string& input, const SchwarzEquation& eq) {
    auto all = classify_all(eq);
    QClass qc;
    std::vector<QTag> alternates;
    if (!all.empty()) {
        qc = all.front();
        for (std::size_t i = 1; i < all.size(); ++i) alternates.push_back(all[i].tag);
    }
    json j;
    j["input"] = input;
    j["m"] = eq.m();
    j["degP"] = eq.deg_p();
    j["degQ"] = eq.deg_q();
    j["coprime"] = true;
    j["qclass"] = qclass_json(qc, alternates);
    return j;
}

inline json zero_matching_json(const ZeroMatchingReport& r) {
    json j;
    j["kind"] = "zero_matching";
    j["k"] = r.k;
    json pairs = json::array();
    for (const auto& [cj, bj] : r.cj_bj) pairs.push_back({cj.to_string(), bj.to_string()});
    j["cj_bj"] = pairs;
    j["cj_match"] = r.cj_match;
    j["leading_lhs"] = r.e2_lhs.to_string();
    j["leading_rhs"] = r.e2_rhs.to_string();
    j["leading_match"] = r.e2_match;
    j["subleading_lhs"] = r.e3_lhs.to_string();
    j["subleading_rhs"] = r.e3_rhs.to_string();
    j["subleading_match"] = r.e3_match;
    j["pass"] = r.pass;
    return j;
}

template <class K>
json series_json(const LaurentSeries<K>& s) {
    json j;
    j["base_point"] = s.base_point().to_string();
    j["min_order"] = s.min_order();
    j["trunc_order"] = s.trunc_order();
    j["zero"] = s.is_zero();
    json coeffs = json::array();
    for (int k = s.min_order(); k < s.trunc_order(); ++k) {
        json c;
        c["order"] = k;
        c["value"] = to_string(s.coeff_or_zero(k));
        coeffs.push_back(c);
    }
    j["coefficients"] = coeffs;
    return j;
}

inline json verify_report_json(const std::string& input, const SchwarzEquation& eq,
                               const VerificationReport& rep, const Rat& z0, int trunc) {
    json j;
    j["input"] = input;
    j["m"] = eq.m();
    j["candidate"] = rep.candidate;
    j["at"] = z0.to_string();
    j["trunc"] = trunc;
    j["residual_zero"] = rep.residual_zero;
    j["transcendental"] = rep.transcendental;
    if (rep.flagged_non_transcendental)
        j["flag"] = "candidate is not transcendental; reduction verdicts only concern transcendental solutions";
    j["residual"] = series_json(*rep.residual);
    return j;
}

// minimal structural validation used by tests: required fields with the
// expected types
inline bool valid_reduce_report(const json& j) {
    return j.contains("input") && j["input"].is_string() && j.contains("m") &&
           j["m"].is_number_integer() && j.contains("degP") && j.contains("degQ") &&
           j.contains("coprime") && j["coprime"].is_boolean() && j.contains("qclass") &&
           j["qclass"].contains("tag") && j["qclass"].contains("params") &&
           j["qclass"].contains("alternates") && j.contains("verdict") &&
           j["verdict"].contains("outcome") && j["verdict"].contains("template") &&
           j["verdict"].contains("mobius") && j["verdict"].contains("admissible") &&
           j.contains("certificates") && j["certificates"].is_array() &&
           j.contains("diagnostics") && j["diagnostics"].is_array();
}

}  // namespace swz
