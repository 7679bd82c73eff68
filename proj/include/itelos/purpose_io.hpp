// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "itelos/csv.hpp"
#include "itelos/model.hpp"

namespace itelos {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(what + ": syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline Category parse_category(const Json& j, const std::string& ctx) {
    if (!j.is_string()) throw Error(ctx + ": category must be a string");
    auto cat = category_from_string(j.get<std::string>());
    if (!cat) throw Error(ctx + ": unknown category '" + j.get<std::string>() + "'");
    return *cat;
}

inline std::string literal_to_string(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number()) return j.dump();
    throw Error("filter literal must be a string, number or boolean");
}

inline double threshold_field(const Json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const double v = j.at(key).get<double>();
    if (v < 0.0 || v > 1.0)
        throw Error(std::string("threshold '") + key + "' must lie in [0,1]");
    return v;
}

}  // namespace detail

/// Parses a purpose file. Missing thresholds take the documented defaults;
/// duplicate CQ ids, unknown categories and a missing Core CQ are rejected.
inline Purpose parse_purpose(std::string_view text) {
    const Json j = detail::parse_json(text, "purpose");
    Purpose p;
    auto remember = [&p](const std::string& raw) {
        const std::string c = canon(raw);
        p.display_names.emplace(c, raw);
        return c;
    };

    p.description = j.value("description", std::string());
    if (j.contains("keep_model_terminology"))
        p.keep_model_terminology = j.at("keep_model_terminology").get<bool>();

    if (!j.contains("cqs") || !j.at("cqs").is_array())
        throw Error("purpose: missing 'cqs' array");
    std::set<int> ids;
    for (const auto& jq : j.at("cqs")) {
        CompetencyQuery cq;
        cq.id = jq.at("id").get<int>();
        const std::string ctx = "CQ " + std::to_string(cq.id);
        if (!ids.insert(cq.id).second) throw Error("purpose: duplicate CQ id " + std::to_string(cq.id));
        cq.question = jq.value("question", std::string());
        cq.action = jq.value("action", std::string());
        cq.category = detail::parse_category(jq.at("category"), ctx);
        for (const auto& je : jq.at("target_etypes"))
            cq.target_etypes.push_back(remember(je.get<std::string>()));
        if (cq.target_etypes.empty()) throw Error(ctx + ": target_etypes is empty");
        const std::set<std::string> targets(cq.target_etypes.begin(), cq.target_etypes.end());
        for (const auto& jr : jq.value("required_properties", Json::array())) {
            RequiredProperty rp;
            rp.etype = remember(jr.at("etype").get<std::string>());
            rp.property = remember(jr.at("property").get<std::string>());
            if (!targets.count(rp.etype))
                throw Error(ctx + ": required property '" + rp.property +
                            "' references non-target etype '" + rp.etype + "'");
            cq.required_properties.push_back(std::move(rp));
        }
        for (const auto& jf : jq.value("filters", Json::array())) {
            QueryFilter f;
            f.etype = remember(jf.at("etype").get<std::string>());
            f.property = canon(jf.at("property").get<std::string>());
            auto op = comparator_from_string(jf.at("op").get<std::string>());
            if (!op) throw Error(ctx + ": unknown comparator '" + jf.at("op").get<std::string>() + "'");
            f.op = *op;
            f.literal = detail::literal_to_string(jf.at("value"));
            if (!targets.count(f.etype))
                throw Error(ctx + ": filter references non-target etype '" + f.etype + "'");
            cq.filters.push_back(std::move(f));
        }
        p.cqs.push_back(std::move(cq));
    }
    const bool has_core = std::any_of(p.cqs.begin(), p.cqs.end(), [](const CompetencyQuery& cq) {
        return cq.category == Category::Core;
    });
    if (!has_core) throw Error("purpose: no Core CQ");

    for (const auto& jd : j.value("datasets", Json::array()))
        p.dataset_refs.push_back(jd.get<std::string>());
    for (const auto& jo : j.value("ontologies", Json::array()))
        p.ontology_refs.push_back(jo.get<std::string>());

    const Json jt = j.value("thresholds", Json::object());
    GateThresholds defaults;
    p.thresholds.theta_a_cov = detail::threshold_field(jt, "theta_a_cov", defaults.theta_a_cov);
    p.thresholds.theta_b_ext_min =
        detail::threshold_field(jt, "theta_b_ext_min", defaults.theta_b_ext_min);
    p.thresholds.theta_b_ext_max =
        detail::threshold_field(jt, "theta_b_ext_max", defaults.theta_b_ext_max);
    p.thresholds.theta_c_spr = detail::threshold_field(jt, "theta_c_spr", defaults.theta_c_spr);
    p.thresholds.theta_d_core = detail::threshold_field(jt, "theta_d_core", defaults.theta_d_core);
    p.thresholds.theta_d_all = detail::threshold_field(jt, "theta_d_all", defaults.theta_d_all);
    p.thresholds.etr_match = detail::threshold_field(jt, "etr_match", defaults.etr_match);
    if (p.thresholds.theta_b_ext_min > p.thresholds.theta_b_ext_max)
        throw Error("purpose: theta_b_ext_min exceeds theta_b_ext_max");

    const Json jw = j.value("etr_weights", Json::object());
    p.etr_weights.name = jw.value("name", 0.5);
    p.etr_weights.property = jw.value("property", 0.5);
    if (p.etr_weights.name < 0 || p.etr_weights.property < 0 ||
        std::abs(p.etr_weights.name + p.etr_weights.property - 1.0) > 1e-9)
        throw Error("purpose: etr_weights must be non-negative and sum to 1");

    for (const auto& jr : j.value("relations", Json::array())) {
        RelationOverride r;
        r.from = remember(jr.at("from").get<std::string>());
        r.to = remember(jr.at("to").get<std::string>());
        r.name = canon(jr.at("name").get<std::string>());
        p.relations.push_back(std::move(r));
    }
    return p;
}

/// Annotation sidecar: a JSON object mapping each raw column name to
/// {category, etype_hint?, description?}.
inline AnnotationMap parse_annotations(std::string_view text, const std::string& what) {
    const Json j = detail::parse_json(text, what);
    if (!j.is_object()) throw Error(what + ": expected an object of column annotations");
    AnnotationMap out;
    for (const auto& [column, spec] : j.items()) {
        ColumnAnnotation ann;
        ann.category = detail::parse_category(spec.at("category"), what + " column '" + column + "'");
        if (spec.contains("etype_hint")) ann.etype_hint = spec.at("etype_hint").get<std::string>();
        ann.description = spec.value("description", std::string());
        out.emplace(column, std::move(ann));
    }
    return out;
}

}  // namespace itelos
