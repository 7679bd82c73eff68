// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "itelos/alignment.hpp"
#include "itelos/gates.hpp"
#include "itelos/inception.hpp"
#include "itelos/integration.hpp"
#include "itelos/modeling.hpp"
#include "itelos/purpose_io.hpp"

namespace itelos {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes via a temporary file and rename so a crash never leaves a
/// half-written artifact.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

inline Json ratio_to_json(const Ratio& r) {
    Json j;
    j["num"] = r.num;
    j["den"] = r.den;
    j["value"] = r.value();
    return j;
}

inline Json element_set_to_json(const ElementSet& s) { return Json(s.members); }

inline Json candidate_set_to_json(const CandidateSet& c) {
    Json j;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto cat = to_string(static_cast<Category>(i));
        j["etypes"][cat] = element_set_to_json(c.etypes_by_category[i]);
        j["properties"][cat] = element_set_to_json(c.properties_by_category[i]);
    }
    j["etype_provenance"] = Json(c.etype_provenance);
    j["property_provenance"] = Json(c.property_provenance);
    j["declared_on"] = Json::object();
    for (const auto& [prop, etypes] : c.declared_on) j["declared_on"][prop] = Json(etypes);
    j["display_names"] = Json(c.display_names);
    return j;
}

inline CandidateSet candidate_set_from_json(const Json& j) {
    CandidateSet c;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto cat = to_string(static_cast<Category>(i));
        for (const auto& m : j.at("etypes").at(cat))
            c.etypes_by_category[i].members.insert(m.get<std::string>());
        for (const auto& m : j.at("properties").at(cat))
            c.properties_by_category[i].members.insert(m.get<std::string>());
    }
    for (const auto& [k, v] : j.at("etype_provenance").items())
        c.etype_provenance[k] = v.get<std::vector<int>>();
    for (const auto& [k, v] : j.at("property_provenance").items())
        c.property_provenance[k] = v.get<std::vector<int>>();
    for (const auto& [k, v] : j.at("declared_on").items())
        c.declared_on[k] = v.get<std::set<std::string>>();
    for (const auto& [k, v] : j.at("display_names").items())
        c.display_names[k] = v.get<std::string>();
    return c;
}

inline Json match_to_json(const SchemaMatch& m) {
    Json j;
    j["dataset"] = m.dataset_id;
    j["pairs"] = Json::array();
    for (const auto& p : m.pairs) {
        Json jp;
        jp["attribute"] = p.attribute;
        jp["etype"] = p.etype;
        jp["property"] = p.property;
        jp["score"] = p.score;
        j["pairs"].push_back(std::move(jp));
    }
    j["cov_etypes"] = ratio_to_json(m.cov_etypes);
    j["cov_properties"] = ratio_to_json(m.cov_properties);
    return j;
}

inline SchemaMatch match_from_json(const Json& j) {
    SchemaMatch m;
    m.dataset_id = j.at("dataset").get<std::string>();
    for (const auto& jp : j.at("pairs")) {
        MatchPair p;
        p.attribute = jp.at("attribute").get<std::string>();
        p.etype = jp.at("etype").get<std::string>();
        p.property = jp.at("property").get<std::string>();
        p.score = jp.at("score").get<double>();
        m.pairs.push_back(std::move(p));
    }
    m.cov_etypes = Ratio{j.at("cov_etypes").at("num").get<std::int64_t>(),
                         j.at("cov_etypes").at("den").get<std::int64_t>()};
    m.cov_properties = Ratio{j.at("cov_properties").at("num").get<std::int64_t>(),
                             j.at("cov_properties").at("den").get<std::int64_t>()};
    return m;
}

inline Json gate_report_to_json(const GateReport& r) {
    Json j;
    j["phase"] = to_string(r.phase);
    j["metric_values"] = Json::object();
    for (const auto& [k, v] : r.metric_values) j["metric_values"][k] = v;
    j["verdicts"] = Json::array();
    for (const auto& v : r.verdicts) {
        Json jv;
        jv["metric"] = v.metric;
        jv["observed"] = v.observed;
        jv["requirement"] = v.requirement;
        jv["pass"] = v.pass;
        j["verdicts"].push_back(std::move(jv));
    }
    j["overall"] = r.pass ? "pass" : "fail";
    if (!r.pass) j["backtrack_to"] = r.backtrack_to;
    return j;
}

inline Json decision_to_json(const ModelingDecision& d) {
    Json j;
    j["kept_datasets"] = Json(d.kept_datasets);
    j["dropped_datasets"] = Json::array();
    for (const auto& drop : d.dropped_datasets) {
        Json jd;
        jd["dataset"] = drop.dataset_id;
        jd["reason"] = drop.reason;
        j["dropped_datasets"].push_back(std::move(jd));
    }
    j["extension_members"] = element_set_to_json(d.extension_members);
    j["extensions"] = Json::array();
    for (const auto& ext : d.extensions) {
        Json je;
        je["etype"] = ext.etype;
        je["property"] = ext.property;
        je["dataset"] = ext.dataset_id;
        j["extensions"].push_back(std::move(je));
    }
    j["unhoused_attributes"] = Json::array();
    for (const auto& u : d.unhoused) {
        Json ju;
        ju["dataset"] = u.dataset_id;
        ju["attribute"] = u.attribute;
        j["unhoused_attributes"].push_back(std::move(ju));
    }
    j["warnings"] = Json(d.warnings);
    return j;
}

inline Json ranking_to_json(const std::vector<OntologyScore>& ranking) {
    Json j = Json::array();
    for (const auto& s : ranking) {
        Json js;
        js["ontology"] = s.ontology_id;
        js["etype_overlap"] = s.etype_overlap;
        js["aggregate"] = s.aggregate.value();
        js["sharability"] = Json::object();
        for (const auto& [etype, ratio] : s.sharability) js["sharability"][etype] = ratio.value();
        js["matched"] = Json(s.matched);
        js["predictions"] = Json::object();
        for (const auto& [m, preds] : s.predictions) {
            Json jp = Json::array();
            for (const auto& p : preds) {
                Json je;
                je["etype"] = p.ontology_etype;
                je["score"] = p.score;
                jp.push_back(std::move(je));
            }
            js["predictions"][m] = std::move(jp);
        }
        j.push_back(std::move(js));
    }
    return j;
}

inline Json provenance_to_json(const AlignmentProvenance& p) {
    auto entry = [](const ProvenanceEntry& e) {
        Json j;
        j["origin"] = e.origin;
        if (e.origin != "model") {
            j["source_etype"] = e.source_etype;
            j["score"] = e.score;
            j["renamed"] = e.renamed;
        }
        return j;
    };
    Json j;
    j["etypes"] = Json::object();
    for (const auto& [id, e] : p.etypes) j["etypes"][id] = entry(e);
    j["properties"] = Json::object();
    for (const auto& [etype, props] : p.properties) {
        Json jp = Json::object();
        for (const auto& [name, e] : props) jp[name] = entry(e);
        j["properties"][etype] = std::move(jp);
    }
    j["renames"] = Json(p.renames);
    return j;
}

inline Json cleaning_to_json(const CleaningReport& r) {
    Json j;
    j["dataset"] = r.dataset_id;
    j["rejected_by_column"] = Json::object();
    for (const auto& [col, n] : r.rejected_by_column) j["rejected_by_column"][col] = n;
    j["dropped_attributes"] = Json(r.dropped_attributes);
    j["total_rejections"] = r.total_rejections;
    return j;
}

inline Json quality_to_json(const EgQualityReport& q) {
    Json j;
    j["missing_value_ratio"] = Json::object();
    for (const auto& [k, r] : q.missing_value_ratio) j["missing_value_ratio"][k] = r.value();
    j["connected_components"] = q.connected_components;
    j["contradiction_count"] = q.contradiction_count;
    j["entities_merged"] = q.entities_merged;
    return j;
}

inline Json cq_result_to_json(const CqResult& r) {
    Json j;
    j["cq_id"] = r.cq_id;
    j["answerable"] = r.answerable;
    j["row_count"] = r.row_count;
    j["rows"] = Json::array();
    for (const auto& row : r.rows) {
        Json jr;
        jr["entity"] = row.entity_id;
        jr["values"] = Json::object();
        for (const auto& [prop, value] : row.values) jr["values"][prop] = value;
        j["rows"].push_back(std::move(jr));
    }
    return j;
}

}  // namespace itelos
