// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <string>
#include <string_view>

#include "itelos/purpose_io.hpp"

namespace itelos {

/// ETG exchange format:
/// {name, etypes:[{id, name, category, properties:[{name, kind,
/// datatype|range, category}]}]}. Identifiers are canonicalized on load and a
/// load that fails validation reports the violations.
inline Etg load_etg_json(std::string_view text, std::string_view ontology_source = {}) {
    const Json j = detail::parse_json(text, "ETG");
    Etg etg;
    etg.name = j.value("name", std::string());
    for (const auto& je : j.at("etypes")) {
        EType e;
        e.id = canon(je.at("id").get<std::string>());
        e.name = je.value("name", je.at("id").get<std::string>());
        e.category = detail::parse_category(je.at("category"), "etype '" + e.id + "'");
        if (!ontology_source.empty()) e.provenance = {true, std::string(ontology_source)};
        for (const auto& jp : je.value("properties", Json::array())) {
            PropertyDef p;
            p.name = canon(jp.at("name").get<std::string>());
            const std::string kind = jp.at("kind").get<std::string>();
            p.category = detail::parse_category(jp.at("category"), "property '" + p.name + "'");
            if (kind == "data") {
                p.kind = PropertyKind::Data;
                auto dt = datatype_from_string(jp.at("datatype").get<std::string>());
                if (!dt)
                    throw Error("ETG: unknown datatype '" + jp.at("datatype").get<std::string>() +
                                "' on property '" + p.name + "'");
                p.datatype = *dt;
            } else if (kind == "object") {
                p.kind = PropertyKind::Object;
                p.range_etype = canon(jp.at("range").get<std::string>());
            } else {
                throw Error("ETG: unknown property kind '" + kind + "'");
            }
            e.properties.push_back(std::move(p));
        }
        std::sort(e.properties.begin(), e.properties.end(),
                  [](const PropertyDef& a, const PropertyDef& b) { return a.name < b.name; });
        etg.etypes.push_back(std::move(e));
    }
    std::sort(etg.etypes.begin(), etg.etypes.end(),
              [](const EType& a, const EType& b) { return a.id < b.id; });

    const auto report = validate_etg(etg);
    if (!report.empty()) {
        std::string msg = "ETG '" + etg.name + "' failed validation:";
        for (const auto& v : report)
            msg += "\n  [" + v.rule + "] " + v.subject +
                   (v.property.empty() ? "" : "." + v.property) + ": " + v.message;
        throw Error(msg);
    }
    return etg;
}

inline Json etg_to_json(const Etg& etg) {
    Json j;
    j["name"] = etg.name;
    j["etypes"] = Json::array();
    for (const auto& e : etg.etypes) {
        Json je;
        je["id"] = e.id;
        je["name"] = e.name;
        je["category"] = to_string(e.category);
        je["properties"] = Json::array();
        for (const auto& p : e.properties) {
            Json jp;
            jp["name"] = p.name;
            if (p.kind == PropertyKind::Data) {
                jp["kind"] = "data";
                jp["datatype"] = to_string(*p.datatype);
            } else {
                jp["kind"] = "object";
                jp["range"] = *p.range_etype;
            }
            jp["category"] = to_string(p.category);
            je["properties"].push_back(std::move(jp));
        }
        j["etypes"].push_back(std::move(je));
    }
    return j;
}

/// Round-trip identity: load_etg_json(save_etg_json(etg)) is structurally
/// equal to etg.
inline std::string save_etg_json(const Etg& etg) { return etg_to_json(etg).dump(2) + "\n"; }

}  // namespace itelos
