// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <map>
#include <string>
#include <vector>

#include "itelos/csv.hpp"
#include "itelos/purpose_io.hpp"

namespace itelos {

struct LinkRule {
    std::string property;      // canonical object property on the source etype
    std::string target_etype;  // canonical
    std::vector<std::string> target_key;  // attribute names (as in the CSV header)
};

/// How one dataset populates one etype: which attributes become property
/// values, which key attributes identify a real-world entity, and which
/// links to resolve by target key.
struct MappingSpec {
    std::string dataset_id;
    std::string target_etype;                          // canonical
    std::map<std::string, std::string> attribute_map;  // attribute -> canonical property
    std::vector<std::string> key;                      // attribute names, non-empty
    std::vector<LinkRule> link_rules;
};

inline std::vector<MappingSpec> load_mappings_json(std::string_view text) {
    const Json j = detail::parse_json(text, "mappings");
    if (!j.is_array()) throw Error("mappings: expected an array of mapping specs");
    std::vector<MappingSpec> specs;
    for (const auto& js : j) {
        MappingSpec spec;
        spec.dataset_id = js.at("dataset").get<std::string>();
        spec.target_etype = canon(js.at("etype").get<std::string>());
        for (const auto& [attr, prop] : js.at("attributes").items())
            spec.attribute_map[attr] = canon(prop.get<std::string>());
        for (const auto& jk : js.at("key")) spec.key.push_back(jk.get<std::string>());
        if (spec.key.empty())
            throw Error("mappings: spec for dataset '" + spec.dataset_id + "' has an empty key");
        for (const auto& jl : js.value("links", Json::array())) {
            LinkRule rule;
            rule.property = canon(jl.at("property").get<std::string>());
            rule.target_etype = canon(jl.at("target_etype").get<std::string>());
            for (const auto& jk : jl.at("target_key"))
                rule.target_key.push_back(jk.get<std::string>());
            spec.link_rules.push_back(std::move(rule));
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

/// Rewrites mapping specs through the alignment rename map so the dataset
/// side keeps mapping after an etype was adopted under an ontology name.
inline std::vector<MappingSpec> remap_specs(std::vector<MappingSpec> specs,
                                            const std::map<std::string, std::string>& renames) {
    if (renames.empty()) return specs;
    auto renamed = [&](std::string& id) {
        auto it = renames.find(id);
        if (it != renames.end()) id = it->second;
    };
    for (auto& spec : specs) {
        renamed(spec.target_etype);
        for (auto& rule : spec.link_rules) renamed(rule.target_etype);
    }
    return specs;
}

/// All mapped properties must exist on the target etype with the right kind.
inline void validate_mapping(const MappingSpec& spec, const Etg& etg) {
    const EType* etype = etg.find_etype(spec.target_etype);
    if (!etype)
        throw Error("mapping for dataset '" + spec.dataset_id + "': etype '" + spec.target_etype +
                    "' is not in the ETG");
    for (const auto& [attr, prop] : spec.attribute_map) {
        const PropertyDef* def = etype->find_property(prop);
        if (!def)
            throw Error("mapping for dataset '" + spec.dataset_id + "': property '" + prop +
                        "' is not declared on etype '" + spec.target_etype + "'");
        if (def->kind != PropertyKind::Data)
            throw Error("mapping for dataset '" + spec.dataset_id + "': property '" + prop +
                        "' is an object property; use a link rule");
    }
    for (const auto& rule : spec.link_rules) {
        const PropertyDef* def = etype->find_property(rule.property);
        if (!def || def->kind != PropertyKind::Object)
            throw Error("mapping for dataset '" + spec.dataset_id + "': link property '" +
                        rule.property + "' is not an object property of '" + spec.target_etype +
                        "'");
        if (def->range_etype && *def->range_etype != rule.target_etype)
            throw Error("mapping for dataset '" + spec.dataset_id + "': link '" + rule.property +
                        "' targets '" + rule.target_etype + "' but the declared range is '" +
                        *def->range_etype + "'");
    }
}

}  // namespace itelos
