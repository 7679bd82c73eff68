// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "itelos/mapping.hpp"
#include "itelos/model.hpp"
#include "itelos/ratio.hpp"

namespace itelos {

enum class MergePolicy { KeepFirst, KeepLast };

inline std::optional<MergePolicy> merge_policy_from_string(std::string_view s) {
    if (s == "keep-first") return MergePolicy::KeepFirst;
    if (s == "keep-last") return MergePolicy::KeepLast;
    return std::nullopt;
}

struct MappedRows {
    std::vector<Entity> entities;  // in entity id order
    std::size_t rows_skipped = 0;  // rows with empty key cells
    std::vector<ValueConflict> conflicts;  // intra-dataset contradictions
};

/// One entity per distinct key tuple; rows sharing a key contribute values to
/// the same entity, with intra-dataset contradictions recorded keep-first.
inline MappedRows map_rows(const Dataset& ds, const MappingSpec& spec, const Etg& etg) {
    validate_mapping(spec, etg);
    const EType* etype = etg.find_etype(spec.target_etype);
    MappedRows out;
    std::map<std::string, Entity> by_id;
    for (const auto& row : ds.rows) {
        auto cell = [&](const std::string& attr) {
            auto it = row.find(attr);
            return it == row.end() ? std::string() : it->second;
        };
        std::vector<std::string> key_values;
        bool key_ok = true;
        for (const auto& k : spec.key) {
            const std::string v = cell(k);
            if (v.empty()) key_ok = false;
            key_values.push_back(v);
        }
        if (!key_ok) {
            ++out.rows_skipped;
            continue;
        }
        const std::string id = entity_id(spec.target_etype, key_values);
        Entity& e = by_id[id];
        e.id = id;
        e.etype = spec.target_etype;
        for (const auto& [attr, prop] : spec.attribute_map) {
            const std::string v = cell(attr);
            if (v.empty()) continue;
            const Datatype dt = *etype->find_property(prop)->datatype;
            auto it = e.values.find(prop);
            if (it == e.values.end()) {
                e.values[prop] = TypedValue{dt, v};
                e.value_sources[prop] = ds.schema.dataset_id;
            } else if (it->second.lexical != v) {
                out.conflicts.push_back({id, prop, it->second.lexical, v,
                                         ds.schema.dataset_id, ds.schema.dataset_id});
            }
        }
        for (const auto& rule : spec.link_rules) {
            std::vector<std::string> target_key;
            bool link_ok = true;
            for (const auto& k : rule.target_key) {
                const std::string v = cell(k);
                if (v.empty()) link_ok = false;
                target_key.push_back(v);
            }
            if (link_ok) e.links.insert({rule.property, entity_id(rule.target_etype, target_key)});
        }
    }
    for (auto& [id, e] : by_id) out.entities.push_back(std::move(e));
    return out;
}

/// Inserts the incoming entities, merging those whose id (etype plus key
/// hash) already exists: links are unioned and value contradictions are
/// logged, keeping the first value or overwriting under keep-last.
inline std::size_t match_and_merge(Eg& eg, const std::vector<Entity>& incoming,
                                   MergePolicy policy) {
    std::size_t merged = 0;
    for (const auto& in : incoming) {
        if (!eg.schema.find_etype(in.etype))
            throw Error("merge: etype '" + in.etype + "' is absent from the EG schema");
        auto it = eg.entities.find(in.id);
        if (it == eg.entities.end()) {
            eg.entities.emplace(in.id, in);
            continue;
        }
        ++merged;
        Entity& existing = it->second;
        existing.links.insert(in.links.begin(), in.links.end());
        for (const auto& [prop, value] : in.values) {
            auto vit = existing.values.find(prop);
            const std::string in_source = in.value_sources.count(prop)
                                              ? in.value_sources.at(prop)
                                              : std::string();
            if (vit == existing.values.end()) {
                existing.values[prop] = value;
                existing.value_sources[prop] = in_source;
                continue;
            }
            if (vit->second == value) continue;
            const std::string old_source = existing.value_sources.count(prop)
                                               ? existing.value_sources.at(prop)
                                               : std::string();
            if (policy == MergePolicy::KeepFirst) {
                eg.log_conflict({in.id, prop, vit->second.lexical, value.lexical, old_source,
                                 in_source});
            } else {
                eg.log_conflict({in.id, prop, value.lexical, vit->second.lexical, in_source,
                                 old_source});
                vit->second = value;
                existing.value_sources[prop] = in_source;
            }
        }
    }
    return merged;
}

struct EgQualityReport {
    std::map<std::string, Ratio> missing_value_ratio;  // "etype.property" -> ratio
    std::size_t connected_components = 0;
    std::size_t contradiction_count = 0;
    std::size_t entities_merged = 0;
};

/// Missing-value ratios per declared data property of each populated etype,
/// plus the component count of the undirected link graph.
inline EgQualityReport compute_eg_quality(const Eg& eg, std::size_t entities_merged = 0) {
    EgQualityReport report;
    report.contradiction_count = eg.conflicts.size();
    report.entities_merged = entities_merged;

    std::map<std::string, std::size_t> population;
    for (const auto& [id, e] : eg.entities) ++population[e.etype];
    for (const auto& etype : eg.schema.etypes) {
        auto pop = population.find(etype.id);
        if (pop == population.end()) continue;
        for (const auto& prop : etype.properties) {
            if (prop.kind != PropertyKind::Data) continue;
            std::int64_t missing = 0;
            for (const auto& [id, e] : eg.entities)
                if (e.etype == etype.id && !e.values.count(prop.name)) ++missing;
            report.missing_value_ratio[etype.id + "." + prop.name] =
                Ratio{missing, static_cast<std::int64_t>(pop->second)};
        }
    }

    // connected components over the undirected link graph
    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto& [id, e] : eg.entities) {
        adjacency[id];
        for (const auto& [prop, target] : e.links) {
            if (!eg.entities.count(target)) continue;
            adjacency[id].push_back(target);
            adjacency[target].push_back(id);
        }
    }
    std::set<std::string> seen;
    for (const auto& [id, neighbours] : adjacency) {
        if (seen.count(id)) continue;
        ++report.connected_components;
        std::deque<std::string> queue{id};
        seen.insert(id);
        while (!queue.empty()) {
            const std::string cur = queue.front();
            queue.pop_front();
            for (const auto& next : adjacency[cur])
                if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return report;
}

struct IntegrationResult {
    Eg eg;
    EgQualityReport quality;
    std::size_t rows_skipped = 0;
    std::size_t links_pruned = 0;  // links whose target never materialized
};

/// Folds the datasets in declared order through map_rows and
/// match_and_merge, prunes links whose targets never materialized, and
/// checks the result against the schema.
inline IntegrationResult integrate(const Etg& etg,
                                   const std::vector<std::pair<const Dataset*, MappingSpec>>& inputs,
                                   MergePolicy policy) {
    IntegrationResult result;
    result.eg.schema = etg;
    std::size_t merged = 0;
    std::size_t index = 0;
    for (const auto& [ds, spec] : inputs) {
        try {
            MappedRows mapped = map_rows(*ds, spec, etg);
            result.rows_skipped += mapped.rows_skipped;
            for (auto& c : mapped.conflicts) result.eg.log_conflict(std::move(c));
            merged += match_and_merge(result.eg, mapped.entities, policy);
        } catch (const Error& e) {
            throw Error("dataset " + std::to_string(index) + " ('" + spec.dataset_id +
                        "'): " + e.what());
        }
        ++index;
    }
    for (auto& [id, e] : result.eg.entities) {
        for (auto it = e.links.begin(); it != e.links.end();) {
            if (!result.eg.entities.count(it->second)) {
                it = e.links.erase(it);
                ++result.links_pruned;
            } else {
                ++it;
            }
        }
    }
    const auto report = validate_eg(result.eg);
    if (!report.empty())
        throw Error("integration produced an invalid EG: " + report.front().rule + " on " +
                    report.front().subject + (report.front().property.empty()
                                                  ? ""
                                                  : "." + report.front().property));
    result.quality = compute_eg_quality(result.eg, merged);
    return result;
}

}  // namespace itelos
