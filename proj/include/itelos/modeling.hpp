// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "itelos/inception.hpp"
#include "itelos/model.hpp"

namespace itelos {

struct DroppedDataset {
    std::string dataset_id;
    std::string reason;
};

struct ExtensionMember {
    std::string etype;
    std::string property;
    std::string dataset_id;
};

struct UnhousedAttribute {
    std::string dataset_id;
    std::string attribute;
};

struct ModelingDecision {
    std::vector<std::string> kept_datasets;
    std::vector<DroppedDataset> dropped_datasets;
    ElementSet extension_members = ElementSet::properties({});
    std::vector<ExtensionMember> extensions;
    std::vector<UnhousedAttribute> unhoused;
    std::vector<std::string> warnings;
};

/// Keeps a dataset when its property coverage reaches the phase-A threshold
/// or when it contributes at least one Core or Contextual matched property
/// that no kept higher-coverage dataset already provides. Collection decides
/// what exists; this is where pruning happens.
inline ModelingDecision select_datasets(const std::vector<SchemaMatch>& matches,
                                        const CandidateSet& cands, double theta_a_cov) {
    std::vector<const SchemaMatch*> order;
    for (const auto& m : matches) order.push_back(&m);
    std::stable_sort(order.begin(), order.end(), [](const SchemaMatch* a, const SchemaMatch* b) {
        if (a->cov_properties != b->cov_properties) return b->cov_properties < a->cov_properties;
        return a->dataset_id < b->dataset_id;
    });

    std::set<std::string> provided;
    std::set<std::string> kept_ids;
    std::map<std::string, std::string> drop_reason;
    for (const SchemaMatch* m : order) {
        const auto matched = m->matched_properties();
        bool keep = m->cov_properties.value() >= theta_a_cov;
        if (!keep) {
            for (const auto& prop : matched) {
                const auto cat = cands.property_category(prop);
                if (cat && *cat != Category::Common && !provided.count(prop)) {
                    keep = true;
                    break;
                }
            }
        }
        if (keep) {
            kept_ids.insert(m->dataset_id);
            provided.insert(matched.begin(), matched.end());
        } else if (matched.empty()) {
            drop_reason[m->dataset_id] = "no overlap with purpose";
        } else {
            drop_reason[m->dataset_id] =
                "adds no Core or Contextual property beyond already kept datasets";
        }
    }

    ModelingDecision decision;
    for (const auto& m : matches) {
        if (kept_ids.count(m.dataset_id)) decision.kept_datasets.push_back(m.dataset_id);
        else decision.dropped_datasets.push_back({m.dataset_id, drop_reason[m.dataset_id]});
    }
    return decision;
}

/// Builds the ETG model: one etype per candidate etype carrying its candidate
/// properties, `has_<target>` links from CQ co-occurrence (plus purpose-file
/// relation overrides), and extension properties suggested by kept dataset
/// attributes that matched no candidate.
inline std::pair<Etg, ModelingDecision> build_etg_model(
    const CandidateSet& cands, const std::vector<SchemaMatch>& matches,
    const std::vector<DatasetSchema>& schemas, const std::vector<CompetencyQuery>& cqs,
    const GateThresholds& thresholds, const std::vector<RelationOverride>& relations = {}) {
    if (cands.empty()) throw Error("nothing to model: the candidate set is empty");

    ModelingDecision decision = select_datasets(matches, cands, thresholds.theta_a_cov);
    const std::set<std::string> kept(decision.kept_datasets.begin(),
                                     decision.kept_datasets.end());

    auto schema_of = [&](const std::string& dataset_id) -> const DatasetSchema* {
        for (const auto& s : schemas)
            if (s.dataset_id == dataset_id) return &s;
        return nullptr;
    };
    auto attribute_of = [&](const std::string& dataset_id,
                            const std::string& name) -> const Attribute* {
        const DatasetSchema* s = schema_of(dataset_id);
        if (!s) return nullptr;
        for (const auto& a : s->attributes)
            if (a.name == name) return &a;
        return nullptr;
    };

    // Property datatypes come from the strongest matched attribute across the
    // kept datasets (ties go to the earlier dataset); unmatched CQ properties
    // default to string.
    struct TypeChoice {
        double score;
        Datatype type;
    };
    std::map<std::string, TypeChoice> datatypes;
    for (const auto& m : matches) {
        if (!kept.count(m.dataset_id)) continue;
        for (const auto& pair : m.pairs) {
            const Attribute* attr = attribute_of(m.dataset_id, pair.attribute);
            if (!attr) continue;
            auto it = datatypes.find(pair.property);
            if (it == datatypes.end()) {
                datatypes.emplace(pair.property, TypeChoice{pair.score, attr->inferred_type});
            } else if (pair.score > it->second.score) {
                it->second = TypeChoice{pair.score, attr->inferred_type};
            } else if (pair.score == it->second.score && attr->inferred_type != it->second.type) {
                decision.warnings.push_back("property '" + pair.property +
                                            "' matched attributes of conflicting types; keeping " +
                                            std::string(to_string(it->second.type)));
            }
        }
    }

    Etg etg;
    etg.name = "etg-model";
    const ElementSet etype_ids = cands.all_etypes();
    for (const auto& id : etype_ids.members) {
        EType e;
        e.id = id;
        e.name = cands.display(id);
        e.category = *cands.etype_category(id);
        etg.etypes.push_back(std::move(e));
    }
    std::sort(etg.etypes.begin(), etg.etypes.end(),
              [](const EType& a, const EType& b) { return a.id < b.id; });

    for (const auto& [prop, declarers] : cands.declared_on) {
        const Category cat = *cands.property_category(prop);
        auto it = datatypes.find(prop);
        const Datatype dt = it == datatypes.end() ? Datatype::String : it->second.type;
        for (const auto& etype_id : declarers)
            etg.find_etype(etype_id)->add_property(PropertyDef::data(prop, dt, cat));
    }

    // One `has_<target>` object property from the first-listed etype to each
    // further etype of every CQ that names at least two.
    std::map<std::pair<std::string, std::string>, Category> object_props;
    for (const auto& cq : cqs) {
        if (cq.target_etypes.size() < 2) continue;
        const std::string& from = cq.target_etypes.front();
        for (std::size_t i = 1; i < cq.target_etypes.size(); ++i) {
            auto key = std::make_pair(from, cq.target_etypes[i]);
            auto [it, inserted] = object_props.emplace(key, cq.category);
            if (!inserted && cq.category < it->second) it->second = cq.category;
        }
    }
    for (const auto& [edge, cat] : object_props)
        etg.find_etype(edge.first)
            ->add_property(PropertyDef::object("has_" + edge.second, edge.second, cat));
    for (const auto& rel : relations) {
        EType* from = etg.find_etype(rel.from);
        if (!from || !etg.find_etype(rel.to))
            throw Error("relation override '" + rel.name + "' references unknown etype");
        from->add_property(PropertyDef::object(rel.name, rel.to, Category::Contextual));
    }

    // Dataset-suggested extensions: unmatched attributes of kept datasets are
    // housed by their annotation hint, or by name similarity against an etype,
    // and recorded as extension members.
    for (const auto& m : matches) {
        if (!kept.count(m.dataset_id)) continue;
        const DatasetSchema* schema = schema_of(m.dataset_id);
        if (!schema) continue;
        std::set<std::string> matched_attrs;
        for (const auto& pair : m.pairs) matched_attrs.insert(pair.attribute);
        for (const auto& attr : schema->attributes) {
            if (matched_attrs.count(attr.name)) continue;
            EType* home = nullptr;
            if (attr.etype_hint) home = etg.find_etype(*attr.etype_hint);
            if (!home) {
                double best = 0;
                for (auto& e : etg.etypes) {
                    const double s = name_similarity(attr.name, e.id).score();
                    if (s > best) {
                        best = s;
                        home = &e;
                    }
                }
                if (best < thresholds.etr_match) home = nullptr;
            }
            if (!home) {
                decision.unhoused.push_back({m.dataset_id, attr.name});
                continue;
            }
            if (home->find_property(attr.name)) continue;
            home->add_property(PropertyDef::data(attr.name, attr.inferred_type, attr.category));
            decision.extension_members.members.insert(attr.name);
            decision.extensions.push_back({home->id, attr.name, m.dataset_id});
        }
    }

    const auto report = validate_etg(etg);
    if (!report.empty())
        throw Error("modeling produced an invalid ETG: " + report.front().rule + " on " +
                    report.front().subject);
    return {std::move(etg), std::move(decision)};
}

}  // namespace itelos
