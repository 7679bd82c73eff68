// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "itelos/csv.hpp"
#include "itelos/metrics.hpp"
#include "itelos/model.hpp"
#include "itelos/similarity.hpp"

namespace itelos {

/// Etypes and properties extracted from the CQs, bucketed by reusability
/// category. Members inherit the most reusable category among their CQs and
/// every member traces back to the CQ ids that mention it.
struct CandidateSet {
    std::array<ElementSet, 3> etypes_by_category{
        ElementSet::etypes({}), ElementSet::etypes({}), ElementSet::etypes({})};
    std::array<ElementSet, 3> properties_by_category{
        ElementSet::properties({}), ElementSet::properties({}), ElementSet::properties({})};
    std::map<std::string, std::vector<int>> etype_provenance;
    std::map<std::string, std::vector<int>> property_provenance;
    std::map<std::string, std::set<std::string>> declared_on;  // property -> declaring etypes
    std::map<std::string, std::string> display_names;

    ElementSet all_etypes() const {
        ElementSet out = ElementSet::etypes({});
        for (const auto& s : etypes_by_category)
            out.members.insert(s.members.begin(), s.members.end());
        return out;
    }
    ElementSet all_properties() const {
        ElementSet out = ElementSet::properties({});
        for (const auto& s : properties_by_category)
            out.members.insert(s.members.begin(), s.members.end());
        return out;
    }
    std::optional<Category> etype_category(const std::string& id) const {
        for (std::size_t i = 0; i < 3; ++i)
            if (etypes_by_category[i].members.count(id)) return static_cast<Category>(i);
        return std::nullopt;
    }
    std::optional<Category> property_category(const std::string& name) const {
        for (std::size_t i = 0; i < 3; ++i)
            if (properties_by_category[i].members.count(name)) return static_cast<Category>(i);
        return std::nullopt;
    }
    bool empty() const { return all_etypes().empty(); }
    std::string display(const std::string& id) const {
        auto it = display_names.find(id);
        return it == display_names.end() ? id : it->second;
    }
};

/// Union over the CQs of target etypes and required properties, deduplicated
/// by canonical id. Order-insensitive and idempotent in the CQ list.
inline CandidateSet collect_candidates(const std::vector<CompetencyQuery>& cqs,
                                       const std::map<std::string, std::string>& display = {}) {
    struct Acc {
        Category category = Category::Contextual;
        std::set<int> cq_ids;
    };
    std::map<std::string, Acc> etypes, properties;
    std::map<std::string, std::set<std::string>> declared_on;
    auto absorb = [](std::map<std::string, Acc>& into, const std::string& id, Category cat,
                     int cq_id) {
        auto& acc = into[id];
        if (acc.cq_ids.empty() || cat < acc.category) acc.category = cat;
        acc.cq_ids.insert(cq_id);
    };
    for (const auto& cq : cqs) {
        for (const auto& et : cq.target_etypes) absorb(etypes, et, cq.category, cq.id);
        for (const auto& rp : cq.required_properties) {
            absorb(properties, rp.property, cq.category, cq.id);
            declared_on[rp.property].insert(rp.etype);
        }
    }

    CandidateSet out;
    out.declared_on = std::move(declared_on);
    for (const auto& [id, acc] : etypes) {
        out.etypes_by_category[static_cast<std::size_t>(acc.category)].members.insert(id);
        out.etype_provenance[id] = {acc.cq_ids.begin(), acc.cq_ids.end()};
    }
    for (const auto& [name, acc] : properties) {
        out.properties_by_category[static_cast<std::size_t>(acc.category)].members.insert(name);
        out.property_provenance[name] = {acc.cq_ids.begin(), acc.cq_ids.end()};
    }
    for (const auto& [c, raw] : display)
        if (out.etype_provenance.count(c) || out.property_provenance.count(c))
            out.display_names.emplace(c, raw);
    return out;
}

struct MatchPair {
    std::string attribute;  // canonical attribute name
    std::string etype;      // candidate etype context
    std::string property;   // candidate property
    double score = 0;
};

struct SchemaMatch {
    std::string dataset_id;
    std::vector<MatchPair> pairs;
    Ratio cov_etypes;
    Ratio cov_properties;

    std::set<std::string> matched_properties() const {
        std::set<std::string> out;
        for (const auto& p : pairs) out.insert(p.property);
        return out;
    }
    std::set<std::string> matched_etypes() const {
        std::set<std::string> out;
        for (const auto& p : pairs) out.insert(p.etype);
        return out;
    }
};

/// Best candidate property per attribute by name similarity; a pair is kept
/// when its score reaches the match threshold. Ties resolve by higher token
/// Jaccard, then higher string similarity, then property name, so the closest
/// surface form wins among equally token-similar candidates.
inline SchemaMatch match_schema(const DatasetSchema& schema, const CandidateSet& cands,
                                double threshold) {
    SchemaMatch match;
    match.dataset_id = schema.dataset_id;
    const ElementSet cand_props = cands.all_properties();
    for (const auto& attr : schema.attributes) {
        std::string best_prop;
        NameSimilarity best_sim;
        bool have = false;
        for (const auto& prop : cand_props.members) {
            const NameSimilarity sim = name_similarity(attr.name, prop);
            if (!have || sim.score() > best_sim.score() ||
                (sim.score() == best_sim.score() &&
                 (sim.jaccard > best_sim.jaccard ||
                  (sim.jaccard == best_sim.jaccard &&
                   (sim.levenshtein > best_sim.levenshtein ||
                    (sim.levenshtein == best_sim.levenshtein && prop < best_prop)))))) {
                best_prop = prop;
                best_sim = sim;
                have = true;
            }
        }
        if (!have || best_sim.score() < threshold) continue;
        MatchPair pair;
        pair.attribute = attr.name;
        pair.property = best_prop;
        pair.score = best_sim.score();
        const auto& declarers = cands.declared_on.at(best_prop);
        if (attr.etype_hint && declarers.count(*attr.etype_hint))
            pair.etype = *attr.etype_hint;
        else
            pair.etype = *declarers.begin();
        match.pairs.push_back(std::move(pair));
    }
    match.cov_properties =
        coverage(cand_props, ElementSet::properties(match.matched_properties()));
    match.cov_etypes = coverage(cands.all_etypes(), ElementSet::etypes(match.matched_etypes()));
    return match;
}

template <typename T>
struct CategoryBatches {
    std::vector<T> common;
    std::vector<T> core;
    std::vector<T> contextual;
};

/// Splits items into the three processing batches, most reusable first,
/// keeping the input order within each batch.
template <typename T, typename CategoryOf>
CategoryBatches<T> order_by_category(const std::vector<T>& items, CategoryOf category_of) {
    CategoryBatches<T> batches;
    for (const auto& item : items) {
        switch (category_of(item)) {
            case Category::Common: batches.common.push_back(item); break;
            case Category::Core: batches.core.push_back(item); break;
            case Category::Contextual: batches.contextual.push_back(item); break;
        }
    }
    return batches;
}

inline CategoryBatches<Attribute> order_by_category(const std::vector<Attribute>& attributes) {
    return order_by_category(attributes, [](const Attribute& a) { return a.category; });
}

}  // namespace itelos
