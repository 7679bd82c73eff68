// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "itelos/inception.hpp"
#include "itelos/mapping.hpp"
#include "itelos/model.hpp"
#include "itelos/ratio.hpp"
#include "itelos/similarity.hpp"

namespace itelos {

struct EtypePrediction {
    std::string ontology_etype;
    double score = 0;
};

/// Per model etype, every ontology etype with its recognition score, best
/// first.
using PredictionVector = std::map<std::string, std::vector<EtypePrediction>>;

/// Deterministic feature-similarity recognition:
/// score = w_name * nameSim + w_prop * Jaccard over property names.
inline PredictionVector etype_recognition(const Etg& model, const Etg& ontology,
                                          const EtrWeights& weights) {
    PredictionVector predictions;
    for (const auto& m : model.etypes) {
        const auto m_props = m.property_names();
        std::vector<EtypePrediction> scored;
        for (const auto& o : ontology.etypes) {
            const double name_part = name_similarity(m.id, o.id).score();
            const double prop_part = token_jaccard(m_props, o.property_names());
            scored.push_back({o.id, weights.name * name_part + weights.property * prop_part});
        }
        std::sort(scored.begin(), scored.end(), [](const EtypePrediction& a, const EtypePrediction& b) {
            if (a.score != b.score) return a.score > b.score;
            return a.ontology_etype < b.ontology_etype;
        });
        predictions[m.id] = std::move(scored);
    }
    return predictions;
}

struct OntologyScore {
    std::string ontology_id;
    std::size_t etype_overlap = 0;                      // model etypes recognized above threshold
    std::map<std::string, Ratio> sharability;           // ontology etype -> shared property ratio
    Ratio aggregate;                                    // mean over matched etypes
    PredictionVector predictions;
    std::map<std::string, std::string> matched;         // model etype -> ontology etype
};

/// Scores every reference ontology against the model and sorts by
/// (etype overlap, aggregate sharability, id).
inline std::vector<OntologyScore> rank_ontologies(const Etg& model,
                                                  const std::vector<Etg>& ontologies,
                                                  const EtrWeights& weights, double etr_match) {
    std::vector<OntologyScore> scores;
    for (const auto& ontology : ontologies) {
        OntologyScore score;
        score.ontology_id = ontology.name;
        score.predictions = etype_recognition(model, ontology, weights);
        Ratio sum;
        for (const auto& m : model.etypes) {
            const auto& preds = score.predictions.at(m.id);
            if (preds.empty() || preds.front().score < etr_match) continue;
            const std::string& best = preds.front().ontology_etype;
            score.matched[m.id] = best;
            ++score.etype_overlap;
            const EType* o = ontology.find_etype(best);
            const auto o_props = o->property_names();
            const auto shared =
                static_cast<std::int64_t>(intersection_size(m.property_names(), o_props));
            const Ratio ratio = o_props.empty()
                                    ? Ratio::one()
                                    : Ratio{shared, static_cast<std::int64_t>(o_props.size())};
            score.sharability[best] = ratio;
            sum = sum + ratio;
        }
        if (score.etype_overlap > 0)
            score.aggregate = Ratio{sum.num, sum.den * static_cast<std::int64_t>(score.etype_overlap)};
        scores.push_back(std::move(score));
    }
    std::sort(scores.begin(), scores.end(), [](const OntologyScore& a, const OntologyScore& b) {
        if (a.etype_overlap != b.etype_overlap) return a.etype_overlap > b.etype_overlap;
        if (a.aggregate != b.aggregate) return b.aggregate < a.aggregate;
        return a.ontology_id < b.ontology_id;
    });
    return scores;
}

struct ProvenanceEntry {
    std::string origin = "model";  // "model" or the ontology id
    std::string source_etype;      // ontology etype when origin is an ontology
    double score = 0;
    bool renamed = false;
};

/// Origin of every etype and property of the final ETG.
struct AlignmentProvenance {
    std::map<std::string, ProvenanceEntry> etypes;
    std::map<std::string, std::map<std::string, ProvenanceEntry>> properties;  // etype -> prop
    std::map<std::string, std::string> renames;  // model etype id -> final etype id
};

struct AlignmentOutcome {
    Etg final_etg;
    AlignmentProvenance provenance;
    double adopted_fraction = 0;  // of Common and Core etypes with a usable prediction
    std::vector<std::string> warnings;
};

/// Re-checks, after alignment, that every attribute pair produced by schema
/// matching still resolves to a property of the final ETG. Returns the
/// orphaned ones.
inline std::vector<std::string> orphaned_attributes(const std::vector<SchemaMatch>& matches,
                                                    const Etg& final_etg,
                                                    const std::map<std::string, std::string>& renames) {
    std::vector<std::string> orphans;
    for (const auto& m : matches) {
        for (const auto& pair : m.pairs) {
            std::string etype_id = pair.etype;
            auto it = renames.find(etype_id);
            if (it != renames.end()) etype_id = it->second;
            const EType* e = final_etg.find_etype(etype_id);
            if (!e || !e->find_property(pair.property))
                orphans.push_back(m.dataset_id + "." + pair.attribute + " -> " + pair.etype + "." +
                                  pair.property);
        }
    }
    return orphans;
}

/// Builds the shareable ETG. Common etypes adopt the recognized ontology
/// etype (id, name, merged property set) whenever the top ontology predicts
/// one above the match threshold; Core etypes are treated the same way;
/// Contextual etypes stay as modeled and only steer ontology selection. With
/// keep_model_terminology the renaming is suppressed but the matches are
/// still recorded in the provenance.
inline AlignmentOutcome generate_final_etg(const Etg& model,
                                           const std::vector<OntologyScore>& ranking,
                                           const std::vector<Etg>& ontologies,
                                           const std::vector<SchemaMatch>& matches,
                                           double etr_match, bool keep_model_terminology) {
    AlignmentOutcome out;
    out.final_etg = model;
    out.final_etg.name = "etg-final";
    for (const auto& e : model.etypes) {
        out.provenance.etypes[e.id] = ProvenanceEntry{};
        for (const auto& p : e.properties)
            out.provenance.properties[e.id][p.name] = ProvenanceEntry{};
    }
    if (ranking.empty() || ranking.front().etype_overlap == 0) {
        const auto orphans = orphaned_attributes(matches, out.final_etg, {});
        if (!orphans.empty())
            throw Error("alignment compliance failed; orphaned attributes: " + orphans.front());
        return out;
    }

    const OntologyScore& top = ranking.front();
    const Etg* ontology = nullptr;
    for (const auto& o : ontologies)
        if (o.name == top.ontology_id) ontology = &o;
    if (!ontology) throw Error("ranked ontology '" + top.ontology_id + "' was not supplied");

    std::size_t adoptable = 0, adopted = 0;
    std::set<std::string> used_ontology_etypes;
    for (const auto& m : model.etypes) {
        if (m.category == Category::Contextual) continue;
        ++adoptable;
        const auto& preds = top.predictions.at(m.id);
        if (preds.empty() || preds.front().score < etr_match) continue;
        const std::string& source = preds.front().ontology_etype;
        if (!used_ontology_etypes.insert(source).second) {
            out.warnings.push_back("ontology etype '" + source +
                                   "' already adopted; keeping model etype '" + m.id + "'");
            continue;
        }
        ++adopted;
        const EType* src = ontology->find_etype(source);
        ProvenanceEntry entry{top.ontology_id, source, preds.front().score, false};

        EType* target = out.final_etg.find_etype(m.id);
        if (!keep_model_terminology && src->id != m.id) {
            entry.renamed = true;
            out.provenance.renames[m.id] = src->id;
            // carry the property provenance map over to the new id
            auto props = out.provenance.properties[m.id];
            out.provenance.properties.erase(m.id);
            out.provenance.properties[src->id] = std::move(props);
            out.provenance.etypes.erase(m.id);
            target->id = src->id;
            target->name = src->name;
            target->provenance = {true, top.ontology_id};
            for (auto& e : out.final_etg.etypes)
                for (auto& p : e.properties)
                    if (p.kind == PropertyKind::Object && p.range_etype == m.id)
                        p.range_etype = src->id;
        }
        // merge the ontology property set; datatype conflicts resolve toward
        // the model, which is already dataset-compliant. Kept terminology
        // means kept identifier sets, so the merge is suppressed too.
        if (!keep_model_terminology) {
            for (const auto& p : src->properties) {
                if (const PropertyDef* existing = target->find_property(p.name)) {
                    if (existing->kind == PropertyKind::Data && p.kind == PropertyKind::Data &&
                        existing->datatype != p.datatype)
                        out.warnings.push_back("property '" + p.name + "' on '" + target->id +
                                               "': ontology datatype differs; keeping model datatype");
                    continue;
                }
                PropertyDef merged = p;
                if (merged.kind == PropertyKind::Object &&
                    !out.final_etg.find_etype(*merged.range_etype))
                    continue;  // range outside the final ETG; do not import dangling links
                target->add_property(merged);
                out.provenance.properties[target->id][merged.name] =
                    ProvenanceEntry{top.ontology_id, source, preds.front().score, false};
            }
        }
        out.provenance.etypes[target->id] = entry;
    }
    if (!keep_model_terminology) {
        std::sort(out.final_etg.etypes.begin(), out.final_etg.etypes.end(),
                  [](const EType& a, const EType& b) { return a.id < b.id; });
    }
    out.adopted_fraction = adoptable == 0 ? 0.0
                                          : static_cast<double>(adopted) /
                                                static_cast<double>(adoptable);

    const auto validation = validate_etg(out.final_etg);
    if (!validation.empty())
        throw Error("alignment produced an invalid ETG: " + validation.front().rule + " on " +
                    validation.front().subject);
    const auto orphans = orphaned_attributes(matches, out.final_etg, out.provenance.renames);
    if (!orphans.empty()) {
        std::string msg = "alignment compliance failed; orphaned attributes:";
        for (const auto& o : orphans) msg += "\n  " + o;
        throw Error(msg);
    }
    return out;
}

struct CleaningReport {
    std::string dataset_id;
    std::map<std::string, std::size_t> rejected_by_column;  // attribute -> blanked cells
    std::vector<std::string> dropped_attributes;
    std::size_t total_rejections = 0;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

inline std::string dmy_to_iso(const std::string& s) {
    return s.substr(6, 4) + "-" + s.substr(3, 2) + "-" + s.substr(0, 2);
}

/// Re-encodes one cell to the property datatype; nullopt means unmappable.
inline std::optional<std::string> clean_cell(const std::string& cell, Datatype datatype) {
    switch (datatype) {
        case Datatype::String: return cell;
        case Datatype::Integer: {
            const std::string t = trim(cell);
            if (lex::is_integer(t)) return t;
            return std::nullopt;
        }
        case Datatype::Decimal: {
            const std::string t = trim(cell);
            if (lex::is_decimal(t)) return t;
            return std::nullopt;
        }
        case Datatype::Date: {
            const std::string t = trim(cell);
            if (lex::is_iso_date(t)) return t;
            if (lex::is_dmy_date(t)) return dmy_to_iso(t);
            return std::nullopt;
        }
        case Datatype::Boolean: {
            const std::string t = trim(cell);
            if (t == "true" || t == "True" || t == "TRUE" || t == "1") return "true";
            if (t == "false" || t == "False" || t == "FALSE" || t == "0") return "false";
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Aligns a dataset's cells with the ETG datatypes: dates become ISO 8601,
/// numerics are trimmed, booleans normalized. Unmappable cells are blanked
/// and counted; attributes that no spec maps, keys or links are dropped.
inline std::pair<Dataset, CleaningReport> clean_dataset(const Dataset& ds, const Etg& etg,
                                                        const std::vector<MappingSpec>& specs) {
    std::map<std::string, Datatype> target;  // raw attribute name -> datatype
    std::set<std::string> used;              // raw attribute names kept in the cleaned copy
    for (const auto& spec : specs) {
        if (spec.dataset_id != ds.schema.dataset_id) continue;
        const EType* etype = etg.find_etype(spec.target_etype);
        if (!etype)
            throw Error("cleaning '" + ds.schema.dataset_id + "': etype '" + spec.target_etype +
                        "' is not in the ETG");
        for (const auto& [attr, prop] : spec.attribute_map) {
            const PropertyDef* def = etype->find_property(prop);
            if (!def || def->kind != PropertyKind::Data)
                throw Error("cleaning '" + ds.schema.dataset_id + "': mapping references absent property '" +
                            prop + "' on etype '" + spec.target_etype + "'");
            used.insert(attr);
            target.emplace(attr, *def->datatype);
        }
        for (const auto& k : spec.key) used.insert(k);
        for (const auto& rule : spec.link_rules)
            for (const auto& k : rule.target_key) used.insert(k);
    }

    Dataset cleaned;
    cleaned.schema.dataset_id = ds.schema.dataset_id;
    CleaningReport report;
    report.dataset_id = ds.schema.dataset_id;
    for (const auto& attr : ds.schema.attributes) {
        if (used.count(attr.raw_name)) cleaned.schema.attributes.push_back(attr);
        else report.dropped_attributes.push_back(attr.raw_name);
    }
    for (const auto& row : ds.rows) {
        std::map<std::string, std::string> out_row;
        for (const auto& attr : cleaned.schema.attributes) {
            auto it = row.find(attr.raw_name);
            const std::string cell = it == row.end() ? std::string() : it->second;
            if (cell.empty()) {
                out_row[attr.raw_name] = "";
                continue;
            }
            auto dt = target.find(attr.raw_name);
            if (dt == target.end()) {
                out_row[attr.raw_name] = cell;  // key- or link-only attribute, kept verbatim
                continue;
            }
            auto cleaned_cell = detail::clean_cell(cell, dt->second);
            if (cleaned_cell) {
                out_row[attr.raw_name] = *cleaned_cell;
            } else {
                out_row[attr.raw_name] = "";
                ++report.rejected_by_column[attr.name];
                ++report.total_rejections;
            }
        }
        cleaned.rows.push_back(std::move(out_row));
    }
    return {std::move(cleaned), std::move(report)};
}

}  // namespace itelos
