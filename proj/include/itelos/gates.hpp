// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itelos/inception.hpp"
#include "itelos/metrics.hpp"
#include "itelos/model.hpp"

namespace itelos {

enum class GatePhase { A_inception, B_modeling, C_alignment, D_integration };

inline const char* to_string(GatePhase p) {
    switch (p) {
        case GatePhase::A_inception: return "A_inception";
        case GatePhase::B_modeling: return "B_modeling";
        case GatePhase::C_alignment: return "C_alignment";
        case GatePhase::D_integration: return "D_integration";
    }
    return "?";
}

/// A failed gate sends the process back to the evaluation of the previous
/// phase; a phase-A failure means the purpose itself needs revision.
inline std::string backtrack_target(GatePhase p) {
    switch (p) {
        case GatePhase::A_inception: return "purpose revision";
        case GatePhase::B_modeling: return "A_inception";
        case GatePhase::C_alignment: return "B_modeling";
        case GatePhase::D_integration: return "C_alignment";
    }
    return "?";
}

struct GateVerdict {
    std::string metric;
    double observed = 0;
    std::string requirement;
    bool pass = false;
};

struct GateReport {
    GatePhase phase = GatePhase::A_inception;
    std::map<std::string, double> metric_values;
    std::vector<GateVerdict> verdicts;
    bool pass = false;
    std::string backtrack_to;  // empty on pass

    void finish() {
        pass = std::all_of(verdicts.begin(), verdicts.end(),
                           [](const GateVerdict& v) { return v.pass; });
        backtrack_to = pass ? std::string() : backtrack_target(phase);
    }
};

struct OntologyElements {
    std::string ontology_id;
    ElementSet etypes;
    ElementSet properties;
};

/// Everything the four gates may consume; each phase requires its slice.
struct GateInputs {
    // A: CQ candidates vs dataset matches
    std::optional<CandidateSet> candidates;
    std::optional<std::vector<SchemaMatch>> matches;
    // B: ETG model element sets
    std::optional<ElementSet> model_etypes;
    std::optional<ElementSet> model_properties;
    // C: final ETG element sets vs each reference ontology, plus compliance
    std::optional<ElementSet> final_etypes;
    std::optional<ElementSet> final_properties;
    std::optional<std::vector<OntologyElements>> ontologies;
    std::optional<bool> dataset_compliance;
    // D: answerability fractions over the CQ set
    std::optional<Ratio> answerable_core;
    std::optional<Ratio> answerable_all;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace detail

/// Runs one evaluation gate. Coverage (a) and sparsity (c) are checked at
/// both the etype and the property level with the worse verdict winning;
/// extensiveness (b) is gated on properties, where dataset-driven extension
/// actually shows up, and the etype-level value is reported alongside.
inline GateReport run_gate(GatePhase phase, const GateInputs& in, const GateThresholds& t) {
    GateReport report;
    report.phase = phase;
    auto missing = [&](const char* what) {
        return Error(std::string("gate ") + to_string(phase) + ": missing input: " + what);
    };
    switch (phase) {
        case GatePhase::A_inception: {
            if (!in.candidates) throw missing("candidates");
            if (!in.matches) throw missing("matches");
            ElementSet matched_props = ElementSet::properties({});
            ElementSet matched_etypes = ElementSet::etypes({});
            for (const auto& m : *in.matches) {
                const auto props = m.matched_properties();
                matched_props.members.insert(props.begin(), props.end());
                const auto ets = m.matched_etypes();
                matched_etypes.members.insert(ets.begin(), ets.end());
            }
            const Ratio cov_p = coverage(in.candidates->all_properties(), matched_props);
            const Ratio cov_e = coverage(in.candidates->all_etypes(), matched_etypes);
            report.metric_values["coverage_properties"] = cov_p.value();
            report.metric_values["coverage_etypes"] = cov_e.value();
            report.verdicts.push_back({"coverage_properties", cov_p.value(),
                                       ">= " + detail::fmt(t.theta_a_cov),
                                       cov_p.value() >= t.theta_a_cov});
            report.verdicts.push_back({"coverage_etypes", cov_e.value(),
                                       ">= " + detail::fmt(t.theta_a_cov),
                                       cov_e.value() >= t.theta_a_cov});
            break;
        }
        case GatePhase::B_modeling: {
            if (!in.candidates) throw missing("candidates");
            if (!in.model_etypes || !in.model_properties) throw missing("model element sets");
            const Ratio ext_p = extensiveness(in.candidates->all_properties(), *in.model_properties);
            const Ratio ext_e = extensiveness(in.candidates->all_etypes(), *in.model_etypes);
            report.metric_values["extensiveness_properties"] = ext_p.value();
            report.metric_values["extensiveness_etypes"] = ext_e.value();
            report.verdicts.push_back(
                {"extensiveness_properties", ext_p.value(),
                 "within [" + detail::fmt(t.theta_b_ext_min) + ", " + detail::fmt(t.theta_b_ext_max) + "]",
                 ext_p.value() >= t.theta_b_ext_min && ext_p.value() <= t.theta_b_ext_max});
            break;
        }
        case GatePhase::C_alignment: {
            if (!in.final_etypes || !in.final_properties) throw missing("final ETG element sets");
            if (!in.ontologies) throw missing("ontology element sets");
            if (!in.dataset_compliance) throw missing("dataset compliance");
            for (const auto& o : *in.ontologies) {
                const Ratio spr_p = sparsity(*in.final_properties, o.properties);
                const Ratio spr_e = sparsity(*in.final_etypes, o.etypes);
                report.metric_values["sparsity_properties." + o.ontology_id] = spr_p.value();
                report.metric_values["sparsity_etypes." + o.ontology_id] = spr_e.value();
                report.verdicts.push_back({"sparsity_properties." + o.ontology_id, spr_p.value(),
                                           ">= " + detail::fmt(t.theta_c_spr),
                                           spr_p.value() >= t.theta_c_spr});
                report.verdicts.push_back({"sparsity_etypes." + o.ontology_id, spr_e.value(),
                                           ">= " + detail::fmt(t.theta_c_spr),
                                           spr_e.value() >= t.theta_c_spr});
            }
            report.metric_values["dataset_compliance"] = *in.dataset_compliance ? 1.0 : 0.0;
            report.verdicts.push_back({"dataset_compliance", *in.dataset_compliance ? 1.0 : 0.0,
                                       "= 1", *in.dataset_compliance});
            break;
        }
        case GatePhase::D_integration: {
            if (!in.answerable_core || !in.answerable_all) throw missing("answerability fractions");
            report.metric_values["answerable_core"] = in.answerable_core->value();
            report.metric_values["answerable_all"] = in.answerable_all->value();
            report.verdicts.push_back({"answerable_core", in.answerable_core->value(),
                                       ">= " + detail::fmt(t.theta_d_core),
                                       in.answerable_core->value() >= t.theta_d_core});
            report.verdicts.push_back({"answerable_all", in.answerable_all->value(),
                                       ">= " + detail::fmt(t.theta_d_all),
                                       in.answerable_all->value() >= t.theta_d_all});
            break;
        }
    }
    report.finish();
    return report;
}

struct CqRow {
    std::string entity_id;
    std::vector<std::pair<std::string, std::string>> values;  // required property -> lexical
};

struct CqResult {
    int cq_id = 0;
    bool answerable = false;
    std::size_t row_count = 0;
    std::vector<CqRow> rows;  // ordered by entity id
};

namespace detail {

inline bool filter_holds(const Entity& entity, const QueryFilter& f, int cq_id) {
    auto it = entity.values.find(f.property);
    if (it == entity.values.end()) return false;
    const TypedValue& v = it->second;
    auto fail = [&](const char* why) {
        return Error("CQ " + std::to_string(cq_id) + " filter " + f.etype + "." + f.property +
                     " " + to_string(f.op) + " '" + f.literal + "': " + why);
    };
    const bool numeric = v.datatype == Datatype::Integer || v.datatype == Datatype::Decimal;
    switch (f.op) {
        case Comparator::Eq:
            if (numeric) {
                if (!lex::is_decimal(f.literal)) throw fail("numeric comparison with non-numeric literal");
                return std::strtold(v.lexical.c_str(), nullptr) ==
                       std::strtold(f.literal.c_str(), nullptr);
            }
            return v.lexical == f.literal;
        case Comparator::Lt:
        case Comparator::Gt: {
            if (v.datatype == Datatype::String || v.datatype == Datatype::Boolean)
                throw fail("ordering comparator is not applicable to this datatype");
            double lhs, rhs;
            if (numeric) {
                if (!lex::is_decimal(f.literal)) throw fail("numeric comparison with non-numeric literal");
                lhs = std::strtod(v.lexical.c_str(), nullptr);
                rhs = std::strtod(f.literal.c_str(), nullptr);
            } else {  // dates compare lexicographically in ISO form
                if (!lex::is_iso_date(f.literal)) throw fail("date comparison with non-date literal");
                return f.op == Comparator::Lt ? v.lexical < f.literal : v.lexical > f.literal;
            }
            return f.op == Comparator::Lt ? lhs < rhs : lhs > rhs;
        }
        case Comparator::Contains:
            if (v.datatype != Datatype::String)
                throw fail("'contains' applies to string properties only");
            return v.lexical.find(f.literal) != std::string::npos;
    }
    return false;
}

}  // namespace detail

/// Runs a CQ against the EG. Rows are the entities of the first target etype
/// that carry every required property of that etype and satisfy all filters;
/// filters on other etypes follow one link hop via the object property whose
/// range matches.
inline CqResult execute_cq(const Eg& eg, const CompetencyQuery& cq) {
    CqResult result;
    result.cq_id = cq.id;

    result.answerable = true;
    for (const auto& et : cq.target_etypes)
        if (!eg.schema.find_etype(et)) result.answerable = false;
    for (const auto& rp : cq.required_properties) {
        const EType* e = eg.schema.find_etype(rp.etype);
        if (!e || !e->find_property(rp.property)) result.answerable = false;
    }
    if (!result.answerable) return result;

    const std::string& row_etype = cq.target_etypes.front();
    std::vector<std::string> required_here;
    for (const auto& rp : cq.required_properties)
        if (rp.etype == row_etype) required_here.push_back(rp.property);

    const EType* row_type = eg.schema.find_etype(row_etype);
    for (const auto& [id, entity] : eg.entities) {
        if (entity.etype != row_etype) continue;
        bool ok = true;
        for (const auto& prop : required_here)
            if (!entity.values.count(prop)) ok = false;
        if (!ok) continue;
        for (const auto& f : cq.filters) {
            if (f.etype == row_etype) {
                if (!detail::filter_holds(entity, f, cq.id)) ok = false;
            } else {
                // follow one hop through the object properties whose range
                // matches the filter etype; any satisfying target counts
                bool any = false;
                for (const auto& prop : row_type->properties) {
                    if (prop.kind != PropertyKind::Object || prop.range_etype != f.etype) continue;
                    for (const auto& [link_prop, target] : entity.links) {
                        if (link_prop != prop.name) continue;
                        auto it = eg.entities.find(target);
                        if (it != eg.entities.end() &&
                            detail::filter_holds(it->second, f, cq.id))
                            any = true;
                    }
                }
                if (!any) ok = false;
            }
            if (!ok) break;
        }
        if (!ok) continue;
        CqRow row;
        row.entity_id = id;
        for (const auto& prop : required_here)
            row.values.emplace_back(prop, entity.values.at(prop).lexical);
        result.rows.push_back(std::move(row));
    }
    result.row_count = result.rows.size();
    return result;
}

}  // namespace itelos
