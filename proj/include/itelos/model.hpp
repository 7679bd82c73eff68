// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itelos/ids.hpp"

namespace itelos {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Reusability category. The order is the processing order: most reusable
/// first.
enum class Category { Common = 0, Core = 1, Contextual = 2 };

inline const char* to_string(Category c) {
    switch (c) {
        case Category::Common: return "Common";
        case Category::Core: return "Core";
        case Category::Contextual: return "Contextual";
    }
    return "?";
}

inline std::optional<Category> category_from_string(std::string_view s) {
    if (s == "Common" || s == "common") return Category::Common;
    if (s == "Core" || s == "core") return Category::Core;
    if (s == "Contextual" || s == "contextual") return Category::Contextual;
    return std::nullopt;
}

enum class Datatype { String, Integer, Decimal, Boolean, Date };

inline const char* to_string(Datatype d) {
    switch (d) {
        case Datatype::String: return "string";
        case Datatype::Integer: return "integer";
        case Datatype::Decimal: return "decimal";
        case Datatype::Boolean: return "boolean";
        case Datatype::Date: return "date";
    }
    return "?";
}

inline std::optional<Datatype> datatype_from_string(std::string_view s) {
    if (s == "string") return Datatype::String;
    if (s == "integer") return Datatype::Integer;
    if (s == "decimal") return Datatype::Decimal;
    if (s == "boolean") return Datatype::Boolean;
    if (s == "date") return Datatype::Date;
    return std::nullopt;
}

enum class PropertyKind { Data, Object };

namespace lex {

inline bool is_integer(std::string_view s) {
    std::size_t i = (s.starts_with('+') || s.starts_with('-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline bool is_decimal(std::string_view s) {
    std::size_t i = (s.starts_with('+') || s.starts_with('-')) ? 1 : 0;
    bool digits = false, dot = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (dot) return false;
            dot = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digits = true;
        } else {
            return false;
        }
    }
    return digits;
}

inline bool is_iso_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return false;
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

/// DD/MM/YYYY, the second accepted input pattern; cleaning rewrites it to ISO.
inline bool is_dmy_date(std::string_view s) {
    if (s.size() != 10 || s[2] != '/' || s[5] != '/') return false;
    for (std::size_t i : {0u, 1u, 3u, 4u, 6u, 7u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return false;
    const int day = (s[0] - '0') * 10 + (s[1] - '0');
    const int month = (s[3] - '0') * 10 + (s[4] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

inline bool is_boolean(std::string_view s) {
    return s == "true" || s == "false" || s == "0" || s == "1" ||
           s == "True" || s == "False" || s == "TRUE" || s == "FALSE";
}

/// Conformance against the datatype lattice: integer fits decimal, nothing
/// else coerces implicitly.
inline bool compatible(Datatype d, std::string_view s) {
    switch (d) {
        case Datatype::String: return true;
        case Datatype::Integer: return is_integer(s);
        case Datatype::Decimal: return is_decimal(s);
        case Datatype::Boolean: return s == "true" || s == "false";
        case Datatype::Date: return is_iso_date(s);
    }
    return false;
}

}  // namespace lex

struct PropertyDef {
    std::string name;  // canonical
    PropertyKind kind = PropertyKind::Data;
    std::optional<Datatype> datatype;       // data kind only
    std::optional<std::string> range_etype; // object kind only
    Category category = Category::Contextual;

    static PropertyDef data(std::string name, Datatype dt, Category cat) {
        PropertyDef p;
        p.name = std::move(name);
        p.kind = PropertyKind::Data;
        p.datatype = dt;
        p.category = cat;
        return p;
    }
    static PropertyDef object(std::string name, std::string range, Category cat) {
        PropertyDef p;
        p.name = std::move(name);
        p.kind = PropertyKind::Object;
        p.range_etype = std::move(range);
        p.category = cat;
        return p;
    }

    friend bool operator==(const PropertyDef& a, const PropertyDef& b) {
        return a.name == b.name && a.kind == b.kind && a.datatype == b.datatype &&
               a.range_etype == b.range_etype && a.category == b.category;
    }
};

struct EtypeProvenance {
    bool from_ontology = false;
    std::string source;  // ontology id when from_ontology
};

struct EType {
    std::string id;    // canonical
    std::string name;  // display
    Category category = Category::Contextual;
    std::vector<PropertyDef> properties;  // kept sorted by name
    EtypeProvenance provenance;

    const PropertyDef* find_property(std::string_view prop) const {
        for (const auto& p : properties)
            if (p.name == prop) return &p;
        return nullptr;
    }

    void add_property(PropertyDef def) {
        if (find_property(def.name)) return;
        properties.push_back(std::move(def));
        std::sort(properties.begin(), properties.end(),
                  [](const PropertyDef& a, const PropertyDef& b) { return a.name < b.name; });
    }

    std::set<std::string> property_names() const {
        std::set<std::string> out;
        for (const auto& p : properties) out.insert(p.name);
        return out;
    }
};

/// Structural equality, ignoring provenance bookkeeping.
inline bool structurally_equal(const EType& a, const EType& b) {
    return a.id == b.id && a.name == b.name && a.category == b.category &&
           a.properties == b.properties;
}

/// Schema-level graph: nodes are etypes, object properties define the links
/// the entity graph may use.
struct Etg {
    std::string name;
    std::vector<EType> etypes;  // kept sorted by id

    const EType* find_etype(std::string_view id) const {
        for (const auto& e : etypes)
            if (e.id == id) return &e;
        return nullptr;
    }
    EType* find_etype(std::string_view id) {
        for (auto& e : etypes)
            if (e.id == id) return &e;
        return nullptr;
    }

    EType& add_etype(EType e) {
        if (auto* existing = find_etype(e.id)) return *existing;
        const std::string id = e.id;
        etypes.push_back(std::move(e));
        std::sort(etypes.begin(), etypes.end(),
                  [](const EType& a, const EType& b) { return a.id < b.id; });
        return *find_etype(id);
    }

    std::set<std::string> etype_ids() const {
        std::set<std::string> out;
        for (const auto& e : etypes) out.insert(e.id);
        return out;
    }

    /// Union of all property names across etypes (flat element view).
    std::set<std::string> property_names() const {
        std::set<std::string> out;
        for (const auto& e : etypes)
            for (const auto& p : e.properties) out.insert(p.name);
        return out;
    }
};

inline bool same_etypes(const Etg& a, const Etg& b) {
    if (a.etypes.size() != b.etypes.size()) return false;
    for (std::size_t i = 0; i < a.etypes.size(); ++i)
        if (!structurally_equal(a.etypes[i], b.etypes[i])) return false;
    return true;
}

inline bool structurally_equal(const Etg& a, const Etg& b) {
    return a.name == b.name && same_etypes(a, b);
}

struct TypedValue {
    Datatype datatype = Datatype::String;
    std::string lexical;

    friend bool operator==(const TypedValue& a, const TypedValue& b) {
        return a.datatype == b.datatype && a.lexical == b.lexical;
    }
    friend bool operator!=(const TypedValue& a, const TypedValue& b) { return !(a == b); }
};

struct Entity {
    std::string id;     // urn:eg:<etype>:<key-hash>
    std::string etype;  // canonical etype id
    std::map<std::string, TypedValue> values;
    std::set<std::pair<std::string, std::string>> links;  // (object property, target id)
    std::map<std::string, std::string> value_sources;     // property -> dataset id (not serialized)
};

struct ValueConflict {
    std::string entity_id;
    std::string property;
    std::string value_kept;
    std::string value_other;
    std::string source_kept;
    std::string source_other;

    friend bool operator==(const ValueConflict& a, const ValueConflict& b) {
        return a.entity_id == b.entity_id && a.property == b.property &&
               a.value_kept == b.value_kept && a.value_other == b.value_other &&
               a.source_kept == b.source_kept && a.source_other == b.source_other;
    }
};

/// Data-level graph plus its schema and the contradiction log accumulated
/// while integrating datasets.
struct Eg {
    Etg schema;
    std::map<std::string, Entity> entities;  // id -> entity, deterministically ordered
    std::vector<ValueConflict> conflicts;

    bool has_conflict(const ValueConflict& c) const {
        return std::find(conflicts.begin(), conflicts.end(), c) != conflicts.end();
    }
    /// Identical tuples are recorded once, so re-reading identical data never
    /// grows the log.
    void log_conflict(ValueConflict c) {
        if (!has_conflict(c)) conflicts.push_back(std::move(c));
    }
};

enum class Comparator { Eq, Lt, Gt, Contains };

inline std::optional<Comparator> comparator_from_string(std::string_view s) {
    if (s == "=") return Comparator::Eq;
    if (s == "<") return Comparator::Lt;
    if (s == ">") return Comparator::Gt;
    if (s == "contains") return Comparator::Contains;
    return std::nullopt;
}

inline const char* to_string(Comparator c) {
    switch (c) {
        case Comparator::Eq: return "=";
        case Comparator::Lt: return "<";
        case Comparator::Gt: return ">";
        case Comparator::Contains: return "contains";
    }
    return "?";
}

struct QueryFilter {
    std::string etype;     // canonical
    std::string property;  // canonical
    Comparator op = Comparator::Eq;
    std::string literal;
};

struct RequiredProperty {
    std::string etype;     // canonical
    std::string property;  // canonical
};

struct CompetencyQuery {
    int id = 0;
    std::string question;
    std::string action;
    Category category = Category::Contextual;
    std::vector<std::string> target_etypes;  // canonical, non-empty
    std::vector<RequiredProperty> required_properties;
    std::vector<QueryFilter> filters;
};

struct GateThresholds {
    double theta_a_cov = 0.7;
    double theta_b_ext_min = 0.1;
    double theta_b_ext_max = 0.6;
    double theta_c_spr = 0.2;
    double theta_d_core = 1.0;
    double theta_d_all = 0.8;
    double etr_match = 0.5;
};

struct EtrWeights {
    double name = 0.5;
    double property = 0.5;
};

struct RelationOverride {
    std::string from;  // canonical etype
    std::string to;    // canonical etype
    std::string name;  // canonical object property name
};

/// The a-priori purpose: competency queries, resource references and the
/// metric boundaries that gate each phase.
struct Purpose {
    std::string description;
    std::vector<CompetencyQuery> cqs;
    std::vector<std::string> dataset_refs;
    std::vector<std::string> ontology_refs;
    GateThresholds thresholds;
    EtrWeights etr_weights;
    std::vector<RelationOverride> relations;
    bool keep_model_terminology = false;
    std::map<std::string, std::string> display_names;  // canonical -> first authored spelling
};

enum class ElementKind { Etypes, Properties };

/// Operand of the coverage/extensiveness/sparsity metrics: a homogeneous set
/// of canonical etype or property identifiers.
struct ElementSet {
    ElementKind kind = ElementKind::Etypes;
    std::set<std::string> members;

    static ElementSet etypes(std::set<std::string> m) {
        return {ElementKind::Etypes, std::move(m)};
    }
    static ElementSet properties(std::set<std::string> m) {
        return {ElementKind::Properties, std::move(m)};
    }

    void insert(std::string_view raw) { members.insert(canon(raw)); }
    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

struct ValidationIssue {
    std::string subject;   // etype id or entity id
    std::string property;  // may be empty
    std::string rule;
    std::string message;
};

using ValidationReport = std::vector<ValidationIssue>;

/// Empty report iff the ETG invariants hold; violations are data, not errors.
inline ValidationReport validate_etg(const Etg& etg) {
    ValidationReport report;
    std::set<std::string> seen_ids;
    for (const auto& e : etg.etypes) {
        if (!seen_ids.insert(e.id).second)
            report.push_back({e.id, "", "duplicate-etype", "etype id is not unique"});
        std::set<std::string> seen_props;
        for (const auto& p : e.properties) {
            if (!seen_props.insert(p.name).second)
                report.push_back({e.id, p.name, "duplicate-property",
                                  "property name is not unique within etype"});
            if (p.kind == PropertyKind::Data) {
                if (!p.datatype)
                    report.push_back({e.id, p.name, "missing-datatype",
                                      "data property has no datatype"});
                if (p.range_etype)
                    report.push_back({e.id, p.name, "unexpected-range",
                                      "data property must not declare a range etype"});
            } else {
                if (!p.range_etype)
                    report.push_back({e.id, p.name, "missing-range",
                                      "object property has no range etype"});
                if (p.datatype)
                    report.push_back({e.id, p.name, "unexpected-datatype",
                                      "object property must not declare a datatype"});
                if (p.range_etype && !etg.find_etype(*p.range_etype))
                    report.push_back({e.id, p.name, "dangling-range",
                                      "range etype '" + *p.range_etype + "' is not in the ETG"});
            }
        }
    }
    return report;
}

/// Empty report iff every entity conforms to the schema and all link targets
/// resolve inside the EG.
inline ValidationReport validate_eg(const Eg& eg) {
    ValidationReport report;
    for (const auto& [id, entity] : eg.entities) {
        const EType* etype = eg.schema.find_etype(entity.etype);
        if (!etype) {
            report.push_back({id, "", "unknown-etype",
                              "entity etype '" + entity.etype + "' is not in the schema"});
            continue;
        }
        for (const auto& [prop, value] : entity.values) {
            const PropertyDef* def = etype->find_property(prop);
            if (!def) {
                report.push_back({id, prop, "undeclared-property",
                                  "value for property not declared on etype '" + entity.etype + "'"});
                continue;
            }
            if (def->kind != PropertyKind::Data) {
                report.push_back({id, prop, "kind-mismatch",
                                  "data value stored under an object property"});
                continue;
            }
            const Datatype want = *def->datatype;
            const bool ok = lex::compatible(want, value.lexical) ||
                            (want == Datatype::Decimal && lex::is_integer(value.lexical));
            if (!ok)
                report.push_back({id, prop, "datatype-mismatch",
                                  "value '" + value.lexical + "' does not conform to " +
                                      to_string(want)});
        }
        for (const auto& [prop, target] : entity.links) {
            const PropertyDef* def = etype->find_property(prop);
            if (!def) {
                report.push_back({id, prop, "undeclared-property",
                                  "link property not declared on etype '" + entity.etype + "'"});
                continue;
            }
            if (def->kind != PropertyKind::Object) {
                report.push_back({id, prop, "kind-mismatch",
                                  "link stored under a data property"});
                continue;
            }
            auto it = eg.entities.find(target);
            if (it == eg.entities.end()) {
                report.push_back({id, prop, "dangling-link",
                                  "link target '" + target + "' is not in the EG"});
                continue;
            }
            if (def->range_etype && it->second.etype != *def->range_etype)
                report.push_back({id, prop, "range-mismatch",
                                  "link target etype '" + it->second.etype +
                                      "' differs from declared range '" + *def->range_etype + "'"});
        }
    }
    return report;
}

}  // namespace itelos
