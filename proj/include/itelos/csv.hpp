// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itelos/model.hpp"

namespace itelos {

struct Attribute {
    std::string name;      // canonical
    std::string raw_name;  // as in the CSV header
    Datatype inferred_type = Datatype::String;
    Category category = Category::Contextual;
    std::string description;
    std::optional<std::string> etype_hint;  // canonical, from the annotation sidecar
};

struct DatasetSchema {
    std::string dataset_id;
    std::vector<Attribute> attributes;  // CSV column order

    const Attribute* find(std::string_view raw_name) const {
        for (const auto& a : attributes)
            if (a.raw_name == raw_name) return &a;
        return nullptr;
    }
};

struct Dataset {
    DatasetSchema schema;
    std::vector<std::map<std::string, std::string>> rows;  // raw_name -> cell

    std::string cell(std::size_t row, std::string_view raw_name) const {
        auto it = rows[row].find(std::string(raw_name));
        return it == rows[row].end() ? std::string() : it->second;
    }
};

struct ColumnAnnotation {
    Category category = Category::Contextual;
    std::optional<std::string> etype_hint;
    std::string description;
};

using AnnotationMap = std::map<std::string, ColumnAnnotation>;  // raw column name -> annotation

namespace csv {

/// RFC 4180: comma separated, `"` quoting with doubled quotes, CRLF or LF
/// line ends, quoted fields may span lines.
inline std::vector<std::vector<std::string>> parse(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t i = 0;
    auto end_field = [&] {
        record.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(record);
        record.clear();
    };
    while (i < text.size()) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            field.push_back(c);
            ++i;
            continue;
        }
        switch (c) {
            case '"':
                if (!field_started && field.empty()) quoted = true;
                else field.push_back('"');
                field_started = true;
                ++i;
                break;
            case ',':
                end_field();
                ++i;
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
                [[fallthrough]];
            case '\n':
                end_record();
                ++i;
                break;
            default:
                field.push_back(c);
                field_started = true;
                ++i;
                break;
        }
    }
    if (quoted) throw Error("CSV: unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) end_record();
    return records;
}

inline std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string write(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto emit = [&](const std::vector<std::string>& record) {
        for (std::size_t i = 0; i < record.size(); ++i) {
            if (i) out.push_back(',');
            out += quote_if_needed(record[i]);
        }
        out.push_back('\n');
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return out;
}

}  // namespace csv

/// Type inference over the non-empty cells of one column, in fallback order
/// integer, decimal, date, boolean, string. A column with no data stays a
/// string. Permuting the rows cannot change the result.
inline Datatype infer_column_type(const std::vector<std::string>& cells) {
    bool any = false, all_int = true, all_dec = true, all_date = true, all_bool = true;
    for (const auto& c : cells) {
        if (c.empty()) continue;
        any = true;
        all_int = all_int && lex::is_integer(c);
        all_dec = all_dec && lex::is_decimal(c);
        all_date = all_date && (lex::is_iso_date(c) || lex::is_dmy_date(c));
        all_bool = all_bool && lex::is_boolean(c);
    }
    if (!any) return Datatype::String;
    if (all_int) return Datatype::Integer;
    if (all_dec) return Datatype::Decimal;
    if (all_date) return Datatype::Date;
    if (all_bool) return Datatype::Boolean;
    return Datatype::String;
}

/// Parses an annotated CSV into a Dataset: canonical attribute names,
/// inferred column types, rows kept verbatim as strings.
inline Dataset load_dataset_csv(std::string_view text, const AnnotationMap& annotations,
                                std::string dataset_id,
                                std::optional<Category> default_category = std::nullopt) {
    const auto records = csv::parse(text);
    if (records.empty()) throw Error("CSV '" + dataset_id + "': empty input");
    const auto& header = records[0];

    Dataset ds;
    ds.schema.dataset_id = std::move(dataset_id);
    std::set<std::string> seen;
    for (const auto& raw : header) {
        Attribute attr;
        attr.raw_name = raw;
        attr.name = canon(raw);
        if (attr.name.empty())
            throw Error("CSV '" + ds.schema.dataset_id + "': empty column name");
        if (!seen.insert(attr.name).second)
            throw Error("CSV '" + ds.schema.dataset_id + "': duplicate canonical column '" +
                        attr.name + "'");
        auto it = annotations.find(raw);
        if (it != annotations.end()) {
            attr.category = it->second.category;
            attr.description = it->second.description;
            if (it->second.etype_hint) attr.etype_hint = canon(*it->second.etype_hint);
        } else if (default_category) {
            attr.category = *default_category;
        } else {
            throw Error("CSV '" + ds.schema.dataset_id + "': column '" + raw +
                        "' has no annotation and no default category is configured");
        }
        ds.schema.attributes.push_back(std::move(attr));
    }

    std::vector<std::vector<std::string>> columns(header.size());
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() != header.size())
            throw Error("CSV '" + ds.schema.dataset_id + "': ragged row " + std::to_string(r) +
                        " has " + std::to_string(rec.size()) + " fields, expected " +
                        std::to_string(header.size()));
        std::map<std::string, std::string> row;
        for (std::size_t cix = 0; cix < header.size(); ++cix) {
            row[header[cix]] = rec[cix];
            columns[cix].push_back(rec[cix]);
        }
        ds.rows.push_back(std::move(row));
    }
    for (std::size_t cix = 0; cix < header.size(); ++cix)
        ds.schema.attributes[cix].inferred_type = infer_column_type(columns[cix]);
    return ds;
}

}  // namespace itelos
