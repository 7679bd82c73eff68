// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "itelos/itelos.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(ITELOS_FIXTURE_DIR) + "/" + name;
}

inline std::string fixture(const std::string& name) {
    return itelos::read_file(fixture_path(name));
}

/// Independent Levenshtein oracle (full-matrix DP, no row reuse).
inline std::size_t lev_oracle(const std::string& a, const std::string& b) {
    std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                            std::vector<std::size_t>(b.size() + 1, 0));
    for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
    for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j)
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                                d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u)});
    return d[a.size()][b.size()];
}

/// Naive single-field CSV split for oracle scans; the fixture CSVs carry no
/// quoting, so this stays independent of the production parser.
inline std::vector<std::vector<std::string>> split_csv_oracle(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    for (char c : text) {
        if (c == ',') {
            row.push_back(field);
            field.clear();
        } else if (c == '\n') {
            row.push_back(field);
            field.clear();
            rows.push_back(row);
            row.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

inline std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::runtime_error("oracle: no column " + name);
}

inline itelos::ElementSet random_set(std::mt19937& rng, itelos::ElementKind kind,
                                     std::size_t max_size = 50) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    std::uniform_int_distribution<int> member_dist(0, 99);
    itelos::ElementSet s;
    s.kind = kind;
    const std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) s.members.insert("e" + std::to_string(member_dist(rng)));
    return s;
}

/// A toy person/company schema used across the integration tests.
inline itelos::Etg toy_etg() {
    using namespace itelos;
    Etg etg;
    etg.name = "toy";
    EType person;
    person.id = "person";
    person.name = "Person";
    person.category = Category::Common;
    person.add_property(PropertyDef::data("name", Datatype::String, Category::Common));
    person.add_property(PropertyDef::data("age", Datatype::Integer, Category::Common));
    person.add_property(PropertyDef::data("phone", Datatype::String, Category::Contextual));
    person.add_property(PropertyDef::object("has_employer", "company", Category::Core));
    etg.add_etype(person);
    EType company;
    company.id = "company";
    company.name = "Company";
    company.category = Category::Core;
    company.add_property(PropertyDef::data("company_name", Datatype::String, Category::Core));
    etg.add_etype(company);
    return etg;
}

inline itelos::Dataset make_dataset(std::string id, std::vector<std::string> columns,
                                    std::vector<std::vector<std::string>> rows) {
    itelos::Dataset ds;
    ds.schema.dataset_id = std::move(id);
    for (const auto& c : columns) {
        itelos::Attribute a;
        a.raw_name = c;
        a.name = itelos::canon(c);
        ds.schema.attributes.push_back(a);
    }
    for (const auto& r : rows) {
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < columns.size(); ++i) row[columns[i]] = r[i];
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

}  // namespace testutil
