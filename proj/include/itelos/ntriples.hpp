// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "itelos/model.hpp"

namespace itelos {
namespace nt {

inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kXsdPrefix = "http://www.w3.org/2001/XMLSchema#";

inline std::string xsd_iri(Datatype d) {
    std::string iri = kXsdPrefix;
    switch (d) {
        case Datatype::Integer: iri += "integer"; break;
        case Datatype::Decimal: iri += "decimal"; break;
        case Datatype::Boolean: iri += "boolean"; break;
        case Datatype::Date: iri += "date"; break;
        case Datatype::String: iri += "string"; break;
    }
    return iri;
}

inline std::string escape_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04X", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

inline std::string unescape_literal(std::string_view s, std::size_t line_no) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out.push_back(s[i]);
            continue;
        }
        if (i + 1 >= s.size())
            throw Error("N-Triples line " + std::to_string(line_no) + ": dangling escape");
        const char e = s[++i];
        switch (e) {
            case '"': out.push_back('"'); break;
            case '\\': out.push_back('\\'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            case 't': out.push_back('\t'); break;
            case 'u': {
                if (i + 4 >= s.size())
                    throw Error("N-Triples line " + std::to_string(line_no) + ": bad \\u escape");
                unsigned code = 0;
                for (int k = 0; k < 4; ++k) {
                    const char h = s[++i];
                    code <<= 4;
                    if (h >= '0' && h <= '9') code |= static_cast<unsigned>(h - '0');
                    else if (h >= 'a' && h <= 'f') code |= static_cast<unsigned>(h - 'a' + 10);
                    else if (h >= 'A' && h <= 'F') code |= static_cast<unsigned>(h - 'A' + 10);
                    else
                        throw Error("N-Triples line " + std::to_string(line_no) +
                                    ": bad \\u escape");
                }
                if (code < 0x80) {
                    out.push_back(static_cast<char>(code));
                } else {
                    // two-byte UTF-8 is enough for the BMP below 0x800
                    out.push_back(static_cast<char>(0xC0 | (code >> 6)));
                    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
                }
                break;
            }
            default:
                throw Error("N-Triples line " + std::to_string(line_no) + ": unknown escape \\" +
                            std::string(1, e));
        }
    }
    return out;
}

struct Term {
    enum Kind { Iri, Literal } kind = Iri;
    std::string value;     // IRI text or literal lexical form
    std::string datatype;  // literal datatype IRI, empty for plain literals
};

struct Triple {
    std::string subject;
    std::string predicate;
    Term object;
};

inline Triple parse_line(std::string_view line, std::size_t line_no) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> Error {
        return Error("N-Triples line " + std::to_string(line_no) + ": " + why);
    };
    auto skip_ws = [&] {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    };
    auto read_iri = [&]() -> std::string {
        if (pos >= line.size() || line[pos] != '<') throw fail("expected IRI");
        const std::size_t end = line.find('>', pos);
        if (end == std::string_view::npos) throw fail("unterminated IRI");
        std::string iri(line.substr(pos + 1, end - pos - 1));
        pos = end + 1;
        return iri;
    };

    Triple t;
    skip_ws();
    t.subject = read_iri();
    skip_ws();
    t.predicate = read_iri();
    skip_ws();
    if (pos < line.size() && line[pos] == '<') {
        t.object.kind = Term::Iri;
        t.object.value = read_iri();
    } else if (pos < line.size() && line[pos] == '"') {
        std::size_t end = pos + 1;
        while (end < line.size()) {
            if (line[end] == '\\') {
                end += 2;
                continue;
            }
            if (line[end] == '"') break;
            ++end;
        }
        if (end >= line.size()) throw fail("unterminated literal");
        t.object.kind = Term::Literal;
        t.object.value = unescape_literal(line.substr(pos + 1, end - pos - 1), line_no);
        pos = end + 1;
        if (pos + 1 < line.size() && line[pos] == '^' && line[pos + 1] == '^') {
            pos += 2;
            t.object.datatype = read_iri();
        }
    } else {
        throw fail("expected IRI or literal object");
    }
    skip_ws();
    if (pos >= line.size() || line[pos] != '.') throw fail("missing terminating '.'");
    ++pos;
    skip_ws();
    if (pos != line.size()) throw fail("trailing content after '.'");
    return t;
}

}  // namespace nt

/// Rebases an id from the in-memory `urn:eg:` prefix onto the export base.
inline std::string rebase_id(std::string_view id, std::string_view base) {
    if (base == kDefaultBaseUri) return std::string(id);
    std::string out(base);
    out += id.substr(std::string_view(kDefaultBaseUri).size());
    return out;
}

/// One triple per entity type assertion, data value and link; lines sorted
/// lexicographically so equal EGs serialize byte-identically.
inline std::string serialize_eg_ntriples(const Eg& eg, std::string_view base = kDefaultBaseUri) {
    std::vector<std::string> lines;
    auto etype_iri = [&](std::string_view id) {
        return std::string(base) + "schema:etype:" + std::string(id);
    };
    auto property_iri = [&](std::string_view name) {
        return std::string(base) + "schema:property:" + std::string(name);
    };
    for (const auto& [id, entity] : eg.entities) {
        const std::string subject = "<" + rebase_id(id, base) + ">";
        lines.push_back(subject + " <" + nt::kRdfType + "> <" + etype_iri(entity.etype) + "> .");
        for (const auto& [prop, value] : entity.values) {
            std::string object = "\"" + nt::escape_literal(value.lexical) + "\"";
            if (value.datatype != Datatype::String)
                object += "^^<" + nt::xsd_iri(value.datatype) + ">";
            lines.push_back(subject + " <" + property_iri(prop) + "> " + object + " .");
        }
        for (const auto& [prop, target] : entity.links)
            lines.push_back(subject + " <" + property_iri(prop) + "> <" + rebase_id(target, base) +
                            "> .");
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out.push_back('\n');
    }
    return out;
}

/// Parses a canonical N-Triples export back into an EG over the given
/// schema. Isomorphic to the serialized EG: same ids, values and links.
inline Eg parse_eg_ntriples(std::string_view text, const Etg& schema,
                            std::string_view base = kDefaultBaseUri) {
    Eg eg;
    eg.schema = schema;
    const std::string etype_prefix = std::string(base) + "schema:etype:";
    const std::string property_prefix = std::string(base) + "schema:property:";

    auto local_id = [&](const std::string& iri, std::size_t line_no) {
        if (iri.rfind(base, 0) != 0)
            throw Error("N-Triples line " + std::to_string(line_no) + ": IRI '" + iri +
                        "' is outside base '" + std::string(base) + "'");
        return std::string(kDefaultBaseUri) + iri.substr(base.size());
    };

    std::vector<std::pair<std::size_t, nt::Triple>> triples;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank && line[line.find_first_not_of(" \t")] != '#')
            triples.emplace_back(line_no, nt::parse_line(line, line_no));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }

    // first pass: entity declarations via rdf:type
    for (const auto& [ln, t] : triples) {
        if (t.predicate != nt::kRdfType) continue;
        if (t.object.kind != nt::Term::Iri)
            throw Error("N-Triples line " + std::to_string(ln) + ": rdf:type object must be an IRI");
        if (t.object.value.rfind(etype_prefix, 0) != 0)
            throw Error("N-Triples line " + std::to_string(ln) + ": '" + t.object.value +
                        "' is not an etype IRI");
        const std::string etype = t.object.value.substr(etype_prefix.size());
        if (!schema.find_etype(etype))
            throw Error("N-Triples line " + std::to_string(ln) + ": etype '" + etype +
                        "' is absent from the schema");
        Entity& e = eg.entities[local_id(t.subject, ln)];
        e.id = local_id(t.subject, ln);
        e.etype = etype;
    }

    // second pass: values and links
    for (const auto& [ln, t] : triples) {
        if (t.predicate == nt::kRdfType) continue;
        if (t.predicate.rfind(property_prefix, 0) != 0)
            throw Error("N-Triples line " + std::to_string(ln) + ": predicate '" + t.predicate +
                        "' is not a property IRI");
        const std::string prop = t.predicate.substr(property_prefix.size());
        auto it = eg.entities.find(local_id(t.subject, ln));
        if (it == eg.entities.end())
            throw Error("N-Triples line " + std::to_string(ln) + ": subject has no rdf:type triple");
        Entity& e = it->second;
        const EType* etype = schema.find_etype(e.etype);
        const PropertyDef* def = etype ? etype->find_property(prop) : nullptr;
        if (!def)
            throw Error("N-Triples line " + std::to_string(ln) + ": property '" + prop +
                        "' is absent from the schema of etype '" + e.etype + "'");
        if (t.object.kind == nt::Term::Iri) {
            if (def->kind != PropertyKind::Object)
                throw Error("N-Triples line " + std::to_string(ln) + ": IRI object under a data property");
            e.links.insert({prop, local_id(t.object.value, ln)});
        } else {
            if (def->kind != PropertyKind::Data)
                throw Error("N-Triples line " + std::to_string(ln) + ": literal under an object property");
            e.values[prop] = TypedValue{*def->datatype, t.object.value};
        }
    }
    return eg;
}

}  // namespace itelos
