// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace itelos {

/// Splits an identifier into lowercase tokens at underscores, hyphens,
/// spaces and camelCase boundaries. "countriesAndTerritories" becomes
/// {"countries", "and", "territories"}; acronym runs stay together, so
/// "number_of_RSA_case" becomes {"number", "of", "rsa", "case"}.
inline std::vector<std::string> id_tokens(std::string_view raw) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };
    const auto upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
    const auto lower_or_digit = [](char c) {
        return std::islower(static_cast<unsigned char>(c)) != 0 ||
               std::isdigit(static_cast<unsigned char>(c)) != 0;
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '_' || c == '-' || c == ' ') {
            flush();
            continue;
        }
        if (upper(c)) {
            const bool after_lower = i > 0 && lower_or_digit(raw[i - 1]);
            const bool acronym_end = i > 0 && upper(raw[i - 1]) && i + 1 < raw.size() &&
                                     std::islower(static_cast<unsigned char>(raw[i + 1])) != 0;
            if (after_lower || acronym_end) flush();
        }
        current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    flush();
    return tokens;
}

/// Canonical identifier: tokens rejoined with single underscores.
/// Idempotent; no stemming or singularization.
inline std::string canon(std::string_view raw) {
    std::string out;
    for (const auto& tok : id_tokens(raw)) {
        if (!out.empty()) out.push_back('_');
        out += tok;
    }
    return out;
}

/// FNV-1a over the key cell values, separated so that ("ab","c") and
/// ("a","bc") hash differently. Stable across runs and platforms.
inline std::uint64_t fnv1a(const std::vector<std::string>& parts) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](unsigned char b) {
        h ^= b;
        h *= 1099511628211ULL;
    };
    for (const auto& part : parts) {
        for (char c : part) mix(static_cast<unsigned char>(c));
        mix(0x1f);
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

inline constexpr const char* kDefaultBaseUri = "urn:eg:";

/// Entity identifiers are `urn:eg:<etype>:<key-hash>`; the hash is over the
/// ordered key cell values so re-runs produce identical ids.
inline std::string entity_id(std::string_view etype, const std::vector<std::string>& key_values) {
    std::string id = kDefaultBaseUri;
    id += etype;
    id += ':';
    id += hex64(fnv1a(key_values));
    return id;
}

}  // namespace itelos
