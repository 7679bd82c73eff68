// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "itelos/ids.hpp"

namespace itelos {

inline std::size_t levenshtein(std::string_view a, std::string_view b) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

inline double levenshtein_similarity(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t longest = std::max(a.size(), b.size());
    return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

inline std::size_t intersection_size(const std::set<std::string>& a,
                                     const std::set<std::string>& b) {
    std::size_t n = 0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& x : small) n += large.count(x);
    return n;
}

/// |A∩B| / min(|A|,|B|): lets a short open-data column name hit a long CQ
/// property name.
inline double token_containment(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    return static_cast<double>(intersection_size(a, b)) /
           static_cast<double>(std::min(a.size(), b.size()));
}

inline double token_jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t inter = intersection_size(a, b);
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

struct NameSimilarity {
    double containment = 0;
    double jaccard = 0;
    double levenshtein = 0;

    double score() const { return std::max({containment, jaccard, levenshtein}); }
};

/// Name similarity between two identifiers, computed over their canonical
/// token sets and joined canonical strings.
inline NameSimilarity name_similarity(std::string_view a, std::string_view b) {
    const auto ta = id_tokens(a);
    const auto tb = id_tokens(b);
    const std::set<std::string> sa(ta.begin(), ta.end());
    const std::set<std::string> sb(tb.begin(), tb.end());
    NameSimilarity sim;
    sim.containment = token_containment(sa, sb);
    sim.jaccard = token_jaccard(sa, sb);
    sim.levenshtein = levenshtein_similarity(canon(a), canon(b));
    return sim;
}

}  // namespace itelos
