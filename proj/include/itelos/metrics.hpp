// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <stdexcept>

#include "itelos/model.hpp"
#include "itelos/ratio.hpp"
#include "itelos/similarity.hpp"

namespace itelos {
namespace detail {

inline void require_same_kind(const ElementSet& a, const ElementSet& b) {
    if (a.kind != b.kind)
        throw std::invalid_argument("element sets have different kinds");
}

}  // namespace detail

/// Cov = |a∩b| / |a|. How appropriate the element set `b` is for the purpose
/// set `a`. Empty `a` covers vacuously.
inline Ratio coverage(const ElementSet& a, const ElementSet& b) {
    detail::require_same_kind(a, b);
    if (a.empty()) return Ratio::one();
    const auto inter = static_cast<std::int64_t>(intersection_size(a.members, b.members));
    return Ratio{inter, static_cast<std::int64_t>(a.size())};
}

/// Ext = (|b| − |a∩b|) / |a∪b|. The proportional amount of knowledge `b`
/// adds beyond `a`. Both empty → 0.
inline Ratio extensiveness(const ElementSet& a, const ElementSet& b) {
    detail::require_same_kind(a, b);
    const auto inter = static_cast<std::int64_t>(intersection_size(a.members, b.members));
    const auto uni = static_cast<std::int64_t>(a.size() + b.size()) - inter;
    if (uni == 0) return Ratio::zero();
    return Ratio{static_cast<std::int64_t>(b.size()) - inter, uni};
}

/// Spr = (|a| + |b| − 2|a∩b|) / |a∪b|. Element-level difference between two
/// similar sets. Both empty → 0.
inline Ratio sparsity(const ElementSet& a, const ElementSet& b) {
    detail::require_same_kind(a, b);
    const auto inter = static_cast<std::int64_t>(intersection_size(a.members, b.members));
    const auto uni = static_cast<std::int64_t>(a.size() + b.size()) - inter;
    if (uni == 0) return Ratio::zero();
    return Ratio{static_cast<std::int64_t>(a.size() + b.size()) - 2 * inter, uni};
}

}  // namespace itelos
