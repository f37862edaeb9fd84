// Copyright 2026 The megs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * The minimal entanglement generating set for m subsystems: every pair as an
 * EPR class and every k-subset (3 <= k <= m) as a GHZ^k class.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "megs/errors.hpp"
#include "megs/labels.hpp"

namespace megs {

/// Default cap on m for catalog enumeration.
inline constexpr std::size_t kDefaultCatalogCap = 20;

struct MegsCatalog {
    std::size_t m = 0;
    /// EPR pairs lexicographic, then GHZ by (k, lexicographic subset).
    std::vector<ClassLabel> labels;
    /// Subset size -> number of labels of that size.
    std::map<std::size_t, std::size_t> counts;

    [[nodiscard]] std::size_t total() const noexcept { return labels.size(); }
};

/// Binomial coefficient C(n, k), exact for the sizes used here.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

namespace detail {

inline void require_catalog_m(std::size_t m, std::size_t cap) {
    if (m < 2) {
        throw DomainError("MEGS needs m >= 2 subsystems, got " + std::to_string(m));
    }
    if (m > cap || m >= kMaxLabelSubsystems) {
        throw CapacityError("MEGS catalog for m = " + std::to_string(m) +
                            " exceeds the catalog cap " + std::to_string(cap));
    }
}

} // namespace detail

/// counts[k] = C(m, k) for 2 <= k <= m; the values sum to 2^m - m - 1.
inline std::map<std::size_t, std::size_t> megs_counts(std::size_t m,
                                                      std::size_t cap = kDefaultCatalogCap) {
    detail::require_catalog_m(m, cap);
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t k = 2; k <= m; ++k) {
        counts[k] = static_cast<std::size_t>(binomial(m, k));
    }
    return counts;
}

inline MegsCatalog enumerate_megs(std::size_t m, std::size_t cap = kDefaultCatalogCap) {
    MegsCatalog catalog;
    catalog.m = m;
    catalog.counts = megs_counts(m, cap);
    catalog.labels.reserve((std::size_t{1} << m) - m - 1);

    // Let S(j, n) be the lexicographic list of j-subsets of the last n
    // subsystems {m-n, ..., m-1}. S(j, n-1) is a suffix of S(j, n), and
    // S(j, n) is the concatenation over first elements f of
    // {f} + S(j-1, m-1-f). So each level is built by OR-ing one bit into
    // suffixes of the previous level.
    std::vector<std::uint32_t> singles(m);
    for (std::size_t f = 0; f < m; ++f) {
        singles[f] = std::uint32_t{1} << f;
    }
    std::size_t prev_begin = 0;
    for (std::size_t j = 2; j <= m; ++j) {
        const std::size_t prev_size = static_cast<std::size_t>(binomial(m, j - 1));
        const std::size_t begin = catalog.labels.size();
        catalog.labels.insert(catalog.labels.end(), static_cast<std::size_t>(binomial(m, j)),
                              detail::LabelAccess::make(3));
        ClassLabel *out = catalog.labels.data() + begin;
        for (std::size_t f = 0; f + j <= m; ++f) {
            const auto tail = static_cast<std::size_t>(binomial(m - 1 - f, j - 1));
            const std::uint32_t head = std::uint32_t{1} << f;
            const std::size_t from = prev_size - tail;
            if (j == 2) {
                for (std::size_t t = 0; t < tail; ++t) {
                    out[t] = detail::LabelAccess::make(head | singles[from + t]);
                }
            } else {
                const ClassLabel *src = catalog.labels.data() + prev_begin + from;
                for (std::size_t t = 0; t < tail; ++t) {
                    out[t] = detail::LabelAccess::make(head | src[t].mask());
                }
            }
            out += tail;
        }
        prev_begin = begin;
    }
    return catalog;
}

} // namespace megs
