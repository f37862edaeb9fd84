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
 * ClassLabel: names one element of the minimal entanglement generating set,
 * either an EPR class over a pair of subsystems or a GHZ^k class over a
 * k-subset (k >= 3). Subsystems are 0-based.
 *
 * A label is stored as the bit mask of its subset; the kind follows from the
 * subset size, so catalogs of a million labels stay compact.
 */
#pragma once

#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "megs/errors.hpp"

namespace megs {

/// Largest subsystem count a label can address.
inline constexpr std::size_t kMaxLabelSubsystems = 32;

enum class ClassKind : std::uint8_t { Epr, Ghz };

namespace detail {
struct LabelAccess;
} // namespace detail

class ClassLabel {
  public:
    static ClassLabel epr(std::size_t a, std::size_t b) {
        if (a == b) {
            throw DomainError("EPR label needs two distinct subsystems");
        }
        return ClassLabel(bit(a) | bit(b));
    }

    /// GHZ^k over `subset` (any order, must be distinct, k >= 3).
    static ClassLabel ghz(std::span<const std::size_t> subset) {
        std::uint32_t mask = 0;
        for (const std::size_t j : subset) {
            if ((mask & bit(j)) != 0) {
                throw DomainError("GHZ label has repeated subsystem " + std::to_string(j));
            }
            mask |= bit(j);
        }
        if (subset.size() < 3) {
            throw DomainError("GHZ label needs at least 3 subsystems, got " +
                              std::to_string(subset.size()));
        }
        return ClassLabel(mask);
    }

    static ClassLabel ghz(std::initializer_list<std::size_t> subset) {
        return ghz(std::span<const std::size_t>(subset.begin(), subset.size()));
    }

    /// Label of the natural kind for a subset: EPR for 2, GHZ for >= 3.
    static ClassLabel from_mask(std::uint32_t mask) {
        if (std::popcount(mask) < 2) {
            throw DomainError("class label needs at least 2 subsystems");
        }
        return ClassLabel(mask);
    }

    [[nodiscard]] ClassKind kind() const noexcept {
        return std::popcount(mask_) == 2 ? ClassKind::Epr : ClassKind::Ghz;
    }
    [[nodiscard]] std::uint32_t mask() const noexcept { return mask_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(std::popcount(mask_));
    }
    [[nodiscard]] bool contains(std::size_t j) const noexcept {
        return j < kMaxLabelSubsystems && (mask_ >> j & 1U) != 0;
    }
    /// Largest subsystem index referenced.
    [[nodiscard]] std::size_t max_index() const noexcept {
        return static_cast<std::size_t>(31 - std::countl_zero(mask_));
    }

    /// Sorted subsystem indices.
    [[nodiscard]] std::vector<std::size_t> subset() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
        }
        return out;
    }

    /// Throws DomainError unless every index is below m.
    void validate(std::size_t m) const {
        if (max_index() >= m) {
            throw DomainError("label " + to_string() + " references subsystem " +
                              std::to_string(max_index()) + " but the system has only " +
                              std::to_string(m) + " subsystems");
        }
    }

    /// "EPR(0,1)" or "GHZ3(0,1,2)".
    [[nodiscard]] std::string to_string() const {
        std::string out = kind() == ClassKind::Epr ? "EPR(" : "GHZ" + std::to_string(size()) + "(";
        bool first = true;
        for (const std::size_t j : subset()) {
            if (!first) {
                out += ',';
            }
            out += std::to_string(j);
            first = false;
        }
        out += ')';
        return out;
    }

    /// Canonical catalog order: EPR before GHZ, then by subset size, then
    /// lexicographically by sorted subset.
    friend std::strong_ordering operator<=>(const ClassLabel &a, const ClassLabel &b) {
        if (a.size() != b.size()) {
            return a.size() <=> b.size();
        }
        // Lexicographic order of sorted subsets equals descending order of the
        // bit-reversed masks.
        return bit_reverse(b.mask_) <=> bit_reverse(a.mask_);
    }
    friend bool operator==(const ClassLabel &, const ClassLabel &) = default;

  private:
    friend struct detail::LabelAccess;

    explicit ClassLabel(std::uint32_t mask) : mask_(mask) {}

    static std::uint32_t bit(std::size_t j) {
        if (j >= kMaxLabelSubsystems) {
            throw DomainError("subsystem index " + std::to_string(j) + " exceeds " +
                              std::to_string(kMaxLabelSubsystems - 1));
        }
        return std::uint32_t{1} << j;
    }

    static constexpr std::uint32_t bit_reverse(std::uint32_t x) {
        x = ((x >> 1) & 0x55555555U) | ((x & 0x55555555U) << 1);
        x = ((x >> 2) & 0x33333333U) | ((x & 0x33333333U) << 2);
        x = ((x >> 4) & 0x0f0f0f0fU) | ((x & 0x0f0f0f0fU) << 4);
        x = ((x >> 8) & 0x00ff00ffU) | ((x & 0x00ff00ffU) << 8);
        return (x >> 16) | (x << 16);
    }

    std::uint32_t mask_;
};

namespace detail {

/// Unchecked construction for bulk catalog generation; the caller guarantees
/// at least two bits are set.
struct LabelAccess {
    static ClassLabel make(std::uint32_t mask) noexcept { return ClassLabel(mask); }
};

} // namespace detail

/// Parses "EPR(0,1)", "GHZ3(0,1,2)" or "GHZ(0,1,2)"; case-insensitive,
/// whitespace ignored. A GHZ size digit must match the subset size.
inline ClassLabel parse_label(std::string_view text) {
    std::string s;
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) {
            s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    const auto fail = [&](const std::string &why) -> DomainError {
        return DomainError("cannot parse class label '" + std::string(text) + "': " + why);
    };
    const auto open = s.find('(');
    if (open == std::string::npos || s.empty() || s.back() != ')') {
        throw fail("expected KIND(i,j,...)");
    }
    const std::string head = s.substr(0, open);
    const std::string body = s.substr(open + 1, s.size() - open - 2);

    std::vector<std::size_t> subset;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto comma = body.find(',', pos);
        const std::string item =
            body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty() ||
            item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
            throw fail("bad subsystem index '" + item + "'");
        }
        subset.push_back(static_cast<std::size_t>(std::stoul(item)));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }

    if (head == "EPR") {
        if (subset.size() != 2) {
            throw fail("EPR takes exactly two subsystems");
        }
        return ClassLabel::epr(subset[0], subset[1]);
    }
    if (head.rfind("GHZ", 0) == 0) {
        const std::string digits = head.substr(3);
        if (!digits.empty()) {
            if (digits.find_first_not_of("0123456789") != std::string::npos ||
                digits.size() > 3 || std::stoul(digits) != subset.size()) {
                throw fail("GHZ size does not match the number of subsystems");
            }
        }
        return ClassLabel::ghz(subset);
    }
    throw fail("unknown class kind '" + head + "'");
}

} // namespace megs
