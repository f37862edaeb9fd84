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
 * Concurrence classes of a pure multipartite state.
 *
 * The value of a class is the root-sum-square, over every operator the class
 * enumerates, of the bilinear expectation <Psi*|O|Psi>. With the conjugated
 * bra the EPR value of a two-qubit state is 2|a00 a11 - a01 a10|, the
 * Wootters concurrence. The W-class value aggregates all EPR classes and the
 * total aggregates every class in the catalog, both root-sum-square.
 */
#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "megs/class_operators.hpp"
#include "megs/errors.hpp"
#include "megs/labels.hpp"
#include "megs/megs_catalog.hpp"
#include "megs/multilinear.hpp"

namespace megs {

struct ConcurrenceOptions {
    /// Multiplies every class value.
    double scale = 1.0;
    /// Evaluate scratch (unnormalized) states instead of rejecting them.
    bool allow_unnormalized = false;
    std::size_t dense_cap = kDefaultDenseCap;
};

/// Bilinear value of one class operator, optionally with the values of its
/// U/L (EPR) or P_i (GHZ) parts, which sum to `value`.
struct OperatorValue {
    SubsystemPair pi_half_pair;
    LambdaIndex lambda;
    cplx value;
    std::vector<cplx> parts;
};

struct ConcurrenceReport {
    std::map<ClassLabel, double> per_class;
    double w_class = 0.0;
    double total = 0.0;
    std::string state_digest;
};

/// FNV-1a over the dimension vector and the bit patterns of the amplitudes.
inline std::string state_digest(const MultiState &psi) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto mix = [&h](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(psi.num_subsystems());
    for (const std::size_t n : psi.dims()) {
        mix(n);
    }
    for (const cplx &z : psi.amps()) {
        mix(std::bit_cast<std::uint64_t>(z.real()));
        mix(std::bit_cast<std::uint64_t>(z.imag()));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace detail {

inline void require_evaluable(const MultiState &psi, const ClassLabel &label,
                              const ConcurrenceOptions &opts) {
    if (!psi.is_normalized() && !opts.allow_unnormalized) {
        throw DomainError("concurrence: state is not normalized");
    }
    label.validate(psi.num_subsystems());
    if (psi.dimension() > opts.dense_cap) {
        throw CapacityError("concurrence: state dimension " + std::to_string(psi.dimension()) +
                            " exceeds the dense cap " + std::to_string(opts.dense_cap));
    }
}

} // namespace detail

/// Per-operator bilinear values of a class, in enumeration order.
inline std::vector<OperatorValue> class_operator_values(const MultiState &psi,
                                                        const ClassLabel &label,
                                                        const ConcurrenceOptions &opts = {},
                                                        bool with_parts = false) {
    detail::require_evaluable(psi, label, opts);
    std::vector<OperatorValue> out;
    for_each_class_operator(
        psi.dims(), label,
        [&](const ClassOperator &op) {
            OperatorValue v{op.pi_half_pair, op.lambda, bilinear_expectation(psi, op.matrix), {}};
            if (with_parts) {
                if (label.kind() == ClassKind::Epr) {
                    const auto split = split_anti_diagonal(op);
                    v.parts.push_back(bilinear_expectation(psi, split.upper));
                    v.parts.push_back(bilinear_expectation(psi, split.lower));
                } else {
                    for (const auto &part : split_sign_components(op)) {
                        v.parts.push_back(bilinear_expectation(psi, part));
                    }
                }
            }
            out.push_back(std::move(v));
        },
        opts.dense_cap);
    return out;
}

/// scale * sqrt(sum over the class's operators of |<Psi*|O|Psi>|^2).
inline double class_concurrence(const MultiState &psi, const ClassLabel &label,
                                const ConcurrenceOptions &opts = {}) {
    detail::require_evaluable(psi, label, opts);
    double sum = 0.0;
    for_each_class_operator(
        psi.dims(), label,
        [&](const ClassOperator &op) { sum += std::norm(bilinear_expectation(psi, op.matrix)); },
        opts.dense_cap);
    return opts.scale * std::sqrt(sum);
}

/// Root-sum-square of the EPR values over all C(m,2) pairs.
inline double w_class_concurrence(const MultiState &psi, const ConcurrenceOptions &opts = {}) {
    const std::size_t m = psi.num_subsystems();
    if (m < 2) {
        throw DomainError("w_class_concurrence: need at least 2 subsystems");
    }
    double sum = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const double c = class_concurrence(psi, ClassLabel::epr(a, b), opts);
            sum += c * c;
        }
    }
    return std::sqrt(sum);
}

/// Every catalog class for m = psi.num_subsystems(), plus the aggregates.
inline ConcurrenceReport full_report(const MultiState &psi,
                                     const ConcurrenceOptions &opts = {}) {
    ConcurrenceReport report;
    report.state_digest = state_digest(psi);
    const auto catalog = enumerate_megs(psi.num_subsystems());
    double w_sum = 0.0;
    double total_sum = 0.0;
    for (const ClassLabel &label : catalog.labels) {
        const double c = class_concurrence(psi, label, opts);
        report.per_class.emplace(label, c);
        total_sum += c * c;
        if (label.kind() == ClassKind::Epr) {
            w_sum += c * c;
        }
    }
    report.w_class = std::sqrt(w_sum);
    report.total = std::sqrt(total_sum);
    return report;
}

} // namespace megs
