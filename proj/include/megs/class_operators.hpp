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
 * EPR and GHZ^k class operators.
 *
 * Every class operator is a Kronecker product over the m subsystems. Inactive
 * subsystems carry the identity. Active subsystems carry an elementary block:
 * the (k,l)/(l,k) entries of the single-subsystem complement at canonical
 * phase pi/2 (an embedded sigma_y, "Y") or pi (an embedded sigma_x, "X").
 * An EPR operator has Y blocks on its pair. A GHZ^k operator has Y blocks on
 * two members of its subset and X blocks on the remaining k-2.
 *
 * Which (k,l) pair each active subsystem uses is the lambda multi-index.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "megs/errors.hpp"
#include "megs/labels.hpp"
#include "megs/multilinear.hpp"
#include "megs/phase_povm.hpp"

namespace megs {

/// Basis-index pair k < l of one subsystem.
struct IndexPair {
    std::size_t k = 0;
    std::size_t l = 0;
    friend auto operator<=>(const IndexPair &, const IndexPair &) = default;
};

/// Two subsystems a < b.
struct SubsystemPair {
    std::size_t a = 0;
    std::size_t b = 0;
    friend auto operator<=>(const SubsystemPair &, const SubsystemPair &) = default;
};

/// One IndexPair per active subsystem, listed in increasing subsystem order.
struct LambdaIndex {
    std::vector<std::size_t> subsystems;
    std::vector<IndexPair> pairs;

    [[nodiscard]] std::size_t size() const noexcept { return pairs.size(); }

    /// Pair used on subsystem j; DomainError if j is not active.
    [[nodiscard]] IndexPair at(std::size_t j) const {
        const auto it = std::find(subsystems.begin(), subsystems.end(), j);
        if (it == subsystems.end()) {
            throw DomainError("lambda has no index pair for subsystem " + std::to_string(j));
        }
        return pairs[static_cast<std::size_t>(it - subsystems.begin())];
    }

    friend auto operator<=>(const LambdaIndex &, const LambdaIndex &) = default;
};

struct ClassOperator {
    ComplexMatrix matrix;
    std::vector<std::size_t> dims;
    ClassLabel label;
    LambdaIndex lambda;
    /// Subsystems carrying the pi/2 blocks (equal to the pair for EPR).
    SubsystemPair pi_half_pair;
};

/// dim x dim matrix holding one pair of off-diagonal entries of the
/// canonical complement: HalfPi gives (k,l) = -i, (l,k) = +i; Pi gives
/// (k,l) = (l,k) = 1.
inline ComplexMatrix elementary_block(std::size_t dim, IndexPair pair, PhaseKind kind) {
    if (!(pair.k < pair.l && pair.l < dim)) {
        throw DomainError("elementary_block: need k < l < " + std::to_string(dim) +
                          ", got (" + std::to_string(pair.k) + "," + std::to_string(pair.l) +
                          ")");
    }
    ComplexMatrix block(dim, dim);
    if (kind == PhaseKind::HalfPi) {
        block(pair.k, pair.l) = cplx{0.0, -1.0};
        block(pair.l, pair.k) = cplx{0.0, 1.0};
    } else {
        block(pair.k, pair.l) = 1.0;
        block(pair.l, pair.k) = 1.0;
    }
    return block;
}

namespace detail {

inline void require_dims(std::span<const std::size_t> dims) {
    if (dims.empty()) {
        throw DomainError("class operator: empty dimension vector");
    }
    if (dims.size() > kMaxLabelSubsystems) {
        throw DomainError("class operator: too many subsystems");
    }
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (dims[j] < 2) {
            throw DomainError("class operator: subsystem " + std::to_string(j) +
                              " has dimension < 2");
        }
    }
}

inline void require_lambda(std::span<const std::size_t> dims, const ClassLabel &label,
                           const LambdaIndex &lambda) {
    const auto subset = label.subset();
    if (lambda.subsystems != subset || lambda.pairs.size() != subset.size()) {
        throw DomainError("lambda must hold exactly one index pair per subsystem of " +
                          label.to_string());
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const IndexPair p = lambda.pairs[i];
        if (!(p.k < p.l && p.l < dims[subset[i]])) {
            throw DomainError("lambda pair (" + std::to_string(p.k) + "," +
                              std::to_string(p.l) + ") invalid for subsystem " +
                              std::to_string(subset[i]) + " of dimension " +
                              std::to_string(dims[subset[i]]));
        }
    }
}

/// Kronecker product of identity / elementary blocks.
inline ComplexMatrix assemble(std::span<const std::size_t> dims, const ClassLabel &label,
                              const LambdaIndex &lambda, SubsystemPair pi_half,
                              std::size_t cap) {
    const std::size_t total = total_dimension(dims);
    if (total > cap) {
        throw CapacityError("class operator on total dimension " + std::to_string(total) +
                            " exceeds the dense cap " + std::to_string(cap));
    }
    std::vector<ComplexMatrix> factors;
    factors.reserve(dims.size());
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (!label.contains(j)) {
            factors.push_back(ComplexMatrix::identity(dims[j]));
        } else {
            const PhaseKind kind =
                (j == pi_half.a || j == pi_half.b) ? PhaseKind::HalfPi : PhaseKind::Pi;
            factors.push_back(elementary_block(dims[j], lambda.at(j), kind));
        }
    }
    return kron_all(factors, cap);
}

/// All index pairs k < l below n, lexicographic.
inline std::vector<IndexPair> index_pairs(std::size_t n) {
    std::vector<IndexPair> out;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            out.push_back({k, l});
        }
    }
    return out;
}

} // namespace detail

/// Identity everywhere except Y blocks at subsystems r1 < r2.
inline ClassOperator epr_operator(std::span<const std::size_t> dims, SubsystemPair pair,
                                  const LambdaIndex &lambda,
                                  std::size_t cap = kDefaultDenseCap) {
    detail::require_dims(dims);
    if (!(pair.a < pair.b && pair.b < dims.size())) {
        throw DomainError("epr_operator: need subsystems r1 < r2 < " +
                          std::to_string(dims.size()));
    }
    const ClassLabel label = ClassLabel::epr(pair.a, pair.b);
    detail::require_lambda(dims, label, lambda);
    return {detail::assemble(dims, label, lambda, pair, cap),
            {dims.begin(), dims.end()}, label, lambda, pair};
}

/// Y blocks at pi_half.a and pi_half.b, X blocks on the rest of `subset`,
/// identity elsewhere.
inline ClassOperator ghz_operator(std::span<const std::size_t> dims,
                                  std::span<const std::size_t> subset, SubsystemPair pi_half,
                                  const LambdaIndex &lambda,
                                  std::size_t cap = kDefaultDenseCap) {
    detail::require_dims(dims);
    const ClassLabel label = ClassLabel::ghz(subset);
    label.validate(dims.size());
    if (!(pi_half.a < pi_half.b && label.contains(pi_half.a) && label.contains(pi_half.b))) {
        throw DomainError("ghz_operator: pi/2 pair (" + std::to_string(pi_half.a) + "," +
                          std::to_string(pi_half.b) + ") must be an ordered pair inside " +
                          label.to_string());
    }
    detail::require_lambda(dims, label, lambda);
    return {detail::assemble(dims, label, lambda, pi_half, cap),
            {dims.begin(), dims.end()}, label, lambda, pi_half};
}

/// Strict upper and strict lower triangular parts of an EPR operator.
struct TriangularSplit {
    ComplexMatrix upper;
    ComplexMatrix lower;
};

inline TriangularSplit split_anti_diagonal(const ClassOperator &op) {
    if (op.label.kind() != ClassKind::Epr) {
        throw DomainError("split_anti_diagonal: " + op.label.to_string() +
                          " is not an EPR operator");
    }
    const ComplexMatrix &m = op.matrix;
    TriangularSplit out{ComplexMatrix(m.rows(), m.cols()), ComplexMatrix(m.rows(), m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != cplx{}) {
            throw DomainError("split_anti_diagonal: operator has a nonzero diagonal");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > i) {
                out.upper(i, j) = m(i, j);
            } else if (j < i) {
                out.lower(i, j) = m(i, j);
            }
        }
    }
    return out;
}

/// Number of sign components of a GHZ^k operator: 2^(k-1).
inline std::size_t sign_component_count(const ClassLabel &label) {
    return std::size_t{1} << (label.size() - 1);
}

/// Splits a GHZ operator by the sign signature of its joint phase.
///
/// A nonzero entry (row, col) picks, on each active subsystem j, either the
/// (k_j, l_j) element (sign +) or the (l_j, k_j) element (sign -). The
/// Hermitian partner (col, row) has the opposite signature. Component i
/// collects the signatures whose first active subsystem is + and whose
/// remaining active subsystems spell i in binary (most significant bit
/// first, 1 = -), together with their negations.
inline std::vector<ComplexMatrix> split_sign_components(const ClassOperator &op) {
    const std::span<const std::size_t> dims = op.dims;
    if (op.label.kind() != ClassKind::Ghz) {
        throw DomainError("split_sign_components: " + op.label.to_string() +
                          " is not a GHZ operator; use split_anti_diagonal");
    }
    detail::require_dims(dims);
    op.label.validate(dims.size());
    detail::require_lambda(dims, op.label, op.lambda);
    const std::size_t total = total_dimension(dims);
    if (op.matrix.rows() != total || op.matrix.cols() != total) {
        throw DomainError("split_sign_components: operator shape does not match dims");
    }

    const auto active = op.label.subset();
    const std::size_t k = active.size();
    std::vector<ComplexMatrix> parts(sign_component_count(op.label),
                                     ComplexMatrix(total, total));
    for (std::size_t row = 0; row < total; ++row) {
        const auto rmulti = multi_index(row, dims);
        for (std::size_t col = 0; col < total; ++col) {
            const cplx value = op.matrix(row, col);
            if (value == cplx{}) {
                continue;
            }
            const auto cmulti = multi_index(col, dims);
            // minus[i] is true when active subsystem i uses (l, k).
            std::vector<bool> minus(k);
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t j = active[i];
                const IndexPair p = op.lambda.pairs[i];
                if (rmulti[j] == p.k && cmulti[j] == p.l) {
                    minus[i] = false;
                } else if (rmulti[j] == p.l && cmulti[j] == p.k) {
                    minus[i] = true;
                } else {
                    throw DomainError("split_sign_components: operator is not in "
                                      "single-pair form");
                }
            }
            for (std::size_t j = 0; j < dims.size(); ++j) {
                if (!op.label.contains(j) && rmulti[j] != cmulti[j]) {
                    throw DomainError("split_sign_components: operator is not in "
                                      "single-pair form");
                }
            }
            const bool flip = minus[0];
            std::size_t index = 0;
            for (std::size_t i = 1; i < k; ++i) {
                index = (index << 1) | static_cast<std::size_t>(minus[i] != flip);
            }
            parts[index](row, col) = value;
        }
    }
    return parts;
}

/// Number of operators enumerate_class_operators returns.
inline std::size_t class_operator_count(std::span<const std::size_t> dims,
                                        const ClassLabel &label) {
    detail::require_dims(dims);
    label.validate(dims.size());
    std::size_t count = label.kind() == ClassKind::Epr ? 1 : label.size() * (label.size() - 1) / 2;
    for (const std::size_t j : label.subset()) {
        count *= dims[j] * (dims[j] - 1) / 2;
    }
    return count;
}

/// Visits every operator of a class in lexicographic (pi_half_pair, lambda)
/// order without holding more than one dense matrix at a time.
inline void for_each_class_operator(std::span<const std::size_t> dims,
                                    const ClassLabel &label,
                                    const std::function<void(const ClassOperator &)> &visit,
                                    std::size_t cap = kDefaultDenseCap) {
    detail::require_dims(dims);
    label.validate(dims.size());
    const auto subset = label.subset();

    std::vector<SubsystemPair> placements;
    if (label.kind() == ClassKind::Epr) {
        placements.push_back({subset[0], subset[1]});
    } else {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            for (std::size_t j = i + 1; j < subset.size(); ++j) {
                placements.push_back({subset[i], subset[j]});
            }
        }
    }

    std::vector<std::vector<IndexPair>> choices;
    choices.reserve(subset.size());
    for (const std::size_t j : subset) {
        choices.push_back(detail::index_pairs(dims[j]));
    }

    for (const SubsystemPair &placement : placements) {
        // Odometer over the per-subsystem pair lists, last subsystem fastest.
        std::vector<std::size_t> digit(subset.size(), 0);
        bool done = false;
        while (!done) {
            LambdaIndex lambda{subset, {}};
            lambda.pairs.reserve(subset.size());
            for (std::size_t i = 0; i < subset.size(); ++i) {
                lambda.pairs.push_back(choices[i][digit[i]]);
            }
            const ClassOperator op{detail::assemble(dims, label, lambda, placement, cap),
                                   {dims.begin(), dims.end()}, label, std::move(lambda),
                                   placement};
            visit(op);

            std::size_t i = subset.size();
            while (true) {
                if (i == 0) {
                    done = true;
                    break;
                }
                --i;
                if (++digit[i] < choices[i].size()) {
                    break;
                }
                digit[i] = 0;
            }
        }
    }
}

/// Every operator of a class, ordered lexicographically by
/// (pi_half_pair, lambda).
inline std::vector<ClassOperator> enumerate_class_operators(std::span<const std::size_t> dims,
                                                            const ClassLabel &label,
                                                            std::size_t cap = kDefaultDenseCap) {
    std::vector<ClassOperator> out;
    out.reserve(class_operator_count(dims, label));
    for_each_class_operator(
        dims, label, [&](const ClassOperator &op) { out.push_back(op); }, cap);
    return out;
}

} // namespace megs
