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

#include <complex>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "megs/class_operators.hpp"
#include "megs/megs_catalog.hpp"
#include "oracle.hpp"

namespace {

using megs::ClassLabel;
using megs::ComplexMatrix;
using megs::cplx;
using megs::IndexPair;
using megs::LambdaIndex;
using megs::PhaseKind;
using Dims = std::vector<std::size_t>;

ComplexMatrix from_oracle(const megs_oracle::Mat &m) {
    ComplexMatrix out(m.size(), m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
    return out;
}

LambdaIndex qubit_lambda(const std::vector<std::size_t> &subset) {
    return {subset, std::vector<IndexPair>(subset.size(), IndexPair{0, 1})};
}

const auto X = megs_oracle::pauli_x();
const auto Y = megs_oracle::pauli_y();
const auto I2 = megs_oracle::ident(2);

TEST(ElementaryBlock, Examples) {
    EXPECT_EQ(megs::elementary_block(2, {0, 1}, PhaseKind::Pi), from_oracle(X));
    EXPECT_EQ(megs::elementary_block(2, {0, 1}, PhaseKind::HalfPi), from_oracle(Y));
    const auto b = megs::elementary_block(3, {0, 2}, PhaseKind::Pi);
    EXPECT_EQ(b.nonzero_count(), 2U);
    EXPECT_EQ(b(0, 2), cplx(1.0));
    EXPECT_EQ(b(2, 0), cplx(1.0));
    EXPECT_THROW(megs::elementary_block(3, {2, 1}, PhaseKind::Pi), megs::DomainError);
    EXPECT_THROW(megs::elementary_block(3, {1, 3}, PhaseKind::Pi), megs::DomainError);
}

TEST(ElementaryBlock, SumReproducesCanonicalComplement) {
    for (const std::size_t dim : {2U, 3U, 4U}) {
        for (const auto kind : {PhaseKind::HalfPi, PhaseKind::Pi}) {
            ComplexMatrix sum(dim, dim);
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t l = k + 1; l < dim; ++l)
                    sum += megs::elementary_block(dim, {k, l}, kind);
            EXPECT_LT(sum.max_abs_diff(megs::complement(megs::canonical_phases(dim, kind))),
                      1e-15);
        }
    }
}

TEST(EprOperator, Examples) {
    const auto op = megs::epr_operator(Dims{2, 2}, {0, 1}, qubit_lambda({0, 1}));
    EXPECT_EQ(op.matrix, from_oracle(megs_oracle::kron(Y, Y)));
    EXPECT_EQ(op.label, ClassLabel::epr(0, 1));

    const auto op3 = megs::epr_operator(Dims{2, 2, 2}, {0, 1}, qubit_lambda({0, 1}));
    EXPECT_EQ(op3.matrix, from_oracle(megs_oracle::kron_chain({Y, Y, I2})));

    const auto q = megs::epr_operator(Dims{3, 3}, {0, 1}, qubit_lambda({0, 1}));
    EXPECT_EQ(q.matrix.nonzero_count(), 4U);
    for (const auto &z : q.matrix.data()) {
        if (z != cplx{}) {
            EXPECT_EQ(std::abs(z), 1.0);
        }
    }
}

TEST(EprOperator, Errors) {
    EXPECT_THROW(megs::epr_operator(Dims{2, 2}, {1, 0}, qubit_lambda({0, 1})), megs::DomainError);
    EXPECT_THROW(megs::epr_operator(Dims{2, 2}, {0, 2}, qubit_lambda({0, 2})), megs::DomainError);
    EXPECT_THROW(megs::epr_operator(Dims{2, 2, 2}, {0, 1}, qubit_lambda({0, 2})),
                 megs::DomainError);
    EXPECT_THROW(megs::epr_operator(Dims{2, 2}, {0, 1}, LambdaIndex{{0, 1}, {{0, 1}, {0, 2}}}),
                 megs::DomainError);
    EXPECT_THROW(megs::epr_operator(Dims{64, 64, 2}, {0, 1}, qubit_lambda({0, 1})),
                 megs::CapacityError);
}

TEST(EprOperator, LambdaSumMatchesMultipartiteComplement) {
    const Dims dims{3, 2, 3};
    ComplexMatrix sum(18, 18);
    for (const auto &op : megs::enumerate_class_operators(dims, ClassLabel::epr(0, 2)))
        sum += op.matrix;
    const auto y3 = megs::complement(megs::canonical_phases(3, PhaseKind::HalfPi));
    const auto expected =
        megs::kron(megs::kron(y3, ComplexMatrix::identity(2)), y3);
    EXPECT_LT(sum.max_abs_diff(expected), 1e-15);
}

TEST(SplitAntiDiagonal, Examples) {
    const auto op = megs::epr_operator(Dims{2, 2}, {0, 1}, qubit_lambda({0, 1}));
    const auto [u, l] = megs::split_anti_diagonal(op);
    EXPECT_EQ(u.nonzero_count(), 2U);
    EXPECT_EQ(u(0, 3), cplx(-1.0));
    EXPECT_EQ(u(1, 2), cplx(1.0));
    EXPECT_EQ(l, u.adjoint());
    EXPECT_EQ(u + l, op.matrix);

    const auto op3 = megs::epr_operator(Dims{2, 2, 2}, {0, 1}, qubit_lambda({0, 1}));
    const auto s3 = megs::split_anti_diagonal(op3);
    EXPECT_EQ(s3.upper.nonzero_count(), 4U);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j <= i; ++j) EXPECT_EQ(s3.upper(i, j), cplx(0.0));

    const auto ghz = megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 2}, {0, 1},
                                        qubit_lambda({0, 1, 2}));
    EXPECT_THROW(megs::split_anti_diagonal(ghz), megs::DomainError);
}

TEST(GhzOperator, Examples) {
    const auto a = megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 2}, {0, 1}, qubit_lambda({0, 1, 2}));
    EXPECT_EQ(a.matrix, from_oracle(megs_oracle::kron_chain({Y, Y, X})));
    EXPECT_EQ(a.matrix.nonzero_count(), 8U);

    const auto b = megs::ghz_operator(Dims{2, 2, 2, 2}, Dims{0, 1, 2}, {0, 1},
                                      qubit_lambda({0, 1, 2}));
    EXPECT_EQ(b.matrix, from_oracle(megs_oracle::kron_chain({Y, Y, X, I2})));

    const auto c = megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 2}, {1, 2}, qubit_lambda({0, 1, 2}));
    EXPECT_EQ(c.matrix, from_oracle(megs_oracle::kron_chain({X, Y, Y})));

    // Inactive subsystem in the middle keeps its position.
    const auto d = megs::ghz_operator(Dims{2, 2, 2, 2}, Dims{0, 2, 3}, {2, 3},
                                      qubit_lambda({0, 2, 3}));
    EXPECT_EQ(d.matrix, from_oracle(megs_oracle::kron_chain({X, I2, Y, Y})));
}

TEST(GhzOperator, Errors) {
    EXPECT_THROW(megs::ghz_operator(Dims{2, 2}, Dims{0, 1}, {0, 1}, qubit_lambda({0, 1})),
                 megs::DomainError);
    EXPECT_THROW(megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 2}, {0, 3}, qubit_lambda({0, 1, 2})),
                 megs::DomainError);
    EXPECT_THROW(megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 2}, {1, 0}, qubit_lambda({0, 1, 2})),
                 megs::DomainError);
    EXPECT_THROW(megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 3}, {0, 1}, qubit_lambda({0, 1, 3})),
                 megs::DomainError);
}

TEST(SplitSignComponents, Examples) {
    const auto op = megs::ghz_operator(Dims{2, 2, 2}, Dims{0, 1, 2}, {0, 1}, qubit_lambda({0, 1, 2}));
    const auto parts = megs::split_sign_components(op);
    ASSERT_EQ(parts.size(), 4U);
    ComplexMatrix sum(8, 8);
    for (const auto &p : parts) {
        EXPECT_EQ(p.nonzero_count(), 2U);
        EXPECT_TRUE(p.is_hermitian());
        sum += p;
    }
    EXPECT_EQ(sum, op.matrix);
    // P_0: all subsystems use (k, l) = (0, 1), i.e. row |000>, col |111>.
    EXPECT_NE(parts[0](0, 7), cplx(0.0));
    EXPECT_NE(parts[0](7, 0), cplx(0.0));

    const auto epr = megs::epr_operator(Dims{2, 2}, {0, 1}, qubit_lambda({0, 1}));
    EXPECT_THROW(megs::split_sign_components(epr), megs::DomainError);

    auto tampered = op;
    tampered.matrix(0, 0) = 1.0;
    EXPECT_THROW(megs::split_sign_components(tampered), megs::DomainError);
}

TEST(SplitSignComponents, InactiveSubsystemsAndQutrits) {
    const Dims dims{3, 2, 2, 3};
    for (const auto &op : megs::enumerate_class_operators(dims, ClassLabel::ghz({0, 1, 3}))) {
        const auto parts = megs::split_sign_components(op);
        ASSERT_EQ(parts.size(), 4U);
        ComplexMatrix sum(36, 36);
        std::size_t nnz = 0;
        for (const auto &p : parts) {
            EXPECT_TRUE(p.is_hermitian());
            EXPECT_EQ(p.nonzero_count(), 2U * 2U);  // x identity on subsystem 2
            nnz += p.nonzero_count();
            sum += p;
        }
        EXPECT_EQ(nnz, op.matrix.nonzero_count());
        EXPECT_EQ(sum, op.matrix);
    }
}

TEST(EnumerateClassOperators, Examples) {
    EXPECT_EQ(megs::enumerate_class_operators(Dims{2, 2}, ClassLabel::epr(0, 1)).size(), 1U);

    const auto ghz = megs::enumerate_class_operators(Dims{2, 2, 2}, ClassLabel::ghz({0, 1, 2}));
    ASSERT_EQ(ghz.size(), 3U);
    EXPECT_EQ(ghz[0].pi_half_pair, (megs::SubsystemPair{0, 1}));
    EXPECT_EQ(ghz[1].pi_half_pair, (megs::SubsystemPair{0, 2}));
    EXPECT_EQ(ghz[2].pi_half_pair, (megs::SubsystemPair{1, 2}));

    const auto q = megs::enumerate_class_operators(Dims{3, 2}, ClassLabel::epr(0, 1));
    ASSERT_EQ(q.size(), 3U);
    EXPECT_EQ(q[0].lambda.pairs[0], (IndexPair{0, 1}));
    EXPECT_EQ(q[1].lambda.pairs[0], (IndexPair{0, 2}));
    EXPECT_EQ(q[2].lambda.pairs[0], (IndexPair{1, 2}));

    EXPECT_THROW(megs::enumerate_class_operators(Dims{2, 2}, ClassLabel::ghz({0, 1, 2})),
                 megs::DomainError);
}

TEST(EnumerateClassOperators, CountFormulaAndOrdering) {
    const std::vector<Dims> systems{{2, 3, 2}, {3, 3, 2, 2}, {4, 2, 3}};
    for (const auto &dims : systems) {
        for (const auto &label : megs::enumerate_megs(dims.size()).labels) {
            std::size_t expected = label.kind() == megs::ClassKind::Epr
                                       ? 1
                                       : label.size() * (label.size() - 1) / 2;
            for (const std::size_t j : label.subset()) expected *= dims[j] * (dims[j] - 1) / 2;
            const auto ops = megs::enumerate_class_operators(dims, label);
            ASSERT_EQ(ops.size(), expected) << label.to_string();
            EXPECT_EQ(megs::class_operator_count(dims, label), expected);
            for (std::size_t i = 1; i < ops.size(); ++i) {
                EXPECT_LT(std::tie(ops[i - 1].pi_half_pair, ops[i - 1].lambda),
                          std::tie(ops[i].pi_half_pair, ops[i].lambda));
            }
        }
    }
}

TEST(ClassOperators, StructuralInvariantsExact) {
    const std::vector<Dims> systems{{2, 2}, {2, 2, 2}, {2, 2, 2, 2}, {3, 2, 2}, {2, 3, 3}};
    for (const auto &dims : systems) {
        for (const auto &label : megs::enumerate_megs(dims.size()).labels) {
            for (const auto &op : megs::enumerate_class_operators(dims, label)) {
                EXPECT_TRUE(op.matrix.is_hermitian(0.0));
                EXPECT_TRUE(op.matrix.is_symmetric(0.0));
                for (std::size_t i = 0; i < op.matrix.rows(); ++i)
                    EXPECT_EQ(op.matrix(i, i), cplx(0.0));
                if (label.kind() == megs::ClassKind::Epr) {
                    const auto [u, l] = megs::split_anti_diagonal(op);
                    EXPECT_EQ(u + l, op.matrix);
                    EXPECT_EQ(l, u.adjoint());
                } else {
                    ComplexMatrix sum(op.matrix.rows(), op.matrix.cols());
                    for (const auto &p : megs::split_sign_components(op)) {
                        EXPECT_TRUE(p.is_hermitian(0.0));
                        sum += p;
                    }
                    EXPECT_EQ(sum, op.matrix);
                }
            }
        }
    }
}

} // namespace
