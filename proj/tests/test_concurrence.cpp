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

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "megs/concurrence.hpp"
#include "megs/states.hpp"
#include "oracle.hpp"

namespace {

using megs::ClassLabel;
using megs::cplx;
using megs::MultiState;

std::vector<cplx> amps_of(const MultiState &s) { return {s.amps().begin(), s.amps().end()}; }

TEST(ClassConcurrence, BellState) {
    EXPECT_NEAR(megs::class_concurrence(megs::bell_state(), ClassLabel::epr(0, 1)), 1.0, 1e-12);
}

TEST(ClassConcurrence, ProductBasisStateVanishes) {
    std::vector<cplx> amps(8);
    amps[0] = 1.0;
    const MultiState zero({2, 2, 2}, amps);
    for (const auto &label : megs::enumerate_megs(3).labels) {
        EXPECT_EQ(megs::class_concurrence(zero, label), 0.0);
    }
}

TEST(ClassConcurrence, W3) {
    const auto w = megs::w_state(3);
    const double oracle = megs_oracle::qubit_class_value(amps_of(w), 3, {0, 1});
    EXPECT_NEAR(oracle, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(megs::class_concurrence(w, ClassLabel::epr(0, 1)), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(megs::class_concurrence(w, ClassLabel::ghz({0, 1, 2})), 0.0, 1e-12);
}

TEST(ClassConcurrence, Ghz3) {
    const auto g = megs::ghz_state(3);
    EXPECT_NEAR(megs::class_concurrence(g, ClassLabel::epr(0, 1)), 0.0, 1e-12);
    EXPECT_NEAR(megs_oracle::qubit_class_value(amps_of(g), 3, {0, 1, 2}), std::sqrt(3.0), 1e-10);
    EXPECT_NEAR(megs::class_concurrence(g, ClassLabel::ghz({0, 1, 2})), std::sqrt(3.0), 1e-10);
    const auto values = megs::class_operator_values(g, ClassLabel::ghz({0, 1, 2}));
    ASSERT_EQ(values.size(), 3U);
    for (const auto &v : values) EXPECT_NEAR(std::abs(v.value), 1.0, 1e-12);
}

TEST(ClassConcurrence, Errors) {
    const auto g = megs::ghz_state(3);
    EXPECT_THROW(megs::class_concurrence(g, ClassLabel::epr(0, 3)), megs::DomainError);
    const auto scratch = MultiState::scratch({2, 2}, {1.0, 0.0, 0.0, 1.0});
    EXPECT_THROW(megs::class_concurrence(scratch, ClassLabel::epr(0, 1)), megs::DomainError);
    megs::ConcurrenceOptions small;
    small.dense_cap = 4;
    EXPECT_THROW(megs::class_concurrence(g, ClassLabel::epr(0, 1), small), megs::CapacityError);
}

TEST(ClassConcurrence, ScaleFactor) {
    megs::ConcurrenceOptions opts;
    opts.scale = 0.5;
    EXPECT_NEAR(megs::class_concurrence(megs::bell_state(), ClassLabel::epr(0, 1), opts), 0.5,
                1e-12);
}

TEST(ClassConcurrence, PartsSumToOperatorValue) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = megs::random_state({2, 3, 2}, rng);
        for (const auto &label : megs::enumerate_megs(3).labels) {
            for (const auto &v : megs::class_operator_values(psi, label, {}, true)) {
                cplx sum = 0.0;
                for (const cplx &p : v.parts) sum += p;
                EXPECT_EQ(v.parts.size(), label.kind() == megs::ClassKind::Epr
                                              ? 2U
                                              : megs::sign_component_count(label));
                EXPECT_LT(std::abs(sum - v.value), 1e-12);
            }
        }
    }
}

TEST(WClassConcurrence, Examples) {
    EXPECT_NEAR(megs::w_class_concurrence(megs::w_state(3)), 2.0 / std::sqrt(3.0), 1e-10);
    EXPECT_NEAR(megs::w_class_concurrence(megs::ghz_state(3)), 0.0, 1e-12);
    std::vector<cplx> amps(8);
    amps[0] = 1.0;
    EXPECT_EQ(megs::w_class_concurrence(MultiState({2, 2, 2}, amps)), 0.0);
    EXPECT_THROW(megs::w_class_concurrence(MultiState({2}, {1.0, 0.0})), megs::DomainError);
}

TEST(FullReport, Examples) {
    const auto bell = megs::full_report(megs::bell_state());
    ASSERT_EQ(bell.per_class.size(), 1U);
    EXPECT_NEAR(bell.per_class.at(ClassLabel::epr(0, 1)), 1.0, 1e-12);
    EXPECT_NEAR(bell.total, 1.0, 1e-12);

    std::vector<cplx> amps(16);
    amps[0] = 1.0;
    const auto zero = megs::full_report(MultiState({2, 2, 2, 2}, amps));
    ASSERT_EQ(zero.per_class.size(), 11U);
    for (const auto &[label, value] : zero.per_class) EXPECT_EQ(value, 0.0);

    const auto g4 = megs::full_report(megs::ghz_state(4));
    for (const auto &[label, value] : g4.per_class) {
        if (label.kind() == megs::ClassKind::Epr) {
            EXPECT_NEAR(value, 0.0, 1e-12);
        }
    }
    const double ghz4 = g4.per_class.at(ClassLabel::ghz({0, 1, 2, 3}));
    EXPECT_GT(ghz4, 0.0);
    EXPECT_NEAR(ghz4, megs_oracle::qubit_class_value(amps_of(megs::ghz_state(4)), 4, {0, 1, 2, 3}),
                1e-10);
}

TEST(FullReport, AggregateInvariants) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = megs::random_state({2, 2, 3}, rng);
        const auto r = megs::full_report(psi);
        double total2 = 0.0, w2 = 0.0;
        for (const auto &[label, value] : r.per_class) {
            EXPECT_GE(value, 0.0);
            total2 += value * value;
            if (label.kind() == megs::ClassKind::Epr) w2 += value * value;
        }
        EXPECT_NEAR(r.total * r.total, total2, 1e-10);
        EXPECT_NEAR(r.w_class * r.w_class, w2, 1e-10);
        EXPECT_NEAR(r.w_class, megs::w_class_concurrence(psi), 1e-12);
        EXPECT_EQ(r.state_digest, megs::state_digest(psi));
    }
    EXPECT_NE(megs::state_digest(megs::ghz_state(3)), megs::state_digest(megs::w_state(3)));
}

TEST(Properties, TwoQubitWoottersOracle) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto psi = megs::random_state({2, 2}, rng);
        const std::array<cplx, 4> a{psi[0], psi[1], psi[2], psi[3]};
        EXPECT_NEAR(megs::class_concurrence(psi, ClassLabel::epr(0, 1)), megs_oracle::wootters(a),
                    1e-10);
    }
}

TEST(Properties, TwoQubitLocalUnitaryInvariance) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g;
    const auto random_unitary = [&] {
        // Gram-Schmidt on a complex Gaussian 2x2.
        std::array<cplx, 2> c0{cplx{g(rng), g(rng)}, cplx{g(rng), g(rng)}};
        const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
        c0 = {c0[0] / n0, c0[1] / n0};
        const cplx phase = std::polar(1.0, g(rng));
        return std::array<cplx, 4>{c0[0], -std::conj(c0[1]) * phase, c0[1], std::conj(c0[0]) * phase};
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto psi = megs::random_state({2, 2}, rng);
        const auto u = random_unitary();
        const auto v = random_unitary();
        std::vector<cplx> out(4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t l = 0; l < 2; ++l)
                        out[2 * i + j] += u[2 * i + k] * v[2 * j + l] * psi[2 * k + l];
        const MultiState moved({2, 2}, out);
        EXPECT_NEAR(megs::class_concurrence(moved, ClassLabel::epr(0, 1)),
                    megs::class_concurrence(psi, ClassLabel::epr(0, 1)), 1e-9);
    }
}

TEST(Properties, ProductStateNullity) {
    std::mt19937_64 rng(55);
    for (const auto &dims : {std::vector<std::size_t>{2, 2, 2}, std::vector<std::size_t>{3, 2, 2}}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto psi = megs::product_state(dims, rng);
            for (const auto &label : megs::enumerate_megs(3).labels) {
                EXPECT_LT(megs::class_concurrence(psi, label), 1e-9);
            }
        }
    }
}

TEST(Properties, PermutationCovariance) {
    std::mt19937_64 rng(77);
    std::vector<std::size_t> perm{0, 1, 2};
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = megs::random_state({2, 3, 2}, rng);
        std::sort(perm.begin(), perm.end());
        do {
            const auto moved = megs::permute_subsystems(psi, perm);
            std::vector<std::size_t> where(3);
            for (std::size_t i = 0; i < 3; ++i) where[perm[i]] = i;
            for (const auto &label : megs::enumerate_megs(3).labels) {
                std::uint32_t mask = 0;
                for (const std::size_t j : label.subset()) mask |= std::uint32_t{1} << where[j];
                EXPECT_NEAR(megs::class_concurrence(moved, ClassLabel::from_mask(mask)),
                            megs::class_concurrence(psi, label), 1e-12);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(Properties, DegreeTwoScaling) {
    std::mt19937_64 rng(88);
    megs::ConcurrenceOptions raw;
    raw.allow_unnormalized = true;
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = megs::random_state({2, 2, 2}, rng);
        const cplx c{1.7, -0.4};
        std::vector<cplx> scaled = amps_of(psi);
        for (cplx &z : scaled) z *= c;
        const auto s = MultiState::scratch({2, 2, 2}, scaled);
        for (const auto &label : megs::enumerate_megs(3).labels) {
            EXPECT_NEAR(megs::class_concurrence(s, label, raw),
                        std::norm(c) * megs::class_concurrence(psi, label), 1e-10);
        }
    }
}

} // namespace
