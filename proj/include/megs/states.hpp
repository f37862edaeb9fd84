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
 * Canonical and seeded random states: Bell, GHZ, W, product and random.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "megs/errors.hpp"
#include "megs/multilinear.hpp"

namespace megs {

using Rng = std::mt19937_64;

/// (|00> + |11>) / sqrt(2).
inline MultiState bell_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return {{2, 2}, {h, 0.0, 0.0, h}};
}

/// (|0...0> + |1...1>) / sqrt(2) on m qubits.
inline MultiState ghz_state(std::size_t m) {
    if (m < 2 || m > 24) {
        throw DomainError("ghz_state: need 2 <= m <= 24 qubits, got " + std::to_string(m));
    }
    std::vector<cplx> amps(std::size_t{1} << m);
    const double h = 1.0 / std::sqrt(2.0);
    amps.front() = h;
    amps.back() = h;
    return {std::vector<std::size_t>(m, 2), std::move(amps)};
}

/// Uniform superposition of the m single-excitation basis states.
inline MultiState w_state(std::size_t m) {
    if (m < 2 || m > 24) {
        throw DomainError("w_state: need 2 <= m <= 24 qubits, got " + std::to_string(m));
    }
    std::vector<cplx> amps(std::size_t{1} << m);
    const double a = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j) {
        amps[std::size_t{1} << j] = a;
    }
    return {std::vector<std::size_t>(m, 2), std::move(amps)};
}

/// n complex Gaussian entries, unnormalized.
inline std::vector<cplx> gaussian_vector(std::size_t n, Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> v(n);
    for (cplx &z : v) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = {re, im};
    }
    return v;
}

inline MultiState random_state(std::vector<std::size_t> dims, Rng &rng) {
    const std::size_t n = total_dimension(dims);
    return MultiState::normalized(std::move(dims), gaussian_vector(n, rng));
}

inline MultiState random_state(std::vector<std::size_t> dims, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(std::move(dims), rng);
}

/// Tensor product of independent random normalized single-subsystem states.
inline MultiState product_state(std::span<const std::size_t> dims, Rng &rng) {
    if (dims.empty()) {
        throw DomainError("product_state: no subsystems");
    }
    std::vector<std::vector<cplx>> factors;
    for (const std::size_t n : dims) {
        auto f = gaussian_vector(n, rng);
        double n2 = 0.0;
        for (const cplx &z : f) {
            n2 += std::norm(z);
        }
        for (cplx &z : f) {
            z /= std::sqrt(n2);
        }
        factors.push_back(std::move(f));
    }
    const MultiState raw = tensor_product_state(factors);
    return MultiState::normalized({raw.dims().begin(), raw.dims().end()},
                                  {raw.amps().begin(), raw.amps().end()});
}

inline MultiState product_state(std::span<const std::size_t> dims, std::uint64_t seed) {
    Rng rng(seed);
    return product_state(dims, rng);
}

} // namespace megs
