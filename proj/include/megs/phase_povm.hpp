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
 * Phase-parameterized POVM on a single subsystem, its orthogonal complement
 * and the tensor product of complements over several subsystems.
 *
 * For an N-dimensional subsystem the POVM is Delta[k][l] = exp(i phi_{k,l})
 * with an antisymmetric phase matrix phi. The complement I - Delta has a
 * zero diagonal and carries only the phase structure.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "megs/errors.hpp"
#include "megs/multilinear.hpp"

namespace megs {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Tolerance on phi_{k,l} + phi_{l,k} accepted by PhaseSpec.
inline constexpr double kAntisymmetryTolerance = 1e-12;

/// The two canonical phase fillings used by the class operators.
enum class PhaseKind { HalfPi, Pi };

/// exp(i phi), exact when phi is an integer multiple of pi/2 in double
/// arithmetic (so exp(i pi) is exactly -1, not -1 + 1.2e-16 i).
inline cplx unit_phase(double phi) {
    const double quarter_turns = phi / kHalfPi;
    if (std::nearbyint(quarter_turns) == quarter_turns &&
        std::abs(quarter_turns) < 1e15) {
        const auto q = static_cast<long long>(quarter_turns);
        switch (((q % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }
    return std::polar(1.0, phi);
}

/// Antisymmetric matrix of quantum phases for one subsystem.
class PhaseSpec {
  public:
    /// `phases` is the full row-major dim x dim matrix.
    PhaseSpec(std::size_t dim, std::vector<double> phases)
        : dim_(dim), phases_(std::move(phases)) {
        if (dim_ < 1) {
            throw DomainError("PhaseSpec: dimension must be positive");
        }
        if (phases_.size() != dim_ * dim_) {
            throw DomainError("PhaseSpec: expected " + std::to_string(dim_ * dim_) +
                              " phases, got " + std::to_string(phases_.size()));
        }
        for (std::size_t k = 0; k < dim_; ++k) {
            if (phase(k, k) != 0.0) {
                throw DomainError("PhaseSpec: diagonal phase (" + std::to_string(k) +
                                  "," + std::to_string(k) + ") must be zero");
            }
            for (std::size_t l = k + 1; l < dim_; ++l) {
                if (!std::isfinite(phase(k, l)) ||
                    std::abs(phase(k, l) + phase(l, k)) > kAntisymmetryTolerance) {
                    throw DomainError("PhaseSpec: phi(" + std::to_string(k) + "," +
                                      std::to_string(l) + ") = " +
                                      std::to_string(phase(k, l)) +
                                      " is not minus phi(" + std::to_string(l) + "," +
                                      std::to_string(k) + ")");
                }
            }
        }
    }

    /// Build from the dim(dim-1)/2 free upper-triangle phases in row order
    /// (phi_01, phi_02, ..., phi_12, ...).
    static PhaseSpec from_upper(std::size_t dim, std::span<const double> upper) {
        if (upper.size() != free_parameter_count(dim)) {
            throw DomainError("PhaseSpec: expected " +
                              std::to_string(free_parameter_count(dim)) +
                              " upper-triangle phases, got " + std::to_string(upper.size()));
        }
        std::vector<double> full(dim * dim, 0.0);
        std::size_t next = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t l = k + 1; l < dim; ++l) {
                full[k * dim + l] = upper[next];
                full[l * dim + k] = -upper[next];
                ++next;
            }
        }
        return {dim, std::move(full)};
    }

    static constexpr std::size_t free_parameter_count(std::size_t dim) {
        return dim * (dim - 1) / 2;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double phase(std::size_t k, std::size_t l) const {
        return phases_[k * dim_ + l];
    }
    [[nodiscard]] std::span<const double> phases() const noexcept { return phases_; }

  private:
    std::size_t dim_;
    std::vector<double> phases_;
};

/// All upper-triangle phases set to pi/2 or pi.
inline PhaseSpec canonical_phases(std::size_t dim, PhaseKind kind) {
    if (dim < 2) {
        throw DomainError("canonical_phases: dimension must be >= 2, got " +
                          std::to_string(dim));
    }
    const double value = kind == PhaseKind::Pi ? kPi : kHalfPi;
    const std::vector<double> upper(PhaseSpec::free_parameter_count(dim), value);
    return PhaseSpec::from_upper(dim, upper);
}

/// Delta[k][l] = exp(i phi_{k,l}); unit diagonal, Hermitian.
inline ComplexMatrix build_povm(const PhaseSpec &spec) {
    const std::size_t n = spec.dim();
    ComplexMatrix delta(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        delta(k, k) = 1.0;
        for (std::size_t l = k + 1; l < n; ++l) {
            const cplx z = unit_phase(spec.phase(k, l));
            delta(k, l) = z;
            delta(l, k) = std::conj(z);
        }
    }
    return delta;
}

/// I - Delta.
inline ComplexMatrix complement(const PhaseSpec &spec) {
    return ComplexMatrix::identity(spec.dim()) - build_povm(spec);
}

/// complement(specs[0]) (x) ... (x) complement(specs[m-1]).
inline ComplexMatrix multipartite_complement(std::span<const PhaseSpec> specs,
                                             std::size_t cap = kDefaultDenseCap) {
    if (specs.empty()) {
        throw DomainError("multipartite_complement: need at least one phase spec");
    }
    std::vector<ComplexMatrix> factors;
    factors.reserve(specs.size());
    for (const auto &spec : specs) {
        factors.push_back(complement(spec));
    }
    return kron_all(factors, cap);
}

} // namespace megs
