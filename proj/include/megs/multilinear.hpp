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
 * Dense complex linear algebra, Kronecker products, multi-index flattening
 * and the pure multipartite state type.
 *
 * Basis ordering is row-major with the last subsystem index varying fastest,
 * so a Kronecker product of per-subsystem operators acts on the flattened
 * amplitude vector without any permutation.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "megs/errors.hpp"

namespace megs {

using cplx = std::complex<double>;

/// Default cap on the side length of any dense matrix and on the total
/// Hilbert-space dimension of a state handed to the operator machinery.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Tolerance on sum |alpha|^2 - 1 accepted by the strict state constructor.
inline constexpr double kNormTolerance = 1e-8;

/// Dense cap taken from the MEGS_DENSE_CAP environment variable, or the
/// default when it is unset. Malformed values raise DomainError.
inline std::size_t dense_cap_from_env() {
    const char *raw = std::getenv("MEGS_DENSE_CAP");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultDenseCap;
    }
    const std::string text(raw);
    std::size_t consumed = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &consumed);
    } catch (const std::exception &) {
        throw DomainError("MEGS_DENSE_CAP is not a positive integer: " + text);
    }
    if (consumed != text.size() || value == 0) {
        throw DomainError("MEGS_DENSE_CAP is not a positive integer: " + text);
    }
    return static_cast<std::size_t>(value);
}

/// Row-major dense complex matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != checked_size(rows, cols)) {
            throw DomainError("ComplexMatrix: entry count does not match shape");
        }
    }

    /// Build from nested row lists, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw DomainError("ComplexMatrix: ragged row list");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            out(i, i) = 1.0;
        }
        return out;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    cplx &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    [[nodiscard]] std::span<const cplx> data() const noexcept { return data_; }
    [[nodiscard]] std::span<cplx> data() noexcept { return data_; }

    [[nodiscard]] ComplexMatrix transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    [[nodiscard]] ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = std::conj((*this)(i, j));
            }
        }
        return out;
    }

    [[nodiscard]] cplx trace() const {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            acc += (*this)(i, i);
        }
        return acc;
    }

    /// Number of entries that are not exactly zero.
    [[nodiscard]] std::size_t nonzero_count() const {
        return static_cast<std::size_t>(std::count_if(
            data_.begin(), data_.end(), [](const cplx &z) { return z != cplx{}; }));
    }

    /// Largest entrywise modulus of (this - other); shapes must agree.
    [[nodiscard]] double max_abs_diff(const ComplexMatrix &other) const {
        require_same_shape(other);
        double worst = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
        }
        return worst;
    }

    /// O = O^H within tol (tol = 0 demands bitwise equality).
    [[nodiscard]] bool is_hermitian(double tol = 0.0) const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i; j < cols_; ++j) {
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    /// O = O^T within tol.
    [[nodiscard]] bool is_symmetric(double tol = 0.0) const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &rhs) {
        require_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += rhs.data_[i];
        }
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &rhs) {
        require_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= rhs.data_[i];
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs += rhs;
        return lhs;
    }

    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
        if (lhs.cols_ != rhs.rows_) {
            throw DomainError("ComplexMatrix: inner dimensions do not agree");
        }
        ComplexMatrix out(lhs.rows_, rhs.cols_);
        for (std::size_t i = 0; i < lhs.rows_; ++i) {
            for (std::size_t k = 0; k < lhs.cols_; ++k) {
                const cplx a = lhs(i, k);
                if (a == cplx{}) {
                    continue;
                }
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    static std::size_t checked_size(std::size_t rows, std::size_t cols) {
        if (cols != 0 && rows > std::numeric_limits<std::size_t>::max() / cols) {
            throw CapacityError("ComplexMatrix: shape overflows size_t");
        }
        return rows * cols;
    }

    void require_same_shape(const ComplexMatrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DomainError("ComplexMatrix: shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Product of the subsystem dimensions, raising CapacityError on overflow.
inline std::size_t total_dimension(std::span<const std::size_t> dims) {
    std::size_t total = 1;
    for (const std::size_t n : dims) {
        if (n != 0 && total > std::numeric_limits<std::size_t>::max() / n) {
            throw CapacityError("total Hilbert-space dimension overflows size_t");
        }
        total *= n;
    }
    return total;
}

/// sum_j multi[j] * prod_{j' > j} dims[j'].
inline std::size_t flat_index(std::span<const std::size_t> multi,
                              std::span<const std::size_t> dims) {
    if (multi.size() != dims.size()) {
        throw DomainError("flat_index: multi-index has " + std::to_string(multi.size()) +
                          " entries but there are " + std::to_string(dims.size()) +
                          " subsystems");
    }
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (multi[j] >= dims[j]) {
            throw DomainError("flat_index: index " + std::to_string(multi[j]) +
                              " out of range for subsystem " + std::to_string(j) +
                              " of dimension " + std::to_string(dims[j]));
        }
        flat = flat * dims[j] + multi[j];
    }
    return flat;
}

/// Inverse of flat_index for fixed dims.
inline std::vector<std::size_t> multi_index(std::size_t flat,
                                            std::span<const std::size_t> dims) {
    if (flat >= total_dimension(dims)) {
        throw DomainError("multi_index: flat index " + std::to_string(flat) +
                          " out of range");
    }
    std::vector<std::size_t> multi(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
        multi[j] = flat % dims[j];
        flat /= dims[j];
    }
    return multi;
}

/// Kronecker product. Either side of the result exceeding `cap` is a
/// CapacityError.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b,
                          std::size_t cap = kDefaultDenseCap) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if ((b.rows() != 0 && rows / b.rows() != a.rows()) ||
        (b.cols() != 0 && cols / b.cols() != a.cols()) || rows > cap || cols > cap) {
        throw CapacityError("kron: result " + std::to_string(a.rows() * b.rows()) + "x" +
                            std::to_string(a.cols() * b.cols()) +
                            " exceeds the dense cap " + std::to_string(cap));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Left-to-right Kronecker product of a non-empty factor list.
inline ComplexMatrix kron_all(std::span<const ComplexMatrix> factors,
                              std::size_t cap = kDefaultDenseCap) {
    if (factors.empty()) {
        throw DomainError("kron_all: no factors");
    }
    ComplexMatrix out = factors.front();
    if (out.rows() > cap || out.cols() > cap) {
        throw CapacityError("kron_all: factor exceeds the dense cap");
    }
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = kron(out, factors[i], cap);
    }
    return out;
}

/// Pure state of m subsystems with amplitudes alpha_{i_1..i_m}.
class MultiState {
  public:
    /// Strict constructor: |sum |alpha|^2 - 1| must be within kNormTolerance.
    MultiState(std::vector<std::size_t> dims, std::vector<cplx> amps)
        : MultiState(std::move(dims), std::move(amps), Mode::Strict) {}

    /// Rescales the amplitudes to unit norm. A zero vector is a DomainError.
    static MultiState normalized(std::vector<std::size_t> dims, std::vector<cplx> amps) {
        return {std::move(dims), std::move(amps), Mode::Normalize};
    }

    /// Unnormalized scratch state; concurrence evaluation refuses these unless
    /// explicitly asked to accept them.
    static MultiState scratch(std::vector<std::size_t> dims, std::vector<cplx> amps) {
        return {std::move(dims), std::move(amps), Mode::Scratch};
    }

    [[nodiscard]] std::span<const std::size_t> dims() const noexcept { return dims_; }
    [[nodiscard]] std::span<const cplx> amps() const noexcept { return amps_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] bool is_normalized() const noexcept { return normalized_; }

    [[nodiscard]] double norm_squared() const {
        return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                               [](double acc, const cplx &z) { return acc + std::norm(z); });
    }

    const cplx &operator[](std::size_t flat) const { return amps_[flat]; }

    friend bool operator==(const MultiState &, const MultiState &) = default;

  private:
    enum class Mode { Strict, Normalize, Scratch };

    MultiState(std::vector<std::size_t> dims, std::vector<cplx> amps, Mode mode)
        : dims_(std::move(dims)), amps_(std::move(amps)) {
        if (dims_.empty()) {
            throw DomainError("MultiState: need at least one subsystem");
        }
        for (std::size_t j = 0; j < dims_.size(); ++j) {
            if (dims_[j] < 2) {
                throw DomainError("MultiState: subsystem " + std::to_string(j) +
                                  " has dimension " + std::to_string(dims_[j]) +
                                  " (must be >= 2)");
            }
        }
        const std::size_t expected = total_dimension(dims_);
        if (amps_.size() != expected) {
            throw DomainError("MultiState: expected " + std::to_string(expected) +
                              " amplitudes, got " + std::to_string(amps_.size()));
        }
        for (const cplx &z : amps_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw DomainError("MultiState: non-finite amplitude");
            }
        }
        const double n2 = norm_squared();
        switch (mode) {
        case Mode::Strict:
            if (std::abs(n2 - 1.0) > kNormTolerance) {
                throw DomainError("MultiState: state is not normalized (sum |a|^2 = " +
                                  std::to_string(n2) + ")");
            }
            normalized_ = true;
            break;
        case Mode::Normalize: {
            if (n2 == 0.0) {
                throw DomainError("MultiState: cannot normalize the zero vector");
            }
            const double inv = 1.0 / std::sqrt(n2);
            for (cplx &z : amps_) {
                z *= inv;
            }
            normalized_ = true;
            break;
        }
        case Mode::Scratch:
            normalized_ = std::abs(n2 - 1.0) <= kNormTolerance;
            break;
        }
    }

    std::vector<std::size_t> dims_;
    std::vector<cplx> amps_;
    bool normalized_ = false;
};

/// Componentwise complex conjugate in the computational basis.
inline MultiState conjugate_state(const MultiState &psi) {
    std::vector<cplx> amps(psi.amps().begin(), psi.amps().end());
    for (cplx &z : amps) {
        z = std::conj(z);
    }
    std::vector<std::size_t> dims(psi.dims().begin(), psi.dims().end());
    if (psi.is_normalized()) {
        return {std::move(dims), std::move(amps)};
    }
    return MultiState::scratch(std::move(dims), std::move(amps));
}

/// sum_{a,b} x_a * O[a,b] * y_b, with no conjugation on either side.
inline cplx bilinear_form(std::span<const cplx> x, const ComplexMatrix &op,
                          std::span<const cplx> y) {
    if (op.rows() != x.size() || op.cols() != y.size()) {
        throw DomainError("bilinear_form: operator is " + std::to_string(op.rows()) + "x" +
                          std::to_string(op.cols()) + " but vectors have lengths " +
                          std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    cplx acc{0.0, 0.0};
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a] == cplx{}) {
            continue;
        }
        cplx row{0.0, 0.0};
        for (std::size_t b = 0; b < y.size(); ++b) {
            row += op(a, b) * y[b];
        }
        acc += x[a] * row;
    }
    return acc;
}

/// <Psi*| O |Psi> = sum_{a,b} alpha_a O[a,b] alpha_b. The bra is the
/// conjugated state, so the amplitudes enter unconjugated on both sides.
inline cplx bilinear_expectation(const MultiState &psi, const ComplexMatrix &op) {
    if (!op.is_square() || op.rows() != psi.dimension()) {
        throw DomainError("bilinear_expectation: operator side " +
                          std::to_string(op.rows()) + " does not match state dimension " +
                          std::to_string(psi.dimension()));
    }
    return bilinear_form(psi.amps(), op, psi.amps());
}

/// Reorders subsystems: new subsystem i is old subsystem perm[i].
inline MultiState permute_subsystems(const MultiState &psi,
                                     std::span<const std::size_t> perm) {
    const std::size_t m = psi.num_subsystems();
    if (perm.size() != m) {
        throw DomainError("permute_subsystems: permutation has wrong length");
    }
    std::vector<bool> seen(m, false);
    for (const std::size_t p : perm) {
        if (p >= m || seen[p]) {
            throw DomainError("permute_subsystems: not a permutation");
        }
        seen[p] = true;
    }
    std::vector<std::size_t> new_dims(m);
    for (std::size_t i = 0; i < m; ++i) {
        new_dims[i] = psi.dims()[perm[i]];
    }
    std::vector<cplx> amps(psi.dimension());
    std::vector<std::size_t> moved(m);
    for (std::size_t flat = 0; flat < psi.dimension(); ++flat) {
        const auto old_multi = multi_index(flat, psi.dims());
        for (std::size_t i = 0; i < m; ++i) {
            moved[i] = old_multi[perm[i]];
        }
        amps[flat_index(moved, new_dims)] = psi[flat];
    }
    if (psi.is_normalized()) {
        return {std::move(new_dims), std::move(amps)};
    }
    return MultiState::scratch(std::move(new_dims), std::move(amps));
}

/// Tensor product of single-subsystem amplitude vectors (not normalized).
inline MultiState tensor_product_state(std::span<const std::vector<cplx>> factors) {
    if (factors.empty()) {
        throw DomainError("tensor_product_state: no factors");
    }
    std::vector<std::size_t> dims;
    std::vector<cplx> amps{cplx{1.0, 0.0}};
    for (const auto &f : factors) {
        dims.push_back(f.size());
        std::vector<cplx> next;
        next.reserve(amps.size() * f.size());
        for (const cplx &a : amps) {
            for (const cplx &b : f) {
                next.push_back(a * b);
            }
        }
        amps = std::move(next);
    }
    return MultiState::scratch(std::move(dims), std::move(amps));
}

} // namespace megs
