// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qam/qsim/gate.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qam/errors.hpp"

namespace qam::qsim {

Matrix2 adjoint(const Matrix2 &m) noexcept {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
            std::conj(m[3])};
}

Matrix2 multiply(const Matrix2 &a, const Matrix2 &b) noexcept {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool is_unitary(const Matrix2 &m, double tol) noexcept {
    const Matrix2 p = multiply(adjoint(m), m);
    const Matrix2 eye{Complex{1}, Complex{0}, Complex{0}, Complex{1}};
    for (std::size_t k = 0; k < 4; ++k) {
        if (!(std::abs(p[k] - eye[k]) <= tol)) {
            return false;
        }
    }
    return true;
}

Gate::Gate(const Matrix2 &matrix, std::string name)
    : matrix_(matrix), name_(std::move(name)) {
    if (!is_unitary(matrix_)) {
        throw ValidationError("gate '" + name_ + "' is not unitary");
    }
}

Gate Gate::adjoint(std::string name) const {
    return Gate(qsim::adjoint(matrix_), name.empty() ? name_ : std::move(name));
}

namespace gates {

namespace {
constexpr Complex kZero{0.0, 0.0};
constexpr Complex kOne{1.0, 0.0};
} // namespace

Gate identity() { return Gate({kOne, kZero, kZero, kOne}, "I"); }

Gate hadamard() {
    const double r = 1.0 / std::numbers::sqrt2;
    return Gate({Complex{r}, Complex{r}, Complex{r}, Complex{-r}}, "H");
}

Gate pauli_x() { return Gate({kZero, kOne, kOne, kZero}, "NOT"); }

Gate pauli_y() {
    return Gate({kZero, Complex{0, -1}, Complex{0, 1}, kZero}, "Y");
}

Gate pauli_z() { return Gate({kOne, kZero, kZero, Complex{-1}}, "Z"); }

Matrix2 storage_split_matrix(std::size_t i) {
    if (i == 0) {
        throw ValidationError("storage split index must be >= 1");
    }
    const double id = static_cast<double>(i);
    const double diag = std::sqrt((id - 1.0) / id);
    const double off = 1.0 / std::sqrt(id);
    return {Complex{diag}, Complex{off}, Complex{-off}, Complex{diag}};
}

Gate storage_split(std::size_t i) { return Gate(storage_split_matrix(i), "S"); }

Gate pattern_loader(bool bit) {
    if (!bit) {
        return Gate({kOne, kZero, kZero, kOne}, "U_p");
    }
    return Gate({kZero, Complex{-1}, kOne, kZero}, "U_p");
}

Gate input_marker(bool bit) {
    if (bit) {
        return Gate({kOne, kZero, kZero, kOne}, "U_i");
    }
    return Gate({kZero, kOne, Complex{-1}, kZero}, "U_i");
}

Gate distance_phase(std::size_t n) {
    if (n == 0) {
        throw ValidationError("distance phase needs n >= 1");
    }
    const double angle = std::numbers::pi / (2.0 * static_cast<double>(n));
    return Gate({std::polar(1.0, angle), kZero, kZero, kOne}, "U");
}

Gate distance_phase_correction(std::size_t n) {
    if (n == 0) {
        throw ValidationError("distance phase needs n >= 1");
    }
    const double angle = -std::numbers::pi / static_cast<double>(n);
    return Gate({std::polar(1.0, angle), kZero, kZero, kOne}, "U-2");
}

} // namespace gates

} // namespace qam::qsim
