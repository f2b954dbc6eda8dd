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
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>

namespace qam::qsim {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

inline constexpr double kUnitarityTolerance = 1e-12;

[[nodiscard]] bool is_unitary(const Matrix2 &m,
                              double tol = kUnitarityTolerance) noexcept;
[[nodiscard]] Matrix2 adjoint(const Matrix2 &m) noexcept;
[[nodiscard]] Matrix2 multiply(const Matrix2 &a, const Matrix2 &b) noexcept;

/**
 * A validated single-qubit unitary. Construction throws ValidationError when
 * the matrix is not unitary within kUnitarityTolerance, which catches
 * transcription errors in hand-written matrices before they touch a state.
 */
class Gate {
  public:
    Gate(const Matrix2 &matrix, std::string name);

    [[nodiscard]] const Matrix2 &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

    /// Hermitian conjugate. Keeps the name unless a new one is given.
    [[nodiscard]] Gate adjoint(std::string name = {}) const;

  private:
    Matrix2 matrix_;
    std::string name_;
};

namespace gates {

Gate identity();
Gate hadamard();
/// sigma_1, the NOT gate.
Gate pauli_x();
Gate pauli_y();
Gate pauli_z();

/**
 * Storage split gate S^i = [[sqrt((i-1)/i), 1/sqrt(i)],
 *                           [-1/sqrt(i),   sqrt((i-1)/i)]], i >= 1.
 * Applied to |1> it peels off amplitude 1/sqrt(i) onto |0>.
 */
Gate storage_split(std::size_t i);
[[nodiscard]] Matrix2 storage_split_matrix(std::size_t i);

/**
 * Pattern loader for one bit: identity for 0, and the real rotation
 * [[0, -1], [1, 0]] for 1 so that |0> -> |1> with no sign. The product over a
 * pattern's bits maps |0...0> exactly onto the pattern's basis state.
 */
Gate pattern_loader(bool bit);

/**
 * Input marker for one input bit: identity for 1, i*sigma_2 = [[0, 1], [-1, 0]]
 * for 0. Acting on memory bit m_j it leaves |1> exactly when m_j equals the
 * input bit (up to a sign that the inverse marker undoes).
 */
Gate input_marker(bool bit);

/// diag(exp(i*pi/(2n)), 1): phase on |0>, one per zero bit of a register.
Gate distance_phase(std::size_t n);
/// diag(exp(-i*pi/n), 1), the square of the inverse of distance_phase(n).
Gate distance_phase_correction(std::size_t n);

} // namespace gates

} // namespace qam::qsim
