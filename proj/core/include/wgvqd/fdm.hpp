// Copyright 2026 The wgvqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace wgvqd {

/// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 299'792'458.0;

enum class ModeFamily { TE, TM };
enum class BoundaryCondition { Dirichlet, Neumann };

const char *to_string(ModeFamily family);

/// TM fields vanish on the wall (Dirichlet); TE fields have zero normal
/// derivative there (Neumann).
BoundaryCondition boundary_for(ModeFamily family);

/// Rectangular hollow guide discretized on a 2^nx by 2^ny shifted grid.
struct WaveguideSpec {
    double width_a = 15e-3;  ///< x extent in meters
    double height_b = 10e-3; ///< y extent in meters
    unsigned n_x = 4;        ///< qubits along x
    unsigned n_y = 3;        ///< qubits along y
    ModeFamily family = ModeFamily::TE;

    /// Throws std::invalid_argument when the geometry or qubit counts are unusable.
    void validate() const;

    unsigned total_qubits() const { return n_x + n_y; }
    std::size_t dimension() const { return std::size_t{1} << total_qubits(); }
    double dx() const;
    double dy() const;
    /// 1/dx^2 and 1/dy^2, in 1/m^2.
    double scale_x() const;
    double scale_y() const;
};

/// Row-major dense real matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix square(std::size_t n) { return DenseMatrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> data() const { return data_; }

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator*=(double factor);
    friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix &rhs) { return lhs += rhs; }
    friend DenseMatrix operator*(double factor, DenseMatrix m) { return m *= factor; }
    friend DenseMatrix operator*(const DenseMatrix &lhs, const DenseMatrix &rhs);

    DenseMatrix transposed() const;
    double max_abs() const;
    double frobenius_norm() const;
    double trace() const;
    /// Largest |A(i,j) - A(j,i)|; infinity for non-square input.
    double asymmetry() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Largest entrywise difference; throws on shape mismatch.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

/// Kronecker product a (x) b; b occupies the low part of the row/column index.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Unit-step shifted-grid second-difference operator on 2^n_t points
/// (negated, so the spectrum is non-negative). Interior stencil (-1, 2, -1),
/// corner diagonals 3 for Dirichlet and 1 for Neumann.
DenseMatrix build_1d_operator(unsigned n_t, BoundaryCondition bc);

/// s_x (I (x) M_x) + s_y (M_y (x) I) with x qubits least significant.
DenseMatrix assemble_2d(const WaveguideSpec &spec);

/// Closed-form eigenvalues of build_1d_operator, ascending:
/// 4 sin^2(m pi / 2N) for m in 1..N (Dirichlet) or 0..N-1 (Neumann).
std::vector<double> operator_1d_spectrum(unsigned n_t, BoundaryCondition bc);

/// Largest |entry| of assemble_2d(spec), computed without assembling.
double assembled_max_abs(const WaveguideSpec &spec);

/// f = c sqrt(lambda) / 2pi. Values down to -1e-9 * matrix_norm are treated
/// as zero; anything more negative throws std::domain_error.
double eigenvalue_to_cutoff(double lambda, double matrix_norm);
double eigenvalue_to_cutoff(double lambda, const WaveguideSpec &spec);

/// Exact cut-off of the continuous guide: (c/2) sqrt((m/a)^2 + (n/b)^2).
double analytic_cutoff(const WaveguideSpec &spec, unsigned m, unsigned n);

/// Discrete eigenvalue of mode (m, n) from the Kronecker-sum structure.
double discrete_mode_eigenvalue(const WaveguideSpec &spec, unsigned m, unsigned n);

} // namespace wgvqd
