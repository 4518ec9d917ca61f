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

#include "wgvqd/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wgvqd {

const char *to_string(ModeFamily family) { return family == ModeFamily::TE ? "TE" : "TM"; }

BoundaryCondition boundary_for(ModeFamily family) {
    return family == ModeFamily::TM ? BoundaryCondition::Dirichlet : BoundaryCondition::Neumann;
}

void WaveguideSpec::validate() const {
    if (!(width_a > 0.0) || !std::isfinite(width_a)) {
        throw std::invalid_argument("waveguide width must be positive, got " + std::to_string(width_a));
    }
    if (!(height_b > 0.0) || !std::isfinite(height_b)) {
        throw std::invalid_argument("waveguide height must be positive, got " + std::to_string(height_b));
    }
    if (n_x < 1 || n_y < 1) {
        throw std::invalid_argument("each axis needs at least one qubit");
    }
    if (n_x + n_y > 30) {
        throw std::invalid_argument("total qubit count too large: " + std::to_string(n_x + n_y));
    }
    if (!(dx() > 0.0) || !(dy() > 0.0)) {
        throw std::invalid_argument("grid step underflowed to zero");
    }
}

double WaveguideSpec::dx() const { return width_a / static_cast<double>(std::size_t{1} << n_x); }
double WaveguideSpec::dy() const { return height_b / static_cast<double>(std::size_t{1} << n_y); }
double WaveguideSpec::scale_x() const { return 1.0 / (dx() * dx()); }
double WaveguideSpec::scale_y() const { return 1.0 / (dy() * dy()); }

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(double factor) {
    for (double &v : data_) {
        v *= factor;
    }
    return *this;
}

DenseMatrix operator*(const DenseMatrix &lhs, const DenseMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    DenseMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const double a = lhs(i, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) {
        s += v * v;
    }
    return std::sqrt(s);
}

double DenseMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double DenseMatrix::asymmetry() const {
    if (rows_ != cols_) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
        }
    }
    return worst;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch in comparison");
    }
    double worst = 0.0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t k = 0; k < da.size(); ++k) {
        worst = std::max(worst, std::abs(da[k] - db[k]));
    }
    return worst;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const double f = a(ia, ja);
            if (f == 0.0) {
                continue;
            }
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
                }
            }
        }
    }
    return out;
}

DenseMatrix build_1d_operator(unsigned n_t, BoundaryCondition bc) {
    if (n_t == 0) {
        throw std::invalid_argument("1D operator needs at least one qubit");
    }
    if (n_t > 14) {
        throw std::invalid_argument("1D operator too large for dense storage");
    }
    const std::size_t n = std::size_t{1} << n_t;
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 2.0;
        if (i + 1 < n) {
            m(i, i + 1) = -1.0;
            m(i + 1, i) = -1.0;
        }
    }
    const double corner = bc == BoundaryCondition::Dirichlet ? 3.0 : 1.0;
    m(0, 0) = corner;
    m(n - 1, n - 1) = corner;
    return m;
}

DenseMatrix assemble_2d(const WaveguideSpec &spec) {
    spec.validate();
    if (spec.total_qubits() > 14) {
        throw std::invalid_argument("2D assembly capped at 14 qubits");
    }
    const BoundaryCondition bc = boundary_for(spec.family);
    const DenseMatrix mx = build_1d_operator(spec.n_x, bc);
    const DenseMatrix my = build_1d_operator(spec.n_y, bc);
    const DenseMatrix ix = DenseMatrix::identity(mx.rows());
    const DenseMatrix iy = DenseMatrix::identity(my.rows());
    return spec.scale_x() * kron(iy, mx) + spec.scale_y() * kron(my, ix);
}

std::vector<double> operator_1d_spectrum(unsigned n_t, BoundaryCondition bc) {
    if (n_t == 0) {
        throw std::invalid_argument("1D operator needs at least one qubit");
    }
    const std::size_t n = std::size_t{1} << n_t;
    std::vector<double> values;
    values.reserve(n);
    const std::size_t first = bc == BoundaryCondition::Dirichlet ? 1 : 0;
    for (std::size_t m = first; m < first + n; ++m) {
        const double s = std::sin(static_cast<double>(m) * std::numbers::pi / (2.0 * static_cast<double>(n)));
        values.push_back(4.0 * s * s);
    }
    return values;
}

double assembled_max_abs(const WaveguideSpec &spec) {
    // The diagonal dominates every off-diagonal entry (which are -s_x or -s_y).
    const double corner = spec.family == ModeFamily::TM ? 3.0 : 1.0;
    const double sx = spec.scale_x();
    const double sy = spec.scale_y();
    const double diag_x = spec.n_x == 1 ? corner : std::max(corner, 2.0);
    const double diag_y = spec.n_y == 1 ? corner : std::max(corner, 2.0);
    return std::max({diag_x * sx + diag_y * sy, sx, sy});
}

double eigenvalue_to_cutoff(double lambda, double matrix_norm) {
    const double tol = 1e-9 * std::abs(matrix_norm);
    if (!std::isfinite(lambda)) {
        throw std::domain_error("eigenvalue is not finite");
    }
    if (lambda < -tol) {
        throw std::domain_error("negative eigenvalue " + std::to_string(lambda) +
                                " beyond round-off; operator is not positive semidefinite");
    }
    return kSpeedOfLight * std::sqrt(std::max(lambda, 0.0)) / (2.0 * std::numbers::pi);
}

double eigenvalue_to_cutoff(double lambda, const WaveguideSpec &spec) {
    return eigenvalue_to_cutoff(lambda, assembled_max_abs(spec));
}

double analytic_cutoff(const WaveguideSpec &spec, unsigned m, unsigned n) {
    spec.validate();
    if (spec.family == ModeFamily::TE && m == 0 && n == 0) {
        throw std::invalid_argument("TE00 is not a propagating mode");
    }
    if (spec.family == ModeFamily::TM && (m == 0 || n == 0)) {
        throw std::invalid_argument("TM modes need m >= 1 and n >= 1");
    }
    const double kx = static_cast<double>(m) / spec.width_a;
    const double ky = static_cast<double>(n) / spec.height_b;
    return 0.5 * kSpeedOfLight * std::sqrt(kx * kx + ky * ky);
}

double discrete_mode_eigenvalue(const WaveguideSpec &spec, unsigned m, unsigned n) {
    const std::size_t nx = std::size_t{1} << spec.n_x;
    const std::size_t ny = std::size_t{1} << spec.n_y;
    const bool tm = spec.family == ModeFamily::TM;
    const std::size_t lo = tm ? 1 : 0;
    if (m < lo || n < lo || m >= lo + nx || n >= lo + ny) {
        throw std::invalid_argument("mode index outside the discrete grid");
    }
    auto branch = [](std::size_t idx, std::size_t count) {
        const double s = std::sin(static_cast<double>(idx) * std::numbers::pi / (2.0 * static_cast<double>(count)));
        return 4.0 * s * s;
    };
    return spec.scale_x() * branch(m, nx) + spec.scale_y() * branch(n, ny);
}

} // namespace wgvqd
