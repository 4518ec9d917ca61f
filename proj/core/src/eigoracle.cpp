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

#include "wgvqd/eigoracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace wgvqd {

JacobiNotConverged::JacobiNotConverged(std::size_t sweeps, double residual)
    : std::runtime_error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                         " sweeps; off-diagonal norm " + std::to_string(residual)),
      residual_(residual) {}

std::vector<double> EigenDecomposition::vector(std::size_t i) const {
    std::vector<double> v(vectors.rows());
    for (std::size_t r = 0; r < v.size(); ++r) {
        v[r] = vectors(r, i);
    }
    return v;
}

std::vector<std::size_t> EigenDecomposition::eigenspace(std::size_t i, double tol) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (std::abs(values[j] - values[i]) < tol) {
            out.push_back(j);
        }
    }
    return out;
}

namespace {

double off_diagonal_norm(const std::vector<double> &a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    return std::sqrt(s);
}

} // namespace

EigenDecomposition eigensolve_symmetric(const DenseMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("eigensolve needs a square matrix");
    }
    if (m.rows() > 4096) {
        throw std::invalid_argument("dense eigensolve capped at 4096 rows");
    }
    if (m.asymmetry() > 1e-12) {
        throw std::invalid_argument("eigensolve input is not symmetric (max |A - A^T| = " +
                                    std::to_string(m.asymmetry()) + ")");
    }
    const std::size_t n = m.rows();
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> vt(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        vt[i * n + i] = 1.0;
    }

    const double target = 1e-12 * m.frobenius_norm();
    constexpr std::size_t kMaxSweeps = 100;
    std::size_t sweep = 0;
    double off = off_diagonal_norm(a, n);
    while (off >= target && off > 0.0) {
        if (sweep == kMaxSweeps) {
            throw JacobiNotConverged(sweep, off);
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) {
                    continue;
                }
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // Rows p and q are read contiguously; symmetry supplies the columns.
                double *row_p = a.data() + p * n;
                double *row_q = a.data() + q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const double akp = row_p[k];
                    const double akq = row_q[k];
                    const double new_kp = c * akp - s * akq;
                    const double new_kq = s * akp + c * akq;
                    row_p[k] = new_kp;
                    row_q[k] = new_kq;
                    a[k * n + p] = new_kp;
                    a[k * n + q] = new_kq;
                }
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                // vt holds eigenvectors as rows.
                double *vt_p = vt.data() + p * n;
                double *vt_q = vt.data() + q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = vt_p[k];
                    const double vkq = vt_q[k];
                    vt_p[k] = c * vkp - s * vkq;
                    vt_q[k] = s * vkp + c * vkq;
                }
            }
        }
        off = off_diagonal_norm(a, n);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    out.matrix_norm = m.max_abs();
    out.sweeps = sweep;
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.values[col] = a[src * n + src];
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, col) = vt[src * n + r];
        }
    }
    return out;
}

double fidelity(const StateVector &s, std::span<const double> v) {
    if (v.size() != s.size()) {
        throw std::invalid_argument("fidelity of vectors with different dimensions");
    }
    Amplitude dot = 0.0;
    auto a = s.amplitudes();
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += v[i] * a[i];
    }
    return std::norm(dot);
}

double eigenspace_fidelity(const StateVector &s, const EigenDecomposition &eig, std::size_t index) {
    if (index >= eig.size()) {
        throw std::out_of_range("eigenvalue index out of range");
    }
    if (eig.vectors.rows() != s.size()) {
        throw std::invalid_argument("fidelity of vectors with different dimensions");
    }
    double total = 0.0;
    for (std::size_t j : eig.eigenspace(index, eig.degeneracy_tolerance())) {
        const std::vector<double> col = eig.vector(j);
        total += fidelity(s, col);
    }
    return std::min(total, 1.0);
}

} // namespace wgvqd
