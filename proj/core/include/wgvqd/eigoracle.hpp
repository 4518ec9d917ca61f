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
#include <stdexcept>
#include <vector>

#include "wgvqd/fdm.hpp"
#include "wgvqd/qsim.hpp"

namespace wgvqd {

/// Eigenpairs of a real symmetric matrix, values ascending.
struct EigenDecomposition {
    std::vector<double> values;
    /// Column i holds the eigenvector of values[i].
    DenseMatrix vectors;
    /// Largest |entry| of the input, used to scale tolerances.
    double matrix_norm = 0.0;
    std::size_t sweeps = 0;

    std::size_t size() const { return values.size(); }
    std::vector<double> vector(std::size_t i) const;
    /// Indices j with |values[j] - values[i]| < tol.
    std::vector<std::size_t> eigenspace(std::size_t i, double tol) const;
    /// 1e-6 * matrix_norm, the grouping threshold for degenerate modes.
    double degeneracy_tolerance() const { return 1e-6 * matrix_norm; }
};

class JacobiNotConverged : public std::runtime_error {
  public:
    JacobiNotConverged(std::size_t sweeps, double residual);
    double residual() const { return residual_; }

  private:
    double residual_;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 * ||m||_F (at most 100 sweeps). Rejects input whose asymmetry
/// exceeds 1e-12 or whose size exceeds 4096.
EigenDecomposition eigensolve_symmetric(const DenseMatrix &m);

/// |<v|s>|^2 for a real unit vector v.
double fidelity(const StateVector &s, std::span<const double> v);

/// Squared norm of the projection of s onto the span of eigenvectors whose
/// eigenvalue lies within the degeneracy tolerance of values[index].
double eigenspace_fidelity(const StateVector &s, const EigenDecomposition &eig, std::size_t index);

} // namespace wgvqd
