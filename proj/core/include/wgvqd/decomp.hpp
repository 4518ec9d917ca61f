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

#include <complex>
#include <string>
#include <vector>

#include "wgvqd/fdm.hpp"
#include "wgvqd/observable.hpp"
#include "wgvqd/qsim.hpp"

namespace wgvqd {

/// Which cyclic shift conjugates a group: none, V on the x register, or W on
/// the y register.
enum class Conjugation { None, V, W };

const char *to_string(Conjugation c);

/// A unit-step observable paired with the axis scale (1/dx^2 or 1/dy^2)
/// that restores physical units.
struct ScaledTerm {
    double scale = 1.0;
    SimpleObservable observable;
};

struct TermGroup {
    Conjugation conjugation = Conjugation::None;
    std::vector<ScaledTerm> terms;
};

/// constant * I + sum over groups of U^dagger (sum of scale * term) U, with
/// U the group's shift. For a waveguide operator the groups are
///   None: {H1, H2}, V: {H3, H4, H5}, W: {H6, H7, H8}
/// with H1, H3, H4, H5 scaled by s_x and H2, H6, H7, H8 by s_y.
struct DecomposedHamiltonian {
    RegisterLayout layout;
    double constant = 0.0;
    std::vector<TermGroup> groups;

    unsigned n_qubits() const { return layout.total(); }
    /// Number of expectation values one cost evaluation needs (terms plus the constant).
    std::size_t term_count() const;
    std::string describe() const;
};

DecomposedHamiltonian decompose(const WaveguideSpec &spec);

/// The shift unitary for a conjugation group applied in place.
void apply_conjugation(StateVector &s, const RegisterLayout &layout, Conjugation c, ShiftDirection dir);

/// <psi|H|psi> evaluated term by term on the shifted states.
double decomposed_expectation(const DecomposedHamiltonian &h, const StateVector &psi);

/// H|psi> evaluated term by term.
StateVector apply_decomposed(const DecomposedHamiltonian &h, const StateVector &psi);

/// Explicit matrix of a simple observable on n qubits.
DenseMatrix to_dense(const SimpleObservable &o, unsigned n_qubits);

/// Permutation matrix |(i+1) mod 2^k><i| acting on register `reg` of n qubits.
DenseMatrix shift_matrix(unsigned n_qubits, QubitRange reg);

/// Dense constant * I + sum scale * U^T (sum terms) U. Limited to 12 qubits.
DenseMatrix reconstruct_dense(const DecomposedHamiltonian &h);

struct PauliTerm {
    /// Leftmost character is the highest qubit, matching Kronecker order.
    std::string pauli;
    std::complex<double> coefficient;
};

/// Coefficients c_P = tr(P M) / 2^n with |c_P| > 1e-12. Limited to 6 qubits.
std::vector<PauliTerm> pauli_decompose(const DenseMatrix &m);

/// Sum c_P P as a complex matrix, returned as (real part, imaginary part).
std::pair<DenseMatrix, DenseMatrix> pauli_reconstruct(const std::vector<PauliTerm> &terms, unsigned n_qubits);

} // namespace wgvqd
