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
#include <cstddef>
#include <span>
#include <vector>

#include "wgvqd/observable.hpp"

namespace wgvqd {

using Amplitude = std::complex<double>;

/// Dense statevector over n qubits. Qubit q is bit q of the basis index, so
/// qubit 0 is the least significant tensor factor.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(unsigned n_qubits);
    /// Takes ownership of the amplitudes; the size must be a power of two.
    explicit StateVector(std::vector<Amplitude> amplitudes);

    static StateVector basis(unsigned n_qubits, std::size_t index);

    unsigned n_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }

    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude &operator[](std::size_t i) { return amps_[i]; }
    const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    /// Largest |Im(a_i)|.
    double max_imag() const;
    std::vector<double> real_parts() const;

  private:
    unsigned n_;
    std::vector<Amplitude> amps_;
};

// Gates. All act in place and throw std::out_of_range on a bad qubit index.

void apply_x(StateVector &s, unsigned qubit);
/// Ry(theta) = exp(-i theta Y / 2).
void apply_ry(StateVector &s, unsigned qubit, double theta);
void apply_cnot(StateVector &s, unsigned control, unsigned target);
/// X on target when every qubit in control_mask is |1>.
void apply_mcx(StateVector &s, std::size_t control_mask, unsigned target);

/// Layered hardware-efficient ansatz: each layer is Ry on every qubit
/// followed by CNOT(q, q+1) for q = 0..n-2.
struct AnsatzCircuit {
    unsigned n_qubits = 1;
    unsigned layers = 1;
    /// theta[layer * n_qubits + qubit]
    std::vector<double> theta;

    AnsatzCircuit() = default;
    AnsatzCircuit(unsigned n_qubits, unsigned layers);
    AnsatzCircuit(unsigned n_qubits, unsigned layers, std::vector<double> theta);

    std::size_t parameter_count() const { return std::size_t{n_qubits} * layers; }
    double &angle(unsigned layer, unsigned qubit) { return theta[std::size_t{layer} * n_qubits + qubit]; }
    double angle(unsigned layer, unsigned qubit) const { return theta[std::size_t{layer} * n_qubits + qubit]; }
};

/// U(theta)|0...0>.
StateVector prepare_ansatz(const AnsatzCircuit &c);
/// Applies U(theta) to qubits [offset, offset + c.n_qubits) of s.
void apply_ansatz(StateVector &s, const AnsatzCircuit &c, unsigned offset = 0);
/// Applies U(theta)^dagger to qubits [offset, offset + c.n_qubits) of s.
void apply_ansatz_adjoint(StateVector &s, const AnsatzCircuit &c, unsigned offset = 0);

/// U(theta with theta_j + pi)|0...0>, i.e. twice the partial derivative of
/// the ansatz state with respect to theta_j. The state is normalized; the
/// caller supplies the factor 1/2.
StateVector derivative_state(const AnsatzCircuit &c, std::size_t j);

enum class ShiftDirection { Forward, Inverse };
enum class ShiftRealization {
    Permutation,  ///< direct index relabelling
    ToffoliChain, ///< product of multi-controlled X gates
};

/// Cyclic increment |i> -> |(i+1) mod 2^k> on the k-qubit register `reg`
/// (or decrement for Inverse), leaving other qubits untouched.
void apply_cyclic_shift(StateVector &s, QubitRange reg, ShiftDirection dir,
                        ShiftRealization how = ShiftRealization::Permutation);

/// x register occupies the n_x low qubits, y register the n_y above it.
struct RegisterLayout {
    unsigned n_x = 0;
    unsigned n_y = 0;

    QubitRange x() const { return {0, n_x}; }
    QubitRange y() const { return {n_x, n_y}; }
    unsigned total() const { return n_x + n_y; }
};

/// Exact <s|O|s>. Throws std::out_of_range if O touches a qubit >= n, and
/// std::runtime_error if the imaginary residue exceeds 1e-12 * |O|.
double expectation(const StateVector &s, const SimpleObservable &o);
/// O|s> as a new state (not normalized).
StateVector apply_observable(const StateVector &s, const SimpleObservable &o);
/// out += O|s>.
void accumulate_observable(const StateVector &s, const SimpleObservable &o, std::span<Amplitude> out);

/// <a|b>; throws std::invalid_argument on size mismatch.
Amplitude overlap(const StateVector &a, const StateVector &b);

} // namespace wgvqd
