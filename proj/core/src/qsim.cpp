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

#include "wgvqd/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace wgvqd {

namespace {

void check_qubit(const StateVector &s, unsigned q) {
    if (q >= s.n_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                std::to_string(s.n_qubits()) + "-qubit state");
    }
}

void check_range(const StateVector &s, QubitRange r) {
    if (r.end() > s.n_qubits()) {
        throw std::out_of_range("qubit range [" + std::to_string(r.first) + ", " + std::to_string(r.end()) +
                                ") out of range for " + std::to_string(s.n_qubits()) + "-qubit state");
    }
}

void check_observable(const StateVector &s, const SimpleObservable &o) {
    if (o.span() > s.n_qubits()) {
        throw std::out_of_range("observable " + o.describe() + " acts beyond the " +
                                std::to_string(s.n_qubits()) + "-qubit state");
    }
}

} // namespace

StateVector::StateVector(unsigned n_qubits) : n_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Amplitude> amplitudes) : n_(0), amps_(std::move(amplitudes)) {
    if (amps_.empty() || !std::has_single_bit(amps_.size())) {
        throw std::invalid_argument("statevector length must be a power of two");
    }
    n_ = static_cast<unsigned>(std::countr_zero(amps_.size()));
}

StateVector StateVector::basis(unsigned n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::max_imag() const {
    double worst = 0.0;
    for (const Amplitude &a : amps_) {
        worst = std::max(worst, std::abs(a.imag()));
    }
    return worst;
}

std::vector<double> StateVector::real_parts() const {
    std::vector<double> out(amps_.size());
    std::transform(amps_.begin(), amps_.end(), out.begin(), [](const Amplitude &a) { return a.real(); });
    return out;
}

void apply_x(StateVector &s, unsigned qubit) {
    check_qubit(s, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    auto a = s.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & bit)) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

void apply_ry(StateVector &s, unsigned qubit, double theta) {
    check_qubit(s, qubit);
    const double c = std::cos(0.5 * theta);
    const double sn = std::sin(0.5 * theta);
    const std::size_t bit = std::size_t{1} << qubit;
    auto a = s.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Amplitude a0 = a[i];
        const Amplitude a1 = a[i | bit];
        a[i] = c * a0 - sn * a1;
        a[i | bit] = sn * a0 + c * a1;
    }
}

void apply_cnot(StateVector &s, unsigned control, unsigned target) {
    check_qubit(s, control);
    check_qubit(s, target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target coincide");
    }
    apply_mcx(s, std::size_t{1} << control, target);
}

void apply_mcx(StateVector &s, std::size_t control_mask, unsigned target) {
    check_qubit(s, target);
    const std::size_t bit = std::size_t{1} << target;
    if (control_mask & bit) {
        throw std::invalid_argument("multi-controlled X target is also a control");
    }
    if (control_mask >> s.n_qubits()) {
        throw std::out_of_range("control mask exceeds register");
    }
    auto a = s.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & bit) && (i & control_mask) == control_mask) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

AnsatzCircuit::AnsatzCircuit(unsigned n_qubits_, unsigned layers_)
    : n_qubits(n_qubits_), layers(layers_), theta(std::size_t{n_qubits_} * layers_, 0.0) {}

AnsatzCircuit::AnsatzCircuit(unsigned n_qubits_, unsigned layers_, std::vector<double> theta_)
    : n_qubits(n_qubits_), layers(layers_), theta(std::move(theta_)) {
    if (theta.size() != parameter_count()) {
        throw std::invalid_argument("ansatz expects " + std::to_string(parameter_count()) + " angles, got " +
                                    std::to_string(theta.size()));
    }
}

void apply_ansatz(StateVector &s, const AnsatzCircuit &c, unsigned offset) {
    if (c.theta.size() != c.parameter_count()) {
        throw std::invalid_argument("ansatz angle count does not match its shape");
    }
    check_range(s, {offset, c.n_qubits});
    for (unsigned layer = 0; layer < c.layers; ++layer) {
        for (unsigned q = 0; q < c.n_qubits; ++q) {
            apply_ry(s, offset + q, c.angle(layer, q));
        }
        for (unsigned q = 0; q + 1 < c.n_qubits; ++q) {
            apply_cnot(s, offset + q, offset + q + 1);
        }
    }
}

void apply_ansatz_adjoint(StateVector &s, const AnsatzCircuit &c, unsigned offset) {
    if (c.theta.size() != c.parameter_count()) {
        throw std::invalid_argument("ansatz angle count does not match its shape");
    }
    check_range(s, {offset, c.n_qubits});
    for (unsigned layer = c.layers; layer-- > 0;) {
        for (unsigned q = c.n_qubits - 1; q-- > 0;) {
            apply_cnot(s, offset + q, offset + q + 1);
        }
        for (unsigned q = 0; q < c.n_qubits; ++q) {
            apply_ry(s, offset + q, -c.angle(layer, q));
        }
    }
}

StateVector prepare_ansatz(const AnsatzCircuit &c) {
    StateVector s(c.n_qubits);
    apply_ansatz(s, c, 0);
    return s;
}

StateVector derivative_state(const AnsatzCircuit &c, std::size_t j) {
    if (j >= c.parameter_count()) {
        throw std::out_of_range("parameter index " + std::to_string(j) + " out of range");
    }
    AnsatzCircuit shifted = c;
    shifted.theta[j] += std::numbers::pi;
    return prepare_ansatz(shifted);
}

void apply_cyclic_shift(StateVector &s, QubitRange reg, ShiftDirection dir, ShiftRealization how) {
    check_range(s, reg);
    if (reg.count == 0) {
        return;
    }
    if (how == ShiftRealization::ToffoliChain) {
        // Increment: flip bit t when all lower register bits are set, highest
        // bit first so the controls still hold their original values.
        auto gate = [&](unsigned t) {
            const std::size_t controls = QubitRange{reg.first, t}.mask();
            apply_mcx(s, controls, reg.first + t);
        };
        if (dir == ShiftDirection::Forward) {
            for (unsigned t = reg.count; t-- > 0;) {
                gate(t);
            }
        } else {
            for (unsigned t = 0; t < reg.count; ++t) {
                gate(t);
            }
        }
        return;
    }
    const std::size_t mask = reg.mask();
    const std::size_t period = std::size_t{1} << reg.count;
    const std::size_t step = dir == ShiftDirection::Forward ? 1 : period - 1;
    auto a = s.amplitudes();
    std::vector<Amplitude> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t field = (i & mask) >> reg.first;
        const std::size_t moved = (field + step) & (period - 1);
        out[(i & ~mask) | (moved << reg.first)] = a[i];
    }
    std::copy(out.begin(), out.end(), a.begin());
}

double expectation(const StateVector &s, const SimpleObservable &o) {
    check_observable(s, o);
    auto a = s.amplitudes();
    const std::size_t block = o.has_projector() ? o.block.mask() : 0;
    Amplitude total = 0.0;
    switch (o.kind) {
    case ObservableKind::Identity:
        total = s.norm_squared();
        break;
    case ObservableKind::ZeroProjectorBlock:
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!(i & block)) {
                total += std::norm(a[i]);
            }
        }
        break;
    case ObservableKind::XOnQubit:
    case ObservableKind::ZeroProjectorBlockTimesX: {
        const std::size_t bit = std::size_t{1} << o.x_qubit;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!(i & block)) {
                total += std::conj(a[i]) * a[i ^ bit];
            }
        }
        break;
    }
    }
    if (std::abs(total.imag()) > 1e-12 * std::max(1.0, std::abs(total))) {
        throw std::runtime_error("expectation of Hermitian observable has imaginary part " +
                                 std::to_string(total.imag()));
    }
    return o.coefficient * total.real();
}

void accumulate_observable(const StateVector &s, const SimpleObservable &o, std::span<Amplitude> out) {
    check_observable(s, o);
    if (out.size() != s.size()) {
        throw std::invalid_argument("output buffer size mismatch");
    }
    auto a = s.amplitudes();
    const double c = o.coefficient;
    const std::size_t block = o.has_projector() ? o.block.mask() : 0;
    const std::size_t bit = o.has_x() ? std::size_t{1} << o.x_qubit : 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & block)) {
            out[i] += c * a[i ^ bit];
        }
    }
}

StateVector apply_observable(const StateVector &s, const SimpleObservable &o) {
    StateVector out(std::vector<Amplitude>(s.size(), Amplitude{}));
    accumulate_observable(s, o, out.amplitudes());
    return out;
}

Amplitude overlap(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("overlap of states with different sizes");
    }
    Amplitude total = 0.0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += std::conj(x[i]) * y[i];
    }
    return total;
}

} // namespace wgvqd
