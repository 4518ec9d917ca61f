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
#include <string>

namespace wgvqd {

/// Contiguous run of qubits [first, first + count).
struct QubitRange {
    unsigned first = 0;
    unsigned count = 0;

    unsigned end() const { return first + count; }
    std::size_t mask() const {
        return count == 0 ? 0 : (((std::size_t{1} << count) - 1) << first);
    }
    bool contains(unsigned q) const { return q >= first && q < end(); }
};

enum class ObservableKind {
    Identity,
    XOnQubit,                 ///< X on x_qubit
    ZeroProjectorBlock,       ///< |0..0><0..0| on block, identity elsewhere
    ZeroProjectorBlockTimesX, ///< |0..0><0..0| on block times X on x_qubit
};

/// Coefficient times one of the few observables whose expectation value is a
/// single pass over the amplitudes. Every kind is either diagonal or pairs
/// each basis state with exactly one partner.
struct SimpleObservable {
    ObservableKind kind = ObservableKind::Identity;
    QubitRange block{};
    unsigned x_qubit = 0;
    double coefficient = 1.0;

    static SimpleObservable identity(double coefficient);
    static SimpleObservable x_on(unsigned qubit, double coefficient);
    static SimpleObservable zero_projector(QubitRange block, double coefficient);
    static SimpleObservable zero_projector_times_x(QubitRange block, unsigned qubit, double coefficient);

    bool has_x() const {
        return kind == ObservableKind::XOnQubit || kind == ObservableKind::ZeroProjectorBlockTimesX;
    }
    bool has_projector() const {
        return kind == ObservableKind::ZeroProjectorBlock || kind == ObservableKind::ZeroProjectorBlockTimesX;
    }
    /// Highest qubit index touched plus one.
    unsigned span() const;
    /// e.g. "-1*X[0]" or "+1*P0[4..6)X[3]"
    std::string describe() const;
};

} // namespace wgvqd
