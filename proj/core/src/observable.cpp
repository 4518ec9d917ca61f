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

#include "wgvqd/observable.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace wgvqd {

SimpleObservable SimpleObservable::identity(double coefficient) {
    return {ObservableKind::Identity, {}, 0, coefficient};
}

SimpleObservable SimpleObservable::x_on(unsigned qubit, double coefficient) {
    return {ObservableKind::XOnQubit, {}, qubit, coefficient};
}

SimpleObservable SimpleObservable::zero_projector(QubitRange block, double coefficient) {
    return {ObservableKind::ZeroProjectorBlock, block, 0, coefficient};
}

SimpleObservable SimpleObservable::zero_projector_times_x(QubitRange block, unsigned qubit, double coefficient) {
    if (block.contains(qubit)) {
        throw std::invalid_argument("X qubit must lie outside the projector block");
    }
    return {ObservableKind::ZeroProjectorBlockTimesX, block, qubit, coefficient};
}

unsigned SimpleObservable::span() const {
    unsigned top = 0;
    if (has_x()) {
        top = x_qubit + 1;
    }
    if (has_projector()) {
        top = std::max(top, block.end());
    }
    return top;
}

std::string SimpleObservable::describe() const {
    char buf[96];
    std::string body;
    if (has_projector() && block.count > 0) {
        std::snprintf(buf, sizeof buf, "P0[%u..%u)", block.first, block.end());
        body += buf;
    }
    if (has_x()) {
        std::snprintf(buf, sizeof buf, "X[%u]", x_qubit);
        body += buf;
    }
    if (body.empty()) {
        body = "I";
    }
    std::snprintf(buf, sizeof buf, "%+.17g*", coefficient);
    return buf + body;
}

} // namespace wgvqd
