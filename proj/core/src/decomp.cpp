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

#include "wgvqd/decomp.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wgvqd {

const char *to_string(Conjugation c) {
    switch (c) {
    case Conjugation::None:
        return "none";
    case Conjugation::V:
        return "V";
    case Conjugation::W:
        return "W";
    }
    return "?";
}

std::size_t DecomposedHamiltonian::term_count() const {
    std::size_t n = 1;
    for (const TermGroup &g : groups) {
        n += g.terms.size();
    }
    return n;
}

std::string DecomposedHamiltonian::describe() const {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g*I\n", constant);
    out += buf;
    for (const TermGroup &g : groups) {
        for (const ScaledTerm &t : g.terms) {
            std::snprintf(buf, sizeof buf, "  [%s] %.17g * ", to_string(g.conjugation), t.scale);
            out += buf;
            out += t.observable.describe();
            out += '\n';
        }
    }
    return out;
}

DecomposedHamiltonian decompose(const WaveguideSpec &spec) {
    spec.validate();
    const unsigned nx = spec.n_x;
    const unsigned ny = spec.n_y;
    const double sx = spec.scale_x();
    const double sy = spec.scale_y();
    // Corner sign of the projector terms: +1 for Dirichlet (TM), -1 for Neumann (TE).
    const double b = spec.family == ModeFamily::TM ? 1.0 : -1.0;
    const QubitRange x_upper{1, nx - 1};
    const QubitRange y_upper{nx + 1, ny - 1};

    DecomposedHamiltonian h;
    h.layout = {nx, ny};
    h.constant = 2.0 * sx + 2.0 * sy;
    h.groups.push_back({Conjugation::None,
                        {
                            {sx, SimpleObservable::x_on(0, -1.0)},  // H1
                            {sy, SimpleObservable::x_on(nx, -1.0)}, // H2
                        }});
    h.groups.push_back({Conjugation::V,
                        {
                            {sx, SimpleObservable::x_on(0, -1.0)},                        // H3
                            {sx, SimpleObservable::zero_projector_times_x(x_upper, 0, 1.0)}, // H4
                            {sx, SimpleObservable::zero_projector(x_upper, b)},              // H5
                        }});
    h.groups.push_back({Conjugation::W,
                        {
                            {sy, SimpleObservable::x_on(nx, -1.0)},                         // H6
                            {sy, SimpleObservable::zero_projector_times_x(y_upper, nx, 1.0)}, // H7
                            {sy, SimpleObservable::zero_projector(y_upper, b)},               // H8
                        }});
    return h;
}

void apply_conjugation(StateVector &s, const RegisterLayout &layout, Conjugation c, ShiftDirection dir) {
    switch (c) {
    case Conjugation::None:
        return;
    case Conjugation::V:
        apply_cyclic_shift(s, layout.x(), dir);
        return;
    case Conjugation::W:
        apply_cyclic_shift(s, layout.y(), dir);
        return;
    }
}

double decomposed_expectation(const DecomposedHamiltonian &h, const StateVector &psi) {
    if (psi.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
    double total = h.constant * psi.norm_squared();
    for (const TermGroup &g : h.groups) {
        StateVector phi = psi;
        apply_conjugation(phi, h.layout, g.conjugation, ShiftDirection::Forward);
        for (const ScaledTerm &t : g.terms) {
            total += t.scale * expectation(phi, t.observable);
        }
    }
    return total;
}

StateVector apply_decomposed(const DecomposedHamiltonian &h, const StateVector &psi) {
    if (psi.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
    StateVector out = psi;
    for (Amplitude &a : out.amplitudes()) {
        a *= h.constant;
    }
    for (const TermGroup &g : h.groups) {
        StateVector phi = psi;
        apply_conjugation(phi, h.layout, g.conjugation, ShiftDirection::Forward);
        StateVector acc(std::vector<Amplitude>(psi.size(), Amplitude{}));
        for (const ScaledTerm &t : g.terms) {
            SimpleObservable scaled = t.observable;
            scaled.coefficient *= t.scale;
            accumulate_observable(phi, scaled, acc.amplitudes());
        }
        apply_conjugation(acc, h.layout, g.conjugation, ShiftDirection::Inverse);
        auto dst = out.amplitudes();
        auto src = acc.amplitudes();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += src[i];
        }
    }
    return out;
}

DenseMatrix to_dense(const SimpleObservable &o, unsigned n_qubits) {
    if (n_qubits > 12) {
        throw std::invalid_argument("dense observables are capped at 12 qubits");
    }
    if (o.span() > n_qubits) {
        throw std::out_of_range("observable acts beyond the register");
    }
    DenseMatrix identity = DenseMatrix::identity(2);
    DenseMatrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    DenseMatrix p0(2, 2);
    p0(0, 0) = 1.0;
    // Build from the top qubit down so the lowest qubit ends up as the last factor.
    DenseMatrix out = DenseMatrix::identity(1);
    for (unsigned q = n_qubits; q-- > 0;) {
        const DenseMatrix *factor = &identity;
        if (o.has_x() && q == o.x_qubit) {
            factor = &x;
        } else if (o.has_projector() && o.block.contains(q)) {
            factor = &p0;
        }
        out = kron(out, *factor);
    }
    return o.coefficient * std::move(out);
}

DenseMatrix shift_matrix(unsigned n_qubits, QubitRange reg) {
    if (reg.end() > n_qubits) {
        throw std::out_of_range("shift register exceeds qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t period = std::size_t{1} << reg.count;
    DenseMatrix p(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t low = col & ((std::size_t{1} << reg.first) - 1);
        const std::size_t field = (col >> reg.first) % period;
        const std::size_t high = col >> reg.end();
        const std::size_t row = (high << reg.end()) | (((field + 1) % period) << reg.first) | low;
        p(row, col) = 1.0;
    }
    return p;
}

DenseMatrix reconstruct_dense(const DecomposedHamiltonian &h) {
    const unsigned n = h.n_qubits();
    if (n > 12) {
        throw std::invalid_argument("dense reconstruction is capped at 12 qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix out = h.constant * DenseMatrix::identity(dim);
    for (const TermGroup &g : h.groups) {
        DenseMatrix inner(dim, dim);
        for (const ScaledTerm &t : g.terms) {
            inner += t.scale * to_dense(t.observable, n);
        }
        if (g.conjugation == Conjugation::None) {
            out += inner;
            continue;
        }
        const QubitRange reg = g.conjugation == Conjugation::V ? h.layout.x() : h.layout.y();
        const DenseMatrix u = shift_matrix(n, reg);
        out += u.transposed() * (inner * u);
    }
    return out;
}

namespace {

unsigned dense_qubits(const DenseMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || !std::has_single_bit(m.rows())) {
        throw std::invalid_argument("Pauli decomposition needs a square 2^n matrix");
    }
    return static_cast<unsigned>(std::countr_zero(m.rows()));
}

// (-i)^k
std::complex<double> minus_i_power(unsigned k) {
    static const std::complex<double> table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return table[k % 4];
}

} // namespace

std::vector<PauliTerm> pauli_decompose(const DenseMatrix &m) {
    const unsigned n = dense_qubits(m);
    if (n > 6) {
        throw std::invalid_argument("Pauli decomposition is capped at 6 qubits");
    }
    const std::size_t dim = m.rows();
    std::vector<PauliTerm> out;
    for (std::size_t xmask = 0; xmask < dim; ++xmask) {
        for (std::size_t zmask = 0; zmask < dim; ++zmask) {
            // P[r, r^x] = (-i)^{#Y} (-1)^{popcount(r & z)}
            double real_trace = 0.0;
            for (std::size_t r = 0; r < dim; ++r) {
                const double sign = (std::popcount(r & zmask) & 1) ? -1.0 : 1.0;
                real_trace += sign * m(r ^ xmask, r);
            }
            const auto ys = static_cast<unsigned>(std::popcount(xmask & zmask));
            const std::complex<double> c = minus_i_power(ys) * real_trace / static_cast<double>(dim);
            if (std::abs(c) <= 1e-12) {
                continue;
            }
            std::string label(n, 'I');
            for (unsigned q = 0; q < n; ++q) {
                const bool xq = (xmask >> q) & 1;
                const bool zq = (zmask >> q) & 1;
                label[n - 1 - q] = xq ? (zq ? 'Y' : 'X') : (zq ? 'Z' : 'I');
            }
            out.push_back({std::move(label), c});
        }
    }
    return out;
}

std::pair<DenseMatrix, DenseMatrix> pauli_reconstruct(const std::vector<PauliTerm> &terms, unsigned n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix re(dim, dim);
    DenseMatrix im(dim, dim);
    for (const PauliTerm &t : terms) {
        if (t.pauli.size() != n_qubits) {
            throw std::invalid_argument("Pauli string length does not match qubit count");
        }
        std::size_t xmask = 0;
        std::size_t zmask = 0;
        for (unsigned q = 0; q < n_qubits; ++q) {
            const char ch = t.pauli[n_qubits - 1 - q];
            if (ch == 'X' || ch == 'Y') {
                xmask |= std::size_t{1} << q;
            }
            if (ch == 'Z' || ch == 'Y') {
                zmask |= std::size_t{1} << q;
            }
        }
        const std::complex<double> phase = minus_i_power(static_cast<unsigned>(std::popcount(xmask & zmask)));
        for (std::size_t r = 0; r < dim; ++r) {
            const double sign = (std::popcount(r & zmask) & 1) ? -1.0 : 1.0;
            const std::complex<double> v = t.coefficient * phase * sign;
            re(r, r ^ xmask) += v.real();
            im(r, r ^ xmask) += v.imag();
        }
    }
    return {re, im};
}

} // namespace wgvqd
