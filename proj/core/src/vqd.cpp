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

#include "wgvqd/vqd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "wgvqd/parallel.hpp"

namespace wgvqd {

const char *to_string(GradientMode mode) {
    return mode == GradientMode::Analytic ? "analytic" : "fd";
}

const char *to_string(Classification c) {
    switch (c) {
    case Classification::Correct:
        return "correct";
    case Classification::ConvergedHigherMode:
        return "higher_mode";
    case Classification::IncorrectMinimum:
        return "incorrect_minimum";
    }
    return "?";
}

DeflatedCost::DeflatedCost(DecomposedHamiltonian hamiltonian, unsigned layers, double beta,
                           std::vector<StateVector> deflation_states)
    : h_(std::move(hamiltonian)), layers_(layers), beta_(beta), deflation_(std::move(deflation_states)) {
    if (layers_ == 0) {
        throw std::invalid_argument("ansatz needs at least one layer");
    }
    for (const StateVector &s : deflation_) {
        if (s.n_qubits() != h_.n_qubits()) {
            throw std::invalid_argument("deflation state has the wrong qubit count");
        }
    }
}

DeflatedCost::DeflatedCost(DecomposedHamiltonian hamiltonian, unsigned layers, double beta,
                           std::vector<AnsatzCircuit> deflation_circuits)
    : DeflatedCost(std::move(hamiltonian), layers, beta, std::vector<StateVector>{}) {
    deflation_circuits_ = std::move(deflation_circuits);
    for (const AnsatzCircuit &c : deflation_circuits_) {
        if (c.n_qubits != h_.n_qubits()) {
            throw std::invalid_argument("deflation circuit has the wrong qubit count");
        }
        deflation_.push_back(prepare_ansatz(c));
    }
}

AnsatzCircuit DeflatedCost::circuit(std::span<const double> theta) const {
    return AnsatzCircuit(h_.n_qubits(), layers_, std::vector<double>(theta.begin(), theta.end()));
}

StateVector DeflatedCost::state(std::span<const double> theta) const { return prepare_ansatz(circuit(theta)); }

double DeflatedCost::penalty(const StateVector &psi) const {
    double total = 0.0;
    for (const StateVector &d : deflation_) {
        total += std::norm(overlap(psi, d));
    }
    return beta_ * total;
}

double DeflatedCost::cost(std::span<const double> theta) const {
    const StateVector psi = state(theta);
    return decomposed_expectation(h_, psi) + penalty(psi);
}

double DeflatedCost::energy(std::span<const double> theta) const {
    return decomposed_expectation(h_, state(theta));
}

std::vector<double> DeflatedCost::gradient(std::span<const double> theta) const {
    const AnsatzCircuit c = circuit(theta);
    const StateVector psi = prepare_ansatz(c);
    StateVector a_psi = apply_decomposed(h_, psi);
    for (const StateVector &d : deflation_) {
        const Amplitude w = beta_ * overlap(d, psi);
        auto dst = a_psi.amplitudes();
        auto src = d.amplitudes();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += w * src[i];
        }
    }
    std::vector<double> grad(c.parameter_count());
    for (std::size_t j = 0; j < grad.size(); ++j) {
        grad[j] = overlap(derivative_state(c, j), a_psi).real();
    }
    return grad;
}

std::vector<double> DeflatedCost::gradient_extended_register(std::span<const double> theta) const {
    if (deflation_circuits_.size() != deflation_.size()) {
        throw std::logic_error("extended-register gradient needs the deflation circuits");
    }
    const AnsatzCircuit c = circuit(theta);
    const StateVector psi = prepare_ansatz(c);
    const unsigned n = h_.n_qubits();
    const unsigned ancilla = n;
    const std::size_t half = psi.size();
    const double r = 1.0 / std::numbers::sqrt2;

    std::vector<double> grad(c.parameter_count());
    for (std::size_t j = 0; j < grad.size(); ++j) {
        const StateVector dpsi = derivative_state(c, j);
        std::vector<Amplitude> amps(2 * half);
        for (std::size_t i = 0; i < half; ++i) {
            amps[i] = r * dpsi[i];
            amps[half + i] = r * psi[i];
        }
        const StateVector joint(std::move(amps));

        double value = h_.constant * expectation(joint, SimpleObservable::x_on(ancilla, 1.0));
        for (const TermGroup &g : h_.groups) {
            StateVector shifted = joint;
            apply_conjugation(shifted, h_.layout, g.conjugation, ShiftDirection::Forward);
            StateVector image(std::vector<Amplitude>(shifted.size(), Amplitude{}));
            for (const ScaledTerm &t : g.terms) {
                SimpleObservable scaled = t.observable;
                scaled.coefficient *= t.scale;
                accumulate_observable(shifted, scaled, image.amplitudes());
            }
            apply_x(image, ancilla);
            value += overlap(shifted, image).real();
        }
        for (const AnsatzCircuit &dc : deflation_circuits_) {
            StateVector phi = joint;
            apply_ansatz_adjoint(phi, dc, 0);
            value += beta_ * expectation(phi, SimpleObservable::zero_projector_times_x({0, n}, ancilla, 1.0));
        }
        grad[j] = value;
    }
    return grad;
}

std::vector<double> DeflatedCost::finite_difference_gradient(std::span<const double> theta, double eps) const {
    std::vector<double> x(theta.begin(), theta.end());
    std::vector<double> grad(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double saved = x[j];
        x[j] = saved + eps;
        const double up = cost(x);
        x[j] = saved - eps;
        const double down = cost(x);
        x[j] = saved;
        grad[j] = (up - down) / (2.0 * eps);
    }
    return grad;
}

double gradient_mismatch(std::span<const double> a, std::span<const double> ref) {
    if (a.size() != ref.size()) {
        throw std::invalid_argument("gradient length mismatch");
    }
    double scale = 0.0;
    for (double v : ref) {
        scale = std::max(scale, std::abs(v));
    }
    const double floor = std::max(1e-3 * scale, std::numeric_limits<double>::min());
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - ref[j]) / std::max(std::abs(ref[j]), floor));
    }
    return worst;
}

double spectral_bound(const WaveguideSpec &spec) { return 4.0 * spec.scale_x() + 4.0 * spec.scale_y(); }

unsigned VqdConfig::effective_layers() const { return layers == 0 ? spec.n_x + spec.n_y : layers; }

double VqdConfig::effective_beta() const { return beta == 0.0 ? 1.25 * spectral_bound(spec) : beta; }

void VqdConfig::validate() const {
    spec.validate();
    optimizer.validate();
    if (trials < 1) {
        throw std::invalid_argument("at least one trial per mode is required");
    }
    if (modes < 1 || modes > spec.dimension()) {
        throw std::invalid_argument("mode count must lie in [1, 2^n]");
    }
    if (spec.total_qubits() > 12) {
        throw std::invalid_argument("VQD runs are capped at 12 qubits (dense oracle)");
    }
    const double b = effective_beta();
    if (!std::isfinite(b) || b <= spectral_bound(spec)) {
        throw std::invalid_argument("beta must exceed the spectral bound 4 s_x + 4 s_y so it dominates every gap");
    }
}

double VqdResult::success_rate() const {
    if (trials.empty()) {
        return 0.0;
    }
    const auto correct = std::count_if(trials.begin(), trials.end(), [](const TrialOutcome &t) {
        return t.classification == Classification::Correct;
    });
    return static_cast<double>(correct) / static_cast<double>(trials.size());
}

Classification classify(const StateVector &s, const EigenDecomposition &eig, std::size_t k, double threshold) {
    if (eigenspace_fidelity(s, eig, k) >= threshold) {
        return Classification::Correct;
    }
    const double tol = eig.degeneracy_tolerance();
    for (std::size_t j = k + 1; j < eig.size(); ++j) {
        if (eig.values[j] <= eig.values[k] + tol) {
            continue;
        }
        // First index of each higher eigenspace only.
        if (j > 0 && std::abs(eig.values[j] - eig.values[j - 1]) < tol && eig.values[j - 1] > eig.values[k] + tol) {
            continue;
        }
        if (eigenspace_fidelity(s, eig, j) >= threshold) {
            return Classification::ConvergedHigherMode;
        }
    }
    return Classification::IncorrectMinimum;
}

namespace {

std::vector<double> initial_angles(std::uint64_t seed, std::size_t mode, std::size_t trial, std::size_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(mode), static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta(count);
    for (double &t : theta) {
        t = dist(rng);
    }
    return theta;
}

} // namespace

std::vector<VqdResult> solve(const VqdConfig &cfg) {
    cfg.validate();
    return solve(cfg, eigensolve_symmetric(assemble_2d(cfg.spec)));
}

std::vector<VqdResult> solve(const VqdConfig &cfg, const EigenDecomposition &oracle) {
    cfg.validate();
    if (oracle.size() != cfg.spec.dimension()) {
        throw std::invalid_argument("oracle decomposition does not match the waveguide dimension");
    }
    const DecomposedHamiltonian h = decompose(cfg.spec);
    const unsigned layers = cfg.effective_layers();
    const double beta = cfg.effective_beta();
    // Optimize in units of the spectral bound so grad_tol is scale free.
    const double unit = spectral_bound(cfg.spec);
    const std::size_t n_params = std::size_t{h.n_qubits()} * layers;

    std::vector<AnsatzCircuit> accepted;
    std::vector<VqdResult> results;
    for (std::size_t k = 0; k < cfg.modes; ++k) {
        const DeflatedCost model(h, layers, beta, accepted);

        if (k == 0 && cfg.gradient_mode == GradientMode::Analytic && cfg.gradient_self_check) {
            const std::vector<double> probe = initial_angles(cfg.seed, 0, 0, n_params);
            const double mismatch = gradient_mismatch(model.gradient(probe), model.finite_difference_gradient(probe));
            if (mismatch > 1e-4) {
                throw std::runtime_error("analytic gradient disagrees with finite differences (relative error " +
                                         std::to_string(mismatch) + ")");
            }
        }

        std::vector<TrialOutcome> outcomes(cfg.trials);
        parallel_for(cfg.trials, cfg.workers, [&](std::size_t t) {
            TrialOutcome &out = outcomes[t];
            out.trial = t;
            out.theta0 = initial_angles(cfg.seed, k, t, n_params);
            const CostFunction f = [&](std::span<const double> x) { return model.cost(x) / unit; };
            const GradientFunction g = [&](std::span<const double> x) {
                std::vector<double> grad = cfg.gradient_mode == GradientMode::Analytic
                                               ? model.gradient(x)
                                               : model.finite_difference_gradient(x);
                for (double &v : grad) {
                    v /= unit;
                }
                return grad;
            };
            OptimizationResult r = minimize(f, g, out.theta0, cfg.optimizer);
            out.theta = std::move(r.x);
            out.cost = r.cost * unit;
            out.trace = std::move(r.trace);
            const StateVector psi = model.state(out.theta);
            out.energy = decomposed_expectation(h, psi);
            out.fidelity = eigenspace_fidelity(psi, oracle, k);
            out.classification = classify(psi, oracle, k);
        });

        const auto best = std::min_element(outcomes.begin(), outcomes.end(),
                                           [](const TrialOutcome &a, const TrialOutcome &b) { return a.cost < b.cost; });
        VqdResult res;
        res.mode_index = k;
        res.theta = best->theta;
        res.energy = best->energy;
        res.cutoff_hz = eigenvalue_to_cutoff(res.energy, cfg.spec);
        res.fidelity = best->fidelity;
        res.oracle_energy = oracle.values[k];
        res.classification = best->classification;
        res.trace = best->trace;
        res.state = model.state(res.theta);
        double sum = 0.0;
        for (const TrialOutcome &o : outcomes) {
            sum += o.energy;
        }
        res.mean_energy = sum / static_cast<double>(outcomes.size());
        res.trials = std::move(outcomes);

        accepted.push_back(model.circuit(res.theta));
        results.push_back(std::move(res));
    }
    return results;
}

std::vector<std::pair<unsigned, unsigned>> mode_label(const WaveguideSpec &spec, double eigenvalue) {
    spec.validate();
    const unsigned lo = spec.family == ModeFamily::TM ? 1 : 0;
    const unsigned nx = 1u << spec.n_x;
    const unsigned ny = 1u << spec.n_y;
    struct Entry {
        unsigned m, n;
        double value;
    };
    std::vector<Entry> entries;
    entries.reserve(std::size_t{nx} * ny);
    for (unsigned n = lo; n < lo + ny; ++n) {
        for (unsigned m = lo; m < lo + nx; ++m) {
            entries.push_back({m, n, discrete_mode_eigenvalue(spec, m, n)});
        }
    }
    const auto nearest = std::min_element(entries.begin(), entries.end(), [&](const Entry &a, const Entry &b) {
        return std::abs(a.value - eigenvalue) < std::abs(b.value - eigenvalue);
    });
    const double tol = 1e-6 * assembled_max_abs(spec);
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const Entry &e : entries) {
        if (std::abs(e.value - nearest->value) <= tol) {
            out.emplace_back(e.m, e.n);
        }
    }
    return out;
}

std::string format_mode_label(ModeFamily family, const std::vector<std::pair<unsigned, unsigned>> &labels) {
    std::string out;
    char buf[32];
    for (const auto &[m, n] : labels) {
        if (!out.empty()) {
            out += '+';
        }
        if (m < 10 && n < 10) {
            std::snprintf(buf, sizeof buf, "%s%u%u", to_string(family), m, n);
        } else {
            std::snprintf(buf, sizeof buf, "%s%u_%u", to_string(family), m, n);
        }
        out += buf;
    }
    return out;
}

} // namespace wgvqd
