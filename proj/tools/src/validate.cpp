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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "io.hpp"
#include "wgvqd/decomp.hpp"
#include "wgvqd/eigoracle.hpp"
#include "wgvqd_tools/commands.hpp"

namespace wgvqd::app {

namespace {

using Rng = std::mt19937_64;

WaveguideSpec grid_spec(unsigned nx, unsigned ny, ModeFamily family) {
    WaveguideSpec s;
    s.n_x = nx;
    s.n_y = ny;
    s.family = family;
    return s;
}

std::vector<double> random_angles(std::size_t count, Rng &rng) {
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    std::vector<double> out(count);
    for (double &v : out) {
        v = dist(rng);
    }
    return out;
}

StateVector random_state(unsigned n, Rng &rng) {
    std::normal_distribution<double> dist;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {dist(rng), dist(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(std::move(amps));
}

double dense_expectation(const DenseMatrix &m, const StateVector &s) {
    Amplitude total = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Amplitude row = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row += m(i, j) * s[j];
        }
        total += std::conj(s[i]) * row;
    }
    return total.real();
}

DecomposedHamiltonian maybe_faulty(const WaveguideSpec &spec, bool inject_fault) {
    DecomposedHamiltonian h = decompose(spec);
    if (inject_fault) {
        h.groups[1].terms[1].observable.coefficient += 1e-6;
    }
    return h;
}

class Checks {
  public:
    void add(const char *module, const char *name, double residual, double tolerance) {
        out_.push_back({module, name, residual, tolerance, std::isfinite(residual) && residual <= tolerance});
    }
    std::vector<CheckResult> take() { return std::move(out_); }

  private:
    std::vector<CheckResult> out_;
};

void fdm_checks(Checks &checks) {
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
        double worst = 0.0;
        for (unsigned n = 1; n <= 5; ++n) {
            const auto eig = eigensolve_symmetric(build_1d_operator(n, bc));
            const auto closed = operator_1d_spectrum(n, bc);
            for (std::size_t i = 0; i < closed.size(); ++i) {
                worst = std::max(worst, std::abs(eig.values[i] - closed[i]));
            }
        }
        checks.add("fdm", bc == BoundaryCondition::Dirichlet ? "spectrum_1d_dirichlet" : "spectrum_1d_neumann",
                   worst, 1e-10);
    }
    double worst = 0.0;
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        for (unsigned nx = 1; nx <= 3; ++nx) {
            for (unsigned ny = 1; ny <= 3; ++ny) {
                const WaveguideSpec s = grid_spec(nx, ny, family);
                const auto eig = eigensolve_symmetric(assemble_2d(s));
                std::vector<double> sums;
                for (double mu : operator_1d_spectrum(nx, boundary_for(family))) {
                    for (double nu : operator_1d_spectrum(ny, boundary_for(family))) {
                        sums.push_back(s.scale_x() * mu + s.scale_y() * nu);
                    }
                }
                std::sort(sums.begin(), sums.end());
                for (std::size_t i = 0; i < sums.size(); ++i) {
                    worst = std::max(worst, std::abs(eig.values[i] - sums[i]) / eig.matrix_norm);
                }
            }
        }
    }
    checks.add("fdm", "kronecker_sum_spectrum", worst, 1e-10);
}

void eigoracle_checks(Checks &checks, Rng &rng) {
    std::normal_distribution<double> dist;
    const std::size_t n = 32;
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m(i, j) = m(j, i) = dist(rng);
        }
    }
    const auto eig = eigensolve_symmetric(m);
    DenseMatrix lambda(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        lambda(i, i) = eig.values[i];
    }
    checks.add("eigoracle", "reconstruction",
               max_abs_diff(eig.vectors * lambda * eig.vectors.transposed(), m) / m.max_abs(), 1e-11);
    checks.add("eigoracle", "orthonormal_vectors",
               max_abs_diff(eig.vectors.transposed() * eig.vectors, DenseMatrix::identity(n)), 1e-12);
}

void decomp_checks(Checks &checks, Rng &rng, bool inject_fault) {
    double worst = 0.0;
    double worst_pauli = 0.0;
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        for (unsigned nx = 1; nx <= 3; ++nx) {
            for (unsigned ny = 1; ny <= 3; ++ny) {
                const WaveguideSpec s = grid_spec(nx, ny, family);
                const DenseMatrix m = assemble_2d(s);
                const DenseMatrix r = reconstruct_dense(maybe_faulty(s, inject_fault));
                worst = std::max(worst, max_abs_diff(m, r) / m.max_abs());
                if (nx + ny <= 4) {
                    const auto [re, im] = pauli_reconstruct(pauli_decompose(m), nx + ny);
                    worst_pauli = std::max({worst_pauli, max_abs_diff(re, m) / m.max_abs(), im.max_abs() / m.max_abs()});
                }
            }
        }
    }
    checks.add("decomp", "reconstruct_dense_equivalence", worst, 1e-12);
    checks.add("decomp", "pauli_reconstruction", worst_pauli, 1e-10);

    worst = 0.0;
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        for (const auto &[nx, ny] : {std::pair{1u, 1u}, {2u, 2u}, {3u, 3u}, {4u, 2u}}) {
            const WaveguideSpec s = grid_spec(nx, ny, family);
            const DenseMatrix m = assemble_2d(s);
            const auto h = maybe_faulty(s, inject_fault);
            for (int rep = 0; rep < 5; ++rep) {
                const StateVector psi = random_state(nx + ny, rng);
                worst = std::max(worst, std::abs(decomposed_expectation(h, psi) - dense_expectation(m, psi)) /
                                            m.max_abs());
            }
        }
    }
    checks.add("decomp", "expectation_vs_dense", worst, 1e-10);
}

void qsim_checks(Checks &checks, Rng &rng) {
    double norm_err = 0.0;
    double imag = 0.0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned layers = 1; layers <= 4; ++layers) {
            const AnsatzCircuit c(n, layers, random_angles(std::size_t{n} * layers, rng));
            const StateVector psi = prepare_ansatz(c);
            norm_err = std::max(norm_err, std::abs(psi.norm_squared() - 1.0));
            imag = std::max(imag, psi.max_imag());
            StateVector t = random_state(n, rng);
            apply_ansatz(t, c);
            norm_err = std::max(norm_err, std::abs(t.norm_squared() - 1.0));
        }
    }
    checks.add("qsim", "norm_preservation", norm_err, 1e-12);
    checks.add("qsim", "real_amplitudes", imag, 0.0);

    double shift_err = 0.0;
    double dense_err = 0.0;
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned first = 0; first + k <= 6; ++first) {
            const StateVector s = random_state(6, rng);
            for (auto dir : {ShiftDirection::Forward, ShiftDirection::Inverse}) {
                StateVector a = s;
                StateVector b = s;
                apply_cyclic_shift(a, {first, k}, dir, ShiftRealization::Permutation);
                apply_cyclic_shift(b, {first, k}, dir, ShiftRealization::ToffoliChain);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    shift_err = std::max(shift_err, std::abs(a[i] - b[i]));
                }
                if (dir == ShiftDirection::Forward) {
                    const DenseMatrix p = shift_matrix(6, {first, k});
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        Amplitude ref = 0.0;
                        for (std::size_t j = 0; j < s.size(); ++j) {
                            ref += p(i, j) * s[j];
                        }
                        dense_err = std::max(dense_err, std::abs(a[i] - ref));
                    }
                }
            }
        }
    }
    checks.add("qsim", "shift_permutation_vs_mcx_chain", shift_err, 0.0);
    checks.add("qsim", "shift_vs_dense_permutation", dense_err, 0.0);
}

void vqd_checks(Checks &checks, Rng &rng) {
    DecomposedHamiltonian toy;
    toy.layout = {1, 0};
    toy.constant = 1.0;
    toy.groups.push_back({Conjugation::None, {{1.0, SimpleObservable::x_on(0, -1.0)}}});
    const DeflatedCost toy_model(toy, 1, 0.0);
    double cost_err = 0.0;
    double grad_err = 0.0;
    for (int i = 0; i < 16; ++i) {
        const std::vector<double> theta = {-std::numbers::pi + i * std::numbers::pi / 8};
        cost_err = std::max(cost_err, std::abs(toy_model.cost(theta) - (1.0 - std::sin(theta[0]))));
        grad_err = std::max(grad_err, std::abs(toy_model.gradient(theta)[0] + std::cos(theta[0])));
    }
    checks.add("vqd", "toy_cost_one_minus_sin", cost_err, 1e-12);
    checks.add("vqd", "toy_gradient_minus_cos", grad_err, 1e-12);

    double fd_err = 0.0;
    double ancilla_err = 0.0;
    double dense_err = 0.0;
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        const WaveguideSpec s = grid_spec(2, 2, family);
        const auto h = decompose(s);
        const DenseMatrix m = assemble_2d(s);
        const unsigned layers = 4;
        const double beta = 1.25 * spectral_bound(s);
        std::vector<AnsatzCircuit> previous;
        for (std::size_t k = 0; k <= 2; ++k) {
            const DeflatedCost model(h, layers, beta, previous);
            for (int rep = 0; rep < 20; ++rep) {
                const auto theta = random_angles(model.parameter_count(), rng);
                const auto g = model.gradient(theta);
                fd_err = std::max(fd_err, gradient_mismatch(g, model.finite_difference_gradient(theta)));
                ancilla_err = std::max(ancilla_err, gradient_mismatch(model.gradient_extended_register(theta), g));
                const StateVector psi = model.state(theta);
                double dense = dense_expectation(m, psi);
                for (const StateVector &d : model.deflation_states()) {
                    dense += beta * std::norm(overlap(d, psi));
                }
                dense_err = std::max(dense_err, std::abs(model.cost(theta) - dense) / beta);
            }
            previous.emplace_back(4, layers, random_angles(std::size_t{4} * layers, rng));
        }
    }
    checks.add("vqd", "gradient_vs_finite_difference", fd_err, 1e-6);
    checks.add("vqd", "extended_register_gradient", ancilla_err, 1e-10);
    checks.add("vqd", "cost_vs_dense_with_penalty", dense_err, 1e-10);

    const WaveguideSpec s = grid_spec(2, 2, ModeFamily::TM);
    const DeflatedCost model(decompose(s), 4, 1.0);
    const auto eig = eigensolve_symmetric(assemble_2d(s));
    double violation = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const auto theta = random_angles(model.parameter_count(), rng);
        violation = std::max(violation, (eig.values[0] - model.cost(theta)) / eig.matrix_norm);
    }
    checks.add("vqd", "variational_upper_bound", std::max(0.0, violation), 1e-9);
}

} // namespace

std::vector<CheckResult> run_validation(bool inject_fault) {
    Rng rng(0x5eed);
    Checks checks;
    fdm_checks(checks);
    eigoracle_checks(checks, rng);
    decomp_checks(checks, rng, inject_fault);
    qsim_checks(checks, rng);
    vqd_checks(checks, rng);
    return checks.take();
}

bool cmd_validate(const RunConfig &cfg) {
    const auto results = run_validation(cfg.inject_fault);
    std::string report;
    std::size_t failed = 0;
    for (const CheckResult &r : results) {
        failed += r.passed ? 0 : 1;
        report += std::string(r.passed ? "PASS" : "FAIL") + " " + r.module + " " + r.name +
                  " residual=" + format_residual(r.residual) + " tolerance=" + format_residual(r.tolerance) + "\n";
    }
    report += std::to_string(results.size()) + " checks, " + std::to_string(failed) + " failed\n";
    write_text_file(cfg.out_dir, "validate.txt", report);
    return failed == 0;
}

} // namespace wgvqd::app
