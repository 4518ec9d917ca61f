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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgvqd/decomp.hpp"
#include "wgvqd/eigoracle.hpp"
#include "wgvqd/fdm.hpp"
#include "wgvqd/optim.hpp"
#include "wgvqd/qsim.hpp"

namespace wgvqd {

enum class GradientMode { Analytic, FiniteDifference };
enum class Classification { Correct, ConvergedHigherMode, IncorrectMinimum };

const char *to_string(GradientMode mode);
const char *to_string(Classification c);

/// Penalized cost F_k(theta) = <psi|M|psi> + beta * sum_i |<psi|psi_i>|^2 for
/// the hardware-efficient ansatz, with M evaluated through its decomposition.
class DeflatedCost {
  public:
    DeflatedCost(DecomposedHamiltonian hamiltonian, unsigned layers, double beta,
                 std::vector<StateVector> deflation_states = {});
    /// Deflation states given by the circuits that prepare them, which also
    /// enables gradient_extended_register().
    DeflatedCost(DecomposedHamiltonian hamiltonian, unsigned layers, double beta,
                 std::vector<AnsatzCircuit> deflation_circuits);

    const DecomposedHamiltonian &hamiltonian() const { return h_; }
    unsigned layers() const { return layers_; }
    double beta() const { return beta_; }
    std::size_t parameter_count() const { return std::size_t{h_.n_qubits()} * layers_; }
    const std::vector<StateVector> &deflation_states() const { return deflation_; }

    AnsatzCircuit circuit(std::span<const double> theta) const;
    StateVector state(std::span<const double> theta) const;

    double cost(std::span<const double> theta) const;
    /// <psi|M|psi> without the penalty.
    double energy(std::span<const double> theta) const;
    double penalty(const StateVector &psi) const;

    /// dF/dtheta_j = Re <d_j psi| A |psi> with A = M + beta sum |psi_i><psi_i|
    /// and d_j psi the pi-shifted ansatz state.
    std::vector<double> gradient(std::span<const double> theta) const;
    /// Same quantity through an ancilla qubit: <X (x) M> on
    /// (|0>|d_j psi> + |1>|psi>)/sqrt2 plus beta <X (x) |0><0|> on the state
    /// with U^dagger(theta_i) applied to the lower register. Needs the
    /// circuit-based constructor when there are deflation states.
    std::vector<double> gradient_extended_register(std::span<const double> theta) const;
    /// Central differences of cost() with step eps.
    std::vector<double> finite_difference_gradient(std::span<const double> theta, double eps = 1e-5) const;

  private:
    DecomposedHamiltonian h_;
    unsigned layers_;
    double beta_;
    std::vector<StateVector> deflation_;
    std::vector<AnsatzCircuit> deflation_circuits_;
};

/// max_j |a_j - ref_j| / max(|ref_j|, 1e-3 * ||ref||_inf). Components far
/// below the gradient's overall magnitude are compared against that floor.
double gradient_mismatch(std::span<const double> a, std::span<const double> ref);

struct VqdConfig {
    WaveguideSpec spec;
    unsigned layers = 0;      ///< 0 selects n_x + n_y
    std::size_t modes = 1;    ///< deflation steps k = 0..modes-1
    double beta = 0.0;        ///< 0 selects 1.25 * (4 s_x + 4 s_y)
    unsigned trials = 5;
    std::uint64_t seed = 20221;
    GradientMode gradient_mode = GradientMode::Analytic;
    OptimizerConfig optimizer{};
    unsigned workers = 1;     ///< threads for the trials of one mode
    bool gradient_self_check = true;

    unsigned effective_layers() const;
    double effective_beta() const;
    void validate() const;
};

/// Upper bound on the largest eigenvalue: 4 s_x + 4 s_y.
double spectral_bound(const WaveguideSpec &spec);

struct TrialOutcome {
    std::size_t trial = 0;
    std::vector<double> theta0;
    std::vector<double> theta;
    double cost = 0.0;
    double energy = 0.0;
    double fidelity = 0.0;
    Classification classification = Classification::IncorrectMinimum;
    OptimizationTrace trace;
};

struct VqdResult {
    std::size_t mode_index = 0;
    std::vector<double> theta;
    double energy = 0.0;
    double cutoff_hz = 0.0;
    /// Against the oracle eigenspace of eigenvalue index mode_index.
    double fidelity = 0.0;
    double oracle_energy = 0.0;
    Classification classification = Classification::IncorrectMinimum;
    OptimizationTrace trace;
    std::vector<TrialOutcome> trials;
    double mean_energy = 0.0;
    StateVector state{1};

    double success_rate() const;
};

/// Fidelity-based classification of a converged state for eigenvalue index k.
Classification classify(const StateVector &s, const EigenDecomposition &eig, std::size_t k, double threshold = 0.95);

/// Variational quantum deflation: modes are found one after another, each
/// penalizing overlap with the states accepted before it. Throws
/// std::runtime_error if the analytic gradient disagrees with finite
/// differences by more than 1e-4 at the first starting point.
std::vector<VqdResult> solve(const VqdConfig &cfg);
/// Same, reusing a precomputed oracle decomposition of assemble_2d(cfg.spec).
std::vector<VqdResult> solve(const VqdConfig &cfg, const EigenDecomposition &oracle);

/// Physical (m, n) indices whose discrete eigenvalue lies within 1e-6 ||M||
/// of the entry nearest to `eigenvalue`; more than one entry means the
/// eigenvalue is degenerate.
std::vector<std::pair<unsigned, unsigned>> mode_label(const WaveguideSpec &spec, double eigenvalue);

/// "TE10", "TM21", or "TE10+TE01" for a degenerate set.
std::string format_mode_label(ModeFamily family, const std::vector<std::pair<unsigned, unsigned>> &labels);

} // namespace wgvqd
