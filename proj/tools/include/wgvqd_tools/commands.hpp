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

#include <string>
#include <vector>

#include "wgvqd_tools/run_config.hpp"

namespace wgvqd::app {

struct ModeTableRow {
    std::string label;
    ModeFamily family = ModeFamily::TE;
    double vqa_cutoff_ghz = 0.0;
    double classical_cutoff_ghz = 0.0;
    double analytic_cutoff_ghz = 0.0;
    double rel_err_vqa_vs_classical = 0.0;
    double rel_err_classical_vs_analytic = 0.0;
    double fidelity = 0.0;
    /// Classification of the best trial, or "failed: <reason>".
    std::string status;
    std::vector<double> cells; ///< heatmap values, empty when the run failed
};

/// Runs VQD per family and writes modes.csv plus one mode_<label>.svg per row.
std::vector<ModeTableRow> cmd_modes(const RunConfig &cfg);

struct SweepRow {
    unsigned nx = 0;
    unsigned ny = 0;
    std::string mode;
    double rel_diff = 0.0;
};

/// Classical TE10 / TM11 cut-off versus the analytic value per grid size.
/// Optional VQD rows go to sweep_vqd.csv.
std::vector<SweepRow> cmd_sweep(const RunConfig &cfg);

/// Oracle eigenvalue index carrying mode (m, n), or -1 when the grid is too
/// coarse to resolve it.
long find_mode_index(const WaveguideSpec &spec, const EigenDecomposition &eig, unsigned m, unsigned n);

struct LayerRow {
    unsigned nx = 0;
    unsigned ny = 0;
    unsigned layers = 0;
    unsigned trials = 0;
    unsigned correct = 0;
    unsigned higher_mode = 0;
    unsigned incorrect_minimum = 0;
    double success_rate = 0.0;
    std::string color;
};

/// green: every trial Correct; amber: at least half ConvergedHigherMode;
/// red: at least half IncorrectMinimum; mixed otherwise.
std::string layer_color(unsigned correct, unsigned higher_mode, unsigned incorrect_minimum, unsigned trials);

/// TM11 success rate across scenarios and ansatz depths; writes layers.csv.
std::vector<LayerRow> cmd_layers(const RunConfig &cfg);

struct CheckResult {
    std::string module;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Cross-module oracle checks at up to 6 qubits.
std::vector<CheckResult> run_validation(bool inject_fault);
/// Runs the checks and writes validate.txt. Returns true when all pass.
bool cmd_validate(const RunConfig &cfg);

std::string format_ghz(double ghz);
std::string format_residual(double r);

} // namespace wgvqd::app
