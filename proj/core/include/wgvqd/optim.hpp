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
#include <functional>
#include <span>
#include <vector>

namespace wgvqd {

struct OptimizerConfig {
    double grad_tol = 1e-8; ///< stop when ||g||_inf <= grad_tol
    std::size_t max_iters = 1000;
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
    std::size_t max_linesearch_steps = 40;

    /// Throws std::invalid_argument unless 0 < c1 < c2 < 1, grad_tol > 0 and max_iters >= 1.
    void validate() const;
};

enum class OptimizerStatus { GradConverged, MaxIters, LineSearchFailed };

const char *to_string(OptimizerStatus status);

struct IterationRecord {
    std::size_t iteration = 0;
    double cost = 0.0;
    double grad_inf_norm = 0.0;
    double step_length = 0.0;
};

struct OptimizationTrace {
    std::vector<IterationRecord> records;
    OptimizerStatus status = OptimizerStatus::MaxIters;
    std::size_t function_evaluations = 0;
    std::size_t gradient_evaluations = 0;
};

struct OptimizationResult {
    std::vector<double> x;
    double cost = 0.0;
    std::vector<double> gradient;
    OptimizationTrace trace;
};

using CostFunction = std::function<double(std::span<const double>)>;
using GradientFunction = std::function<std::vector<double>(std::span<const double>)>;

/// BFGS with a strong-Wolfe line search (bracketing plus cubic-interpolation
/// zoom). The inverse Hessian starts at the identity and is rescaled by
/// y's / y'y before the first update; updates with y's <= 1e-10 |y||s| are
/// skipped. Record 0 of the trace is the starting point.
///
/// Throws std::domain_error when f or g is not finite at x0.
OptimizationResult minimize(const CostFunction &f, const GradientFunction &g, std::vector<double> x0,
                            const OptimizerConfig &cfg = {});

} // namespace wgvqd
