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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wgvqd/decomp.hpp"
#include "wgvqd/eigoracle.hpp"
#include "wgvqd/vqd.hpp"
#include "wgvqd_tools/commands.hpp"

using namespace wgvqd;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double runtime_limit_s; ///< 0 means no limit
    std::function<Outcome()> run;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

WaveguideSpec table_spec(ModeFamily family, unsigned nx = 4, unsigned ny = 3) {
    WaveguideSpec s;
    s.n_x = nx;
    s.n_y = ny;
    s.family = family;
    return s;
}

struct Target {
    const char *name;
    ModeFamily family;
    unsigned m, n;
    double classical_ghz; ///< mode table, finite-difference column
    double analytic_ghz;  ///< mode table, closed-form column
};

constexpr Target kTable[] = {
    {"TE10", ModeFamily::TE, 1, 0, 9.9770, 9.9931},
    {"TE01", ModeFamily::TE, 0, 1, 14.8935, 14.9896},
    {"TM11", ModeFamily::TM, 1, 1, 17.9264, 18.0153},
    {"TM21", ModeFamily::TM, 2, 1, 24.8225, 24.9827},
};

std::filesystem::path scratch(const char *name) {
    auto dir = std::filesystem::temp_directory_path() / "wgvqd_acceptance" / name;
    std::filesystem::remove_all(dir);
    return dir;
}

Outcome classical_column() {
    Outcome o{true, ""};
    for (ModeFamily f : {ModeFamily::TE, ModeFamily::TM}) {
        const WaveguideSpec spec = table_spec(f);
        const auto eig = eigensolve_symmetric(assemble_2d(spec));
        for (const Target &t : kTable) {
            if (t.family != f) {
                continue;
            }
            const long idx = app::find_mode_index(spec, eig, t.m, t.n);
            const double ghz = idx < 0 ? std::nan("") : eigenvalue_to_cutoff(eig.values[idx], spec) / 1e9;
            const bool ok = std::abs(ghz - t.classical_ghz) <= 5e-4;
            o.passed = o.passed && ok;
            o.detail += std::string(t.name) + "=" + fmt("%.4f", ghz) + (ok ? " " : "(!) ");
        }
    }
    return o;
}

Outcome analytic_column() {
    Outcome o{true, ""};
    for (const Target &t : kTable) {
        const WaveguideSpec spec = table_spec(t.family);
        const double ghz = analytic_cutoff(spec, t.m, t.n) / 1e9;
        const double classical = eigenvalue_to_cutoff(discrete_mode_eigenvalue(spec, t.m, t.n), spec) / 1e9;
        const double rel = std::abs(classical - ghz) / ghz;
        const bool ok = std::abs(ghz - t.analytic_ghz) <= 1e-4 && rel < 0.01;
        o.passed = o.passed && ok;
        o.detail += std::string(t.name) + "=" + fmt("%.4f", ghz) + " rel=" + fmt("%.2e", rel) + (ok ? " " : "(!) ");
    }
    return o;
}

/// VQD runs shared by the mode-table and orthogonality criteria.
struct TableRuns {
    std::vector<VqdResult> te;
    std::vector<VqdResult> tm;
    EigenDecomposition te_oracle;
    EigenDecomposition tm_oracle;
};

TableRuns &table_runs() {
    static TableRuns runs = [] {
        TableRuns r;
        for (ModeFamily f : {ModeFamily::TE, ModeFamily::TM}) {
            VqdConfig cfg;
            cfg.spec = table_spec(f);
            cfg.layers = 7;
            cfg.trials = 5;
            cfg.gradient_mode = GradientMode::Analytic;
            // TE deflates its constant zero mode first.
            cfg.modes = f == ModeFamily::TE ? 3 : 2;
            auto &oracle = f == ModeFamily::TE ? r.te_oracle : r.tm_oracle;
            oracle = eigensolve_symmetric(assemble_2d(cfg.spec));
            (f == ModeFamily::TE ? r.te : r.tm) = solve(cfg, oracle);
        }
        return r;
    }();
    return runs;
}

Outcome vqa_column() {
    TableRuns &runs = table_runs();
    Outcome o{true, ""};
    for (const Target &t : kTable) {
        const auto &results = t.family == ModeFamily::TE ? runs.te : runs.tm;
        const auto &oracle = t.family == ModeFamily::TE ? runs.te_oracle : runs.tm_oracle;
        const WaveguideSpec spec = table_spec(t.family);
        const long idx = app::find_mode_index(spec, oracle, t.m, t.n);
        if (idx < 0 || static_cast<std::size_t>(idx) >= results.size()) {
            o.passed = false;
            o.detail += std::string(t.name) + "=missing ";
            continue;
        }
        const double classical = eigenvalue_to_cutoff(oracle.values[idx], spec);
        const double vqa = results[idx].cutoff_hz;
        const double rel = std::abs(vqa - classical) / classical;
        const bool ok = rel < 1e-5;
        o.passed = o.passed && ok;
        o.detail += std::string(t.name) + "=" + fmt("%.4f", vqa / 1e9) + " rel=" + fmt("%.1e", rel) + (ok ? " " : "(!) ");
    }
    return o;
}

Outcome decomposition_equivalence() {
    double worst = 0.0;
    double worst_unit = 0.0;
    double worst_pauli = 0.0;
    for (ModeFamily f : {ModeFamily::TE, ModeFamily::TM}) {
        for (unsigned nx = 1; nx <= 3; ++nx) {
            for (unsigned ny = 1; ny <= 3; ++ny) {
                // Unit grid steps keep entries O(1), so the absolute tolerance is meaningful.
                WaveguideSpec unit = table_spec(f, nx, ny);
                unit.width_a = static_cast<double>(1u << nx);
                unit.height_b = static_cast<double>(1u << ny);
                worst_unit = std::max(worst_unit, max_abs_diff(reconstruct_dense(decompose(unit)), assemble_2d(unit)));
                const WaveguideSpec s = table_spec(f, nx, ny);
                const DenseMatrix m = assemble_2d(s);
                worst = std::max(worst, max_abs_diff(reconstruct_dense(decompose(s)), m) / m.max_abs());
                if (nx + ny <= 4) {
                    const auto [re, im] = pauli_reconstruct(pauli_decompose(m), nx + ny);
                    worst_pauli = std::max({worst_pauli, max_abs_diff(re, m) / m.max_abs(), im.max_abs() / m.max_abs()});
                }
            }
        }
    }
    return {worst_unit <= 1e-12 && worst <= 1e-12 && worst_pauli <= 1e-10,
            "unit-grid entrywise residual=" + fmt("%.2e", worst_unit) + " 15x10 mm residual=" + fmt("%.2e", worst) +
                " pauli residual=" + fmt("%.2e", worst_pauli) + " (last two relative to max |M_ij|)"};
}

Outcome gradient_correctness() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    auto angles = [&](std::size_t n) {
        std::vector<double> v(n);
        for (double &x : v) {
            x = dist(rng);
        }
        return v;
    };
    double floored = 0.0;
    double strict = 0.0;
    for (ModeFamily f : {ModeFamily::TE, ModeFamily::TM}) {
        const WaveguideSpec spec = table_spec(f, 2, 2);
        const unsigned layers = 4;
        std::vector<AnsatzCircuit> previous;
        for (std::size_t k = 0; k <= 2; ++k) {
            const DeflatedCost model(decompose(spec), layers, 1.25 * spectral_bound(spec), previous);
            for (int rep = 0; rep < 20; ++rep) {
                const auto theta = angles(model.parameter_count());
                const auto g = model.gradient(theta);
                const auto fd = model.finite_difference_gradient(theta, 1e-5);
                floored = std::max(floored, gradient_mismatch(g, fd));
                for (std::size_t j = 0; j < g.size(); ++j) {
                    strict = std::max(strict, std::abs(g[j] - fd[j]) / std::abs(fd[j]));
                }
            }
            previous.emplace_back(4, layers, angles(std::size_t{4} * layers));
        }
    }
    return {strict < 1e-6 && floored < 1e-6,
            "max componentwise rel err=" + fmt("%.2e", strict) + " (floored metric " + fmt("%.2e", floored) + ")"};
}

double overlap2(const StateVector &a, const StateVector &b) { return std::norm(overlap(a, b)); }

Outcome deflation_orthogonality() {
    TableRuns &runs = table_runs();
    double worst = 0.0;
    bool ascending = true;
    for (const auto *results : {&runs.te, &runs.tm}) {
        for (std::size_t i = 0; i < results->size(); ++i) {
            for (std::size_t j = i + 1; j < results->size(); ++j) {
                worst = std::max(worst, overlap2((*results)[i].state, (*results)[j].state));
                ascending = ascending && (*results)[i].energy <= (*results)[j].energy;
            }
        }
    }
    return {worst < 1e-3 && ascending,
            "max |<psi_i|psi_j>|^2=" + fmt("%.2e", worst) + (ascending ? " energies ascending" : " energies NOT ascending")};
}

Outcome convergence_trend() {
    app::RunConfig cfg;
    cfg.nx_range = {2, 5};
    cfg.ny_range = {3, 3};
    cfg.out_dir = scratch("sweep_x");
    const auto along_x = app::cmd_sweep(cfg);
    cfg.nx_range = {4, 4};
    cfg.ny_range = {1, 4};
    cfg.out_dir = scratch("sweep_y");
    const auto along_y = app::cmd_sweep(cfg);

    auto series = [](const std::vector<app::SweepRow> &rows, const char *mode) {
        std::vector<double> out;
        for (const auto &r : rows) {
            if (r.mode == mode) {
                out.push_back(r.rel_diff);
            }
        }
        return out;
    };
    const auto te_x = series(along_x, "TE10");
    const auto tm_x = series(along_x, "TM11");
    const auto te_y = series(along_y, "TE10");
    const auto tm_y = series(along_y, "TM11");
    if (te_x.size() != 4 || tm_x.size() != 4 || te_y.size() != 4 || tm_y.size() != 4) {
        return {false, "sweep produced unexpected rows"};
    }
    const double ratio = te_x.front() / te_x.back();
    double ny_change = 0.0;
    for (double v : te_y) {
        ny_change = std::max(ny_change, std::abs(v - te_y.front()) / te_y.front());
    }
    auto strictly_decreasing = [](const std::vector<double> &v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (!(v[i] < v[i - 1])) {
                return false;
            }
        }
        return true;
    };
    const bool tm_ok = strictly_decreasing(tm_x) && strictly_decreasing(tm_y);
    return {ratio >= 50.0 && ny_change < 0.01 && tm_ok,
            "TE10 nx=2/nx=5 ratio=" + fmt("%.1f", ratio) + " TE10 ny change=" + fmt("%.1e", ny_change) +
                (tm_ok ? " TM11 decreasing along nx and ny" : " TM11 NOT strictly decreasing")};
}

Outcome layer_study() {
    app::RunConfig cfg;
    cfg.trials = 5;
    cfg.out_dir = scratch("layers");
    const auto rows = app::cmd_layers(cfg);
    bool partitioned = !rows.empty();
    long target_correct = -1;
    for (const auto &r : rows) {
        partitioned = partitioned && r.correct + r.higher_mode + r.incorrect_minimum == r.trials;
        if (r.nx == 2 && r.ny == 2 && r.layers == 4) {
            target_correct = r.correct;
        }
    }
    return {partitioned && target_correct >= 1,
            std::to_string(rows.size()) + " cells classified; (2,2) L=4 correct " + std::to_string(target_correct) +
                "/5"};
}

Outcome simulator_integrity() {
    app::RunConfig cfg;
    cfg.out_dir = scratch("validate");
    const bool all_ok = app::cmd_validate(cfg);
    const auto checks = app::run_validation(false);
    std::string detail;
    bool ok = all_ok;
    for (const char *name : {"norm_preservation", "real_amplitudes", "shift_permutation_vs_mcx_chain"}) {
        bool found = false;
        for (const auto &c : checks) {
            if (c.name == name) {
                found = true;
                ok = ok && c.passed;
                detail += std::string(name) + "=" + fmt("%.1e", c.residual) + " ";
            }
        }
        ok = ok && found;
    }
    return {ok, detail + (all_ok ? "validate exit 0" : "validate exit 1")};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "mode table classical column", 5.0, classical_column},
        {2, "mode table analytic column", 0.0, analytic_column},
        {3, "mode table VQA column (L=7, 5 trials)", 0.0, vqa_column},
        {4, "decomposition equivalence", 10.0, decomposition_equivalence},
        {5, "gradient correctness", 30.0, gradient_correctness},
        {6, "deflation orthogonality", 0.0, deflation_orthogonality},
        {7, "convergence trend", 30.0, convergence_trend},
        {8, "layer study", 600.0, layer_study},
        {9, "simulator integrity", 0.0, simulator_integrity},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.runtime_limit_s > 0.0 && secs > c.runtime_limit_s) {
            o.passed = false;
            o.detail += " runtime over " + fmt("%.0f", c.runtime_limit_s) + " s";
        }
        failed += o.passed ? 0 : 1;
        std::printf("%s criterion %d: %s | %s | %.2f s\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
