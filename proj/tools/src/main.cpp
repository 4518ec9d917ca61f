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

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wgvqd_tools/commands.hpp"

namespace {

struct Flags {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    unsigned nx = 0;
    unsigned ny = 0;
    unsigned layers = 0;
    unsigned trials = 0;
    std::string family;
    std::size_t modes = 0;
    std::string gradient;
    double beta = 0.0;
    double width = 0.0;
    double height = 0.0;
    unsigned threads = 0;
    std::vector<unsigned> nx_range;
    std::vector<unsigned> ny_range;
    std::vector<unsigned> layer_range;
    bool with_vqd = false;
    bool inject_fault = false;
};

struct Registered {
    CLI::Option *seed, *nx, *ny, *layers, *trials, *family, *modes, *gradient, *beta, *width, *height, *threads,
        *nx_range, *ny_range, *layer_range;
};

Registered add_common(CLI::App *cmd, Flags &f) {
    Registered r{};
    cmd->add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--out", f.out, "output directory");
    r.seed = cmd->add_option("--seed", f.seed, "base RNG seed");
    r.nx = cmd->add_option("--nx", f.nx, "qubits along x");
    r.ny = cmd->add_option("--ny", f.ny, "qubits along y");
    r.layers = cmd->add_option("--layers", f.layers, "ansatz layers (0 = nx + ny)");
    r.trials = cmd->add_option("--trials", f.trials, "random starts per mode");
    r.family = cmd->add_option("--family", f.family, "te or tm (default both)")->check(CLI::IsMember({"te", "tm"}));
    r.modes = cmd->add_option("--modes", f.modes, "physical modes per family");
    r.gradient =
        cmd->add_option("--gradient", f.gradient, "analytic or fd")->check(CLI::IsMember({"analytic", "fd"}));
    r.beta = cmd->add_option("--beta", f.beta, "deflation penalty (0 = default)");
    r.width = cmd->add_option("--width", f.width, "waveguide width a in meters");
    r.height = cmd->add_option("--height", f.height, "waveguide height b in meters");
    r.threads = cmd->add_option("--threads", f.threads, "worker threads (overrides WGVQD_THREADS)");
    return r;
}

wgvqd::app::RunConfig resolve(const Flags &f, const Registered &r) {
    using namespace wgvqd::app;
    RunConfig c = f.config.empty() ? RunConfig{} : load_config(f.config);
    if (!f.out.empty()) {
        c.out_dir = f.out;
    }
    auto set = [](CLI::Option *opt, auto &field, const auto &value) {
        if (opt != nullptr && opt->count() > 0) {
            field = value;
        }
    };
    set(r.seed, c.seed, f.seed);
    set(r.nx, c.spec.n_x, f.nx);
    set(r.ny, c.spec.n_y, f.ny);
    set(r.layers, c.layers, f.layers);
    set(r.trials, c.trials, f.trials);
    set(r.modes, c.modes, f.modes);
    set(r.beta, c.beta, f.beta);
    set(r.width, c.spec.width_a, f.width);
    set(r.height, c.spec.height_b, f.height);
    set(r.threads, c.threads, f.threads);
    if (r.family->count() > 0) {
        c.family = parse_family(f.family);
    }
    if (r.gradient->count() > 0) {
        c.gradient = parse_gradient(f.gradient);
    }
    if (r.nx_range != nullptr && r.nx_range->count() > 0) {
        c.nx_range = {f.nx_range[0], f.nx_range[1]};
    }
    if (r.ny_range != nullptr && r.ny_range->count() > 0) {
        c.ny_range = {f.ny_range[0], f.ny_range[1]};
    }
    if (r.layer_range != nullptr && r.layer_range->count() > 0) {
        c.layer_range = {f.layer_range[0], f.layer_range[1]};
    }
    if (f.with_vqd) {
        c.with_vqd = true;
    }
    c.inject_fault = f.inject_fault;
    return c;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Waveguide cut-off frequencies with variational quantum deflation"};
    app.require_subcommand(1);

    Flags modes_flags, sweep_flags, layers_flags, validate_flags;
    auto *modes = app.add_subcommand("modes", "mode table and field heatmaps");
    const Registered modes_reg = add_common(modes, modes_flags);

    auto *sweep = app.add_subcommand("sweep", "discretization error versus qubit count");
    Registered sweep_reg = add_common(sweep, sweep_flags);
    sweep_reg.nx_range = sweep->add_option("--nx-range", sweep_flags.nx_range, "lo hi")->expected(2);
    sweep_reg.ny_range = sweep->add_option("--ny-range", sweep_flags.ny_range, "lo hi")->expected(2);
    sweep->add_flag("--with-vqd", sweep_flags.with_vqd, "also run VQD per grid size");

    auto *layers = app.add_subcommand("layers", "TM11 success rate versus ansatz depth");
    Registered layers_reg = add_common(layers, layers_flags);
    layers_reg.layer_range = layers->add_option("--layer-range", layers_flags.layer_range, "lo hi")->expected(2);

    auto *validate = app.add_subcommand("validate", "oracle checks across all modules");
    const Registered validate_reg = add_common(validate, validate_flags);
    validate->add_flag("--inject-fault", validate_flags.inject_fault, "perturb one decomposition coefficient");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace wgvqd::app;
        if (*modes) {
            const RunConfig cfg = resolve(modes_flags, modes_reg);
            for (const ModeTableRow &row : cmd_modes(cfg)) {
                std::printf("%-10s vqa %s GHz  classical %s GHz  analytic %s GHz  %s\n", row.label.c_str(),
                            format_ghz(row.vqa_cutoff_ghz).c_str(), format_ghz(row.classical_cutoff_ghz).c_str(),
                            format_ghz(row.analytic_cutoff_ghz).c_str(), row.status.c_str());
            }
        } else if (*sweep) {
            const RunConfig cfg = resolve(sweep_flags, sweep_reg);
            const auto rows = cmd_sweep(cfg);
            std::printf("wrote %zu rows to %s\n", rows.size(), (cfg.out_dir / "sweep.csv").c_str());
        } else if (*layers) {
            const RunConfig cfg = resolve(layers_flags, layers_reg);
            for (const LayerRow &r : cmd_layers(cfg)) {
                std::printf("nx=%u ny=%u L=%-2u success %.2f %s\n", r.nx, r.ny, r.layers, r.success_rate,
                            r.color.c_str());
            }
        } else if (*validate) {
            const RunConfig cfg = resolve(validate_flags, validate_reg);
            const bool ok = cmd_validate(cfg);
            std::printf("%s (see %s)\n", ok ? "all checks passed" : "validation FAILED",
                        (cfg.out_dir / "validate.txt").c_str());
            return ok ? 0 : 1;
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
