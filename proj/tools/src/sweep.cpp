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

#include <cmath>
#include <optional>

#include "io.hpp"
#include "wgvqd/parallel.hpp"
#include "wgvqd_tools/commands.hpp"

namespace wgvqd::app {

namespace {

struct Target {
    ModeFamily family;
    unsigned m;
    unsigned n;
    const char *name;
};

constexpr Target kTargets[] = {{ModeFamily::TE, 1, 0, "TE10"}, {ModeFamily::TM, 1, 1, "TM11"}};

struct Cell {
    std::vector<SweepRow> classical;
    std::vector<SweepRow> vqd;
};

Cell run_cell(const RunConfig &cfg, unsigned nx, unsigned ny) {
    Cell cell;
    for (const Target &t : kTargets) {
        WaveguideSpec spec = cfg.spec;
        spec.n_x = nx;
        spec.n_y = ny;
        spec.family = t.family;
        const EigenDecomposition eig = eigensolve_symmetric(assemble_2d(spec));
        const long idx = find_mode_index(spec, eig, t.m, t.n);
        if (idx < 0) {
            continue;
        }
        const double analytic = analytic_cutoff(spec, t.m, t.n);
        const double classical = eigenvalue_to_cutoff(eig.values[static_cast<std::size_t>(idx)], spec);
        cell.classical.push_back({nx, ny, t.name, std::abs(classical - analytic) / analytic});
        if (cfg.with_vqd) {
            VqdConfig v = cfg.vqd_config(t.family, static_cast<std::size_t>(idx) + 1);
            v.spec = spec;
            v.workers = 1;
            const auto results = solve(v, eig);
            const double f = results.back().cutoff_hz;
            cell.vqd.push_back({nx, ny, t.name, std::abs(f - analytic) / analytic});
        }
    }
    return cell;
}

std::string to_csv(const std::vector<SweepRow> &rows) {
    std::string csv = "nx,ny,mode,rel_diff\n";
    for (const SweepRow &r : rows) {
        csv += std::to_string(r.nx) + ',' + std::to_string(r.ny) + ',' + r.mode + ',' + format_residual(r.rel_diff) +
               '\n';
    }
    return csv;
}

} // namespace

std::vector<SweepRow> cmd_sweep(const RunConfig &cfg) {
    cfg.validate();
    std::vector<std::pair<unsigned, unsigned>> grid;
    for (unsigned nx = cfg.nx_range.lo; nx <= cfg.nx_range.hi; ++nx) {
        for (unsigned ny = cfg.ny_range.lo; ny <= cfg.ny_range.hi; ++ny) {
            grid.emplace_back(nx, ny);
        }
    }
    std::vector<Cell> cells(grid.size());
    parallel_for(grid.size(), cfg.workers(),
                 [&](std::size_t i) { cells[i] = run_cell(cfg, grid[i].first, grid[i].second); });

    std::vector<SweepRow> rows;
    std::vector<SweepRow> vqd_rows;
    for (const Cell &c : cells) {
        rows.insert(rows.end(), c.classical.begin(), c.classical.end());
        vqd_rows.insert(vqd_rows.end(), c.vqd.begin(), c.vqd.end());
    }
    write_text_file(cfg.out_dir, "sweep.csv", to_csv(rows));
    if (cfg.with_vqd) {
        write_text_file(cfg.out_dir, "sweep_vqd.csv", to_csv(vqd_rows));
    }
    return rows;
}

} // namespace wgvqd::app
