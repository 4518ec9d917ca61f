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
#include <set>

#include "io.hpp"
#include "wgvqd_tools/commands.hpp"
#include "wgvqd_tools/heatmap.hpp"

namespace wgvqd::app {

namespace {

double rel_err(double value, double reference) { return std::abs(value - reference) / reference; }

void family_rows(const RunConfig &cfg, ModeFamily family, std::vector<ModeTableRow> &rows) {
    // The TE operator has a constant zero mode; it is deflated first but not reported.
    const std::size_t skip = family == ModeFamily::TE ? 1 : 0;
    const VqdConfig vcfg = cfg.vqd_config(family, cfg.modes + skip);
    const WaveguideSpec &spec = vcfg.spec;
    const EigenDecomposition oracle = eigensolve_symmetric(assemble_2d(spec));

    std::vector<VqdResult> results;
    std::string failure;
    try {
        results = solve(vcfg, oracle);
    } catch (const std::exception &e) {
        failure = std::string("failed: ") + e.what();
    }

    for (std::size_t k = skip; k < vcfg.modes; ++k) {
        ModeTableRow row;
        row.family = family;
        const auto labels = mode_label(spec, oracle.values[k]);
        row.label = format_mode_label(family, labels);
        row.classical_cutoff_ghz = eigenvalue_to_cutoff(oracle.values[k], spec) / 1e9;
        row.analytic_cutoff_ghz = analytic_cutoff(spec, labels.front().first, labels.front().second) / 1e9;
        row.rel_err_classical_vs_analytic = rel_err(row.classical_cutoff_ghz, row.analytic_cutoff_ghz);
        if (failure.empty()) {
            const VqdResult &r = results[k];
            row.vqa_cutoff_ghz = r.cutoff_hz / 1e9;
            row.rel_err_vqa_vs_classical = rel_err(row.vqa_cutoff_ghz, row.classical_cutoff_ghz);
            row.fidelity = r.fidelity;
            row.status = to_string(r.classification);
            row.cells = heatmap_cells(r.state);
        } else {
            row.vqa_cutoff_ghz = std::nan("");
            row.rel_err_vqa_vs_classical = std::nan("");
            row.fidelity = std::nan("");
            row.status = failure;
        }
        rows.push_back(std::move(row));
    }
}

std::string csv_number(const char *fmt, double v) { return std::isnan(v) ? "" : format_fixed(fmt, v); }

std::string csv_text(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

} // namespace

std::vector<ModeTableRow> cmd_modes(const RunConfig &cfg) {
    cfg.validate();
    std::vector<ModeTableRow> rows;
    for (ModeFamily f : {ModeFamily::TE, ModeFamily::TM}) {
        if (!cfg.family || *cfg.family == f) {
            family_rows(cfg, f, rows);
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ModeTableRow &a, const ModeTableRow &b) {
        return a.analytic_cutoff_ghz < b.analytic_cutoff_ghz;
    });

    std::string csv = "mode,vqa_cutoff_ghz,classical_cutoff_ghz,analytic_cutoff_ghz,rel_err_vqa_vs_classical,"
                      "rel_err_classical_vs_analytic,fidelity,status\n";
    std::set<std::string> used;
    for (const ModeTableRow &row : rows) {
        csv += row.label + ',' + csv_number("%#.6g", row.vqa_cutoff_ghz) + ',' + format_ghz(row.classical_cutoff_ghz) +
               ',' + format_ghz(row.analytic_cutoff_ghz) + ',' + csv_number("%.6e", row.rel_err_vqa_vs_classical) +
               ',' + format_residual(row.rel_err_classical_vs_analytic) + ',' + csv_number("%.6f", row.fidelity) +
               ',' + csv_text(row.status) + '\n';
        if (row.cells.empty()) {
            continue;
        }
        std::string stem = row.label;
        for (int n = 2; used.contains(stem); ++n) {
            stem = row.label + "_" + std::to_string(n);
        }
        used.insert(stem);
        const std::string title = row.label + " " + format_ghz(row.vqa_cutoff_ghz) + " GHz";
        write_text_file(cfg.out_dir, "mode_" + stem + ".svg",
                        render_heatmap(row.cells, cfg.spec.n_x, cfg.spec.n_y, title));
    }
    write_text_file(cfg.out_dir, "modes.csv", csv);
    return rows;
}

} // namespace wgvqd::app
