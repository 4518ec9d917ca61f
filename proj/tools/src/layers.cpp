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

#include "io.hpp"
#include "wgvqd/parallel.hpp"
#include "wgvqd_tools/commands.hpp"

namespace wgvqd::app {

std::string layer_color(unsigned correct, unsigned higher_mode, unsigned incorrect_minimum, unsigned trials) {
    if (trials > 0 && correct == trials) {
        return "green";
    }
    if (2 * higher_mode >= trials) {
        return "amber";
    }
    if (2 * incorrect_minimum >= trials) {
        return "red";
    }
    return "mixed";
}

std::vector<LayerRow> cmd_layers(const RunConfig &cfg) {
    cfg.validate();
    struct Job {
        unsigned nx;
        unsigned ny;
        unsigned layers;
    };
    std::vector<Job> jobs;
    for (const auto &[nx, ny] : cfg.scenarios) {
        for (unsigned l = cfg.layer_range.lo; l <= cfg.layer_range.hi; ++l) {
            jobs.push_back({nx, ny, l});
        }
    }
    std::vector<LayerRow> rows(jobs.size());
    parallel_for(jobs.size(), cfg.workers(), [&](std::size_t i) {
        const Job &job = jobs[i];
        // The TM ground state is TM11.
        VqdConfig v = cfg.vqd_config(ModeFamily::TM, 1);
        v.spec.n_x = job.nx;
        v.spec.n_y = job.ny;
        v.layers = job.layers;
        v.workers = 1;
        const auto results = solve(v);
        LayerRow &row = rows[i];
        row.nx = job.nx;
        row.ny = job.ny;
        row.layers = job.layers;
        row.trials = cfg.trials;
        for (const TrialOutcome &t : results.front().trials) {
            switch (t.classification) {
            case Classification::Correct:
                ++row.correct;
                break;
            case Classification::ConvergedHigherMode:
                ++row.higher_mode;
                break;
            case Classification::IncorrectMinimum:
                ++row.incorrect_minimum;
                break;
            }
        }
        row.success_rate = static_cast<double>(row.correct) / row.trials;
        row.color = layer_color(row.correct, row.higher_mode, row.incorrect_minimum, row.trials);
    });

    std::string csv = "nx,ny,layers,trials,correct,higher_mode,incorrect_minimum,success_rate,color\n";
    for (const LayerRow &r : rows) {
        csv += std::to_string(r.nx) + ',' + std::to_string(r.ny) + ',' + std::to_string(r.layers) + ',' +
               std::to_string(r.trials) + ',' + std::to_string(r.correct) + ',' + std::to_string(r.higher_mode) +
               ',' + std::to_string(r.incorrect_minimum) + ',' + format_fixed("%.6f", r.success_rate) + ',' +
               r.color + '\n';
    }
    write_text_file(cfg.out_dir, "layers.csv", csv);
    return rows;
}

} // namespace wgvqd::app
