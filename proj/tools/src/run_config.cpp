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

#include "wgvqd_tools/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wgvqd/parallel.hpp"

namespace wgvqd::app {

using nlohmann::json;

namespace {

IntRange read_range(const json &j, const char *key) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument(std::string(key) + " must be a [lo, hi] array");
    }
    return {j[0].get<unsigned>(), j[1].get<unsigned>()};
}

void check_range(const IntRange &r, const char *name, unsigned min_lo) {
    if (r.lo < min_lo || r.lo > r.hi) {
        throw std::invalid_argument(std::string(name) + " must satisfy " + std::to_string(min_lo) + " <= lo <= hi");
    }
}

} // namespace

ModeFamily parse_family(const std::string &text) {
    if (text == "te" || text == "TE") {
        return ModeFamily::TE;
    }
    if (text == "tm" || text == "TM") {
        return ModeFamily::TM;
    }
    throw std::invalid_argument("family must be te or tm, got '" + text + "'");
}

GradientMode parse_gradient(const std::string &text) {
    if (text == "analytic") {
        return GradientMode::Analytic;
    }
    if (text == "fd") {
        return GradientMode::FiniteDifference;
    }
    throw std::invalid_argument("gradient must be analytic or fd, got '" + text + "'");
}

void RunConfig::validate() const {
    spec.validate();
    if (spec.total_qubits() > kMaxTotalQubits) {
        throw std::invalid_argument("n_x + n_y is capped at " + std::to_string(kMaxTotalQubits));
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (modes < 1) {
        throw std::invalid_argument("modes must be at least 1");
    }
    check_range(nx_range, "nx_range", 1);
    check_range(ny_range, "ny_range", 1);
    check_range(layer_range, "layer_range", 1);
    if (nx_range.hi + ny_range.hi > kMaxTotalQubits) {
        throw std::invalid_argument("sweep ranges exceed the qubit cap");
    }
    for (const auto &[nx, ny] : scenarios) {
        if (nx < 1 || ny < 1 || nx + ny > kMaxTotalQubits) {
            throw std::invalid_argument("scenario (" + std::to_string(nx) + ", " + std::to_string(ny) +
                                        ") is outside the qubit cap");
        }
    }
}

unsigned RunConfig::workers() const { return threads > 0 ? threads : default_worker_count(); }

VqdConfig RunConfig::vqd_config(ModeFamily f, std::size_t steps) const {
    VqdConfig v;
    v.spec = spec;
    v.spec.family = f;
    v.layers = layers;
    v.modes = steps;
    v.beta = beta;
    v.trials = trials;
    v.seed = seed;
    v.gradient_mode = gradient;
    v.workers = workers();
    return v;
}

RunConfig parse_config(const std::string &json_text) {
    const json j = json::parse(json_text);
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    static const std::set<std::string> known = {"width_a", "height_b", "nx",          "ny",          "family",
                                                "layers",  "trials",   "seed",        "modes",       "beta",
                                                "gradient", "out",     "threads",     "nx_range",    "ny_range",
                                                "layer_range", "scenarios", "with_vqd"};
    for (const auto &[key, value] : j.items()) {
        if (!known.contains(key)) {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    RunConfig c;
    c.spec.width_a = j.value("width_a", c.spec.width_a);
    c.spec.height_b = j.value("height_b", c.spec.height_b);
    c.spec.n_x = j.value("nx", c.spec.n_x);
    c.spec.n_y = j.value("ny", c.spec.n_y);
    if (j.contains("family")) {
        const std::string f = j["family"].get<std::string>();
        if (f != "both") {
            c.family = parse_family(f);
        }
    }
    c.layers = j.value("layers", c.layers);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.modes = j.value("modes", c.modes);
    c.beta = j.value("beta", c.beta);
    if (j.contains("gradient")) {
        c.gradient = parse_gradient(j["gradient"].get<std::string>());
    }
    if (j.contains("out")) {
        c.out_dir = j["out"].get<std::string>();
    }
    c.threads = j.value("threads", c.threads);
    if (j.contains("nx_range")) {
        c.nx_range = read_range(j["nx_range"], "nx_range");
    }
    if (j.contains("ny_range")) {
        c.ny_range = read_range(j["ny_range"], "ny_range");
    }
    if (j.contains("layer_range")) {
        c.layer_range = read_range(j["layer_range"], "layer_range");
    }
    if (j.contains("scenarios")) {
        c.scenarios.clear();
        for (const auto &s : j["scenarios"]) {
            const IntRange r = read_range(s, "scenario");
            c.scenarios.emplace_back(r.lo, r.hi);
        }
    }
    c.with_vqd = j.value("with_vqd", c.with_vqd);
    return c;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace wgvqd::app
