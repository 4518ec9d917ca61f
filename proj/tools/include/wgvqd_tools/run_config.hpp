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

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgvqd/vqd.hpp"

namespace wgvqd::app {

struct IntRange {
    unsigned lo = 0;
    unsigned hi = 0;
};

/// Everything one invocation of the tool needs. Loaded from JSON, then
/// individual fields are overridden by command-line flags.
struct RunConfig {
    WaveguideSpec spec;
    /// Families for the mode table; empty means both.
    std::optional<ModeFamily> family;
    unsigned layers = 0;
    unsigned trials = 5;
    std::uint64_t seed = 20221;
    /// Physical modes reported per family.
    std::size_t modes = 2;
    double beta = 0.0;
    GradientMode gradient = GradientMode::Analytic;
    std::filesystem::path out_dir = "out";
    unsigned threads = 0; ///< 0 defers to WGVQD_THREADS / hardware
    IntRange nx_range{2, 5};
    IntRange ny_range{1, 4};
    IntRange layer_range{1, 11};
    std::vector<std::pair<unsigned, unsigned>> scenarios{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {2, 3}};
    bool with_vqd = false;
    bool inject_fault = false;

    void validate() const;
    unsigned workers() const;
    /// VqdConfig for one family with the given number of deflation steps.
    VqdConfig vqd_config(ModeFamily family, std::size_t steps) const;
};

inline constexpr unsigned kMaxTotalQubits = 14;

/// Parses the JSON schema documented in the README. Unknown keys are errors.
RunConfig load_config(const std::filesystem::path &path);
RunConfig parse_config(const std::string &json_text);

ModeFamily parse_family(const std::string &text);
GradientMode parse_gradient(const std::string &text);

} // namespace wgvqd::app
