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
#include <fstream>
#include <stdexcept>

#include "io.hpp"
#include "wgvqd_tools/commands.hpp"

namespace wgvqd::app {

void write_text_file(const std::filesystem::path &dir, const std::string &name, const std::string &content) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

std::string format_fixed(const char *fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string format_ghz(double ghz) { return format_fixed("%#.6g", ghz); }

std::string format_residual(double r) { return format_fixed("%.6e", r); }

long find_mode_index(const WaveguideSpec &spec, const EigenDecomposition &eig, unsigned m, unsigned n) {
    for (std::size_t i = 0; i < eig.size(); ++i) {
        for (const auto &[lm, ln] : mode_label(spec, eig.values[i])) {
            if (lm == m && ln == n) {
                return static_cast<long>(i);
            }
        }
    }
    return -1;
}

} // namespace wgvqd::app
