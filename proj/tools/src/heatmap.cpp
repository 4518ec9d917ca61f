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

#include "wgvqd_tools/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wgvqd::app {

std::vector<double> heatmap_cells(const StateVector &s) {
    std::vector<double> cells = s.real_parts();
    std::size_t peak = 0;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (std::abs(cells[i]) > std::abs(cells[peak])) {
            peak = i;
        }
    }
    if (cells[peak] < 0.0) {
        for (double &v : cells) {
            v = -v;
        }
    }
    return cells;
}

std::string diverging_color(double v) {
    v = std::clamp(v, -1.0, 1.0);
    // White at zero, fading to red for positive and blue for negative values.
    const double t = std::abs(v);
    const int lo = static_cast<int>(std::lround(255.0 * (1.0 - t)));
    int r = 255;
    int g = lo;
    int b = lo;
    if (v < 0.0) {
        r = lo;
        b = 255;
    }
    // Darken the saturated end slightly so extreme cells stay distinguishable.
    const double shade = 1.0 - 0.3 * t;
    r = static_cast<int>(std::lround(r * shade));
    g = static_cast<int>(std::lround(g * shade));
    b = static_cast<int>(std::lround(b * shade));
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

std::string render_heatmap(std::span<const double> cells, unsigned n_x, unsigned n_y, const std::string &title) {
    const std::size_t cols = std::size_t{1} << n_x;
    const std::size_t rows = std::size_t{1} << n_y;
    if (cells.size() != cols * rows) {
        throw std::invalid_argument("heatmap needs 2^(n_x + n_y) cells");
    }
    double peak = 0.0;
    for (double v : cells) {
        peak = std::max(peak, std::abs(v));
    }
    const int cell = 24;
    const int top = 30;
    const int width = static_cast<int>(cols) * cell;
    const int height = static_cast<int>(rows) * cell + top;
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    out += buf;
    out += "<title>" + title + "</title>\n";
    std::snprintf(buf, sizeof buf, "<text x=\"4\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">%s</text>\n",
                  title.c_str());
    out += buf;
    for (std::size_t y = 0; y < rows; ++y) {
        for (std::size_t x = 0; x < cols; ++x) {
            const double v = cells[y * cols + x];
            // y grows upwards, as in a cross-section plot.
            const int px = static_cast<int>(x) * cell;
            const int py = top + static_cast<int>(rows - 1 - y) * cell;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\" data-x=\"%zu\" data-y=\"%zu\" "
                          "data-value=\"%.17g\"/>\n",
                          px, py, cell, cell, diverging_color(peak > 0.0 ? v / peak : 0.0).c_str(), x, y, v);
            out += buf;
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace wgvqd::app
