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

#include <span>
#include <string>
#include <vector>

#include "wgvqd/qsim.hpp"

namespace wgvqd::app {

/// Real amplitudes with the global sign chosen so the largest-magnitude
/// entry is positive. Index i maps to cell (x = i mod 2^nx, y = i / 2^nx).
std::vector<double> heatmap_cells(const StateVector &s);

/// SVG with one rect per cell, each carrying its value in data-value.
std::string render_heatmap(std::span<const double> cells, unsigned n_x, unsigned n_y, const std::string &title);

/// Diverging blue-white-red colour for v in [-1, 1], as "#rrggbb".
std::string diverging_color(double v);

} // namespace wgvqd::app
