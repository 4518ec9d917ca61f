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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "wgvqd/fdm.hpp"
#include "wgvqd/qsim.hpp"

namespace wgvqd::testing {

/// Geometry with unit grid steps (dx = dy = 1 m), so the scales are 1.
inline WaveguideSpec unit_spec(unsigned nx, unsigned ny, ModeFamily family) {
    WaveguideSpec s;
    s.n_x = nx;
    s.n_y = ny;
    s.width_a = static_cast<double>(1u << nx);
    s.height_b = static_cast<double>(1u << ny);
    s.family = family;
    return s;
}

/// The 15 mm x 10 mm guide used throughout the mode table.
inline WaveguideSpec table_spec(ModeFamily family, unsigned nx = 4, unsigned ny = 3) {
    WaveguideSpec s;
    s.n_x = nx;
    s.n_y = ny;
    s.family = family;
    return s;
}

inline StateVector random_state(unsigned n, std::mt19937_64 &rng, bool real_only = false) {
    std::normal_distribution<double> dist;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {dist(rng), real_only ? 0.0 : dist(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(std::move(amps));
}

inline std::vector<double> random_angles(std::size_t count, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> dist(-M_PI, M_PI);
    std::vector<double> out(count);
    for (double &v : out) {
        v = dist(rng);
    }
    return out;
}

/// <s|M|s> with an explicit dense matrix.
inline double dense_expectation(const DenseMatrix &m, const StateVector &s) {
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::complex<double> row = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row += m(i, j) * s[j];
        }
        total += std::conj(s[i]) * row;
    }
    return total.real();
}

} // namespace wgvqd::testing
