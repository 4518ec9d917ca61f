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

#include "wgvqd/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "wgvqd/eigoracle.hpp"

using namespace wgvqd;
using wgvqd::testing::table_spec;
using wgvqd::testing::unit_spec;

namespace {

void expect_matrix_eq(const DenseMatrix &m, const std::vector<std::vector<double>> &expected) {
    ASSERT_EQ(m.rows(), expected.size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ASSERT_EQ(m.cols(), expected[i].size());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            EXPECT_EQ(m(i, j), expected[i][j]) << "entry (" << i << ", " << j << ")";
        }
    }
}

} // namespace

TEST(fdm, dirichlet_operator_two_qubits) {
    expect_matrix_eq(build_1d_operator(2, BoundaryCondition::Dirichlet),
                     {{3, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 3}});
}

TEST(fdm, neumann_operator_two_qubits) {
    expect_matrix_eq(build_1d_operator(2, BoundaryCondition::Neumann),
                     {{1, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 1}});
}

TEST(fdm, neumann_operator_one_qubit) {
    const DenseMatrix m = build_1d_operator(1, BoundaryCondition::Neumann);
    expect_matrix_eq(m, {{1, -1}, {-1, 1}});
    // aI + bX has eigenvalues a - b and a + b.
    const auto eig = eigensolve_symmetric(m);
    EXPECT_NEAR(eig.values[0], 0.0, 1e-14);
    EXPECT_NEAR(eig.values[1], 2.0, 1e-14);
}

TEST(fdm, zero_qubits_rejected) {
    EXPECT_THROW(build_1d_operator(0, BoundaryCondition::Dirichlet), std::invalid_argument);
    EXPECT_THROW(operator_1d_spectrum(0, BoundaryCondition::Neumann), std::invalid_argument);
}

TEST(fdm, one_dimensional_operators_are_symmetric_tridiagonal) {
    for (unsigned n = 1; n <= 6; ++n) {
        for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
            const DenseMatrix m = build_1d_operator(n, bc);
            EXPECT_EQ(m.asymmetry(), 0.0);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (i > j + 1 || j > i + 1) {
                        ASSERT_EQ(m(i, j), 0.0);
                    }
                }
            }
        }
    }
}

TEST(fdm, one_dimensional_spectrum_matches_closed_form) {
    for (unsigned n = 1; n <= 5; ++n) {
        for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
            const auto eig = eigensolve_symmetric(build_1d_operator(n, bc));
            const auto closed = operator_1d_spectrum(n, bc);
            ASSERT_EQ(eig.values.size(), closed.size());
            for (std::size_t i = 0; i < closed.size(); ++i) {
                EXPECT_NEAR(eig.values[i], closed[i], 1e-10) << "n=" << n << " i=" << i;
            }
        }
    }
}

TEST(fdm, spec_validation) {
    WaveguideSpec s;
    EXPECT_NO_THROW(s.validate());
    s.width_a = 0.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    s.height_b = -1.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    s.n_y = 0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    EXPECT_DOUBLE_EQ(s.dx(), 15e-3 / 16.0);
    EXPECT_DOUBLE_EQ(s.dy(), 10e-3 / 8.0);
}

TEST(fdm, te_two_by_two_unit_square) {
    WaveguideSpec s;
    s.width_a = 1.0;
    s.height_b = 1.0;
    s.n_x = 1;
    s.n_y = 1;
    s.family = ModeFamily::TE;
    const DenseMatrix m = assemble_2d(s);
    const DenseMatrix n1 = build_1d_operator(1, BoundaryCondition::Neumann);
    const DenseMatrix i2 = DenseMatrix::identity(2);
    const DenseMatrix expected = 4.0 * (kron(i2, n1) + kron(n1, i2));
    EXPECT_EQ(max_abs_diff(m, expected), 0.0);
    const auto eig = eigensolve_symmetric(m);
    EXPECT_NEAR(eig.values[0], 0.0, 1e-12);
}

TEST(fdm, x_qubits_are_least_significant) {
    // With only the x axis scaled, neighbouring indices 0 and 1 couple along x.
    const DenseMatrix m = assemble_2d(unit_spec(2, 1, ModeFamily::TM));
    EXPECT_EQ(m(0, 1), -1.0); // x neighbours
    EXPECT_EQ(m(0, 4), -1.0); // y neighbours are 2^nx apart
    EXPECT_EQ(m(0, 2), 0.0);
    EXPECT_EQ(m(0, 0), 6.0); // Dirichlet corner on both axes
}

TEST(fdm, kronecker_sum_spectrum_two_by_two_tm) {
    const DenseMatrix m = assemble_2d(unit_spec(2, 2, ModeFamily::TM));
    const auto eig = eigensolve_symmetric(m);
    std::vector<double> expected;
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const double sa = std::sin(a * std::numbers::pi / 8.0);
            const double sb = std::sin(b * std::numbers::pi / 8.0);
            expected.push_back(4 * sa * sa + 4 * sb * sb);
        }
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(eig.values[i], expected[i], 1e-10);
    }
}

TEST(fdm, assembled_spectrum_is_pairwise_sum_of_axis_spectra) {
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        for (unsigned nx = 1; nx <= 3; ++nx) {
            for (unsigned ny = 1; ny <= 3; ++ny) {
                const WaveguideSpec s = table_spec(family, nx, ny);
                const auto eig = eigensolve_symmetric(assemble_2d(s));
                const auto bc = boundary_for(family);
                std::vector<double> expected;
                for (double mu : operator_1d_spectrum(nx, bc)) {
                    for (double nu : operator_1d_spectrum(ny, bc)) {
                        expected.push_back(s.scale_x() * mu + s.scale_y() * nu);
                    }
                }
                std::sort(expected.begin(), expected.end());
                const double scale = expected.back();
                for (std::size_t i = 0; i < expected.size(); ++i) {
                    EXPECT_NEAR(eig.values[i], expected[i], 1e-9 * scale) << to_string(family) << nx << ny;
                }
            }
        }
    }
}

TEST(fdm, te_has_single_zero_mode_and_tm_is_positive_definite) {
    for (unsigned nx = 1; nx <= 3; ++nx) {
        for (unsigned ny = 1; ny <= 3; ++ny) {
            const auto te = eigensolve_symmetric(assemble_2d(unit_spec(nx, ny, ModeFamily::TE)));
            EXPECT_NEAR(te.values[0], 0.0, 1e-12);
            EXPECT_GT(te.values[1], 1e-3);
            const auto tm = eigensolve_symmetric(assemble_2d(unit_spec(nx, ny, ModeFamily::TM)));
            EXPECT_GT(tm.values[0], 1e-3);
        }
    }
}

TEST(fdm, assembled_max_abs_matches_assembly) {
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        for (unsigned nx = 1; nx <= 3; ++nx) {
            for (unsigned ny = 1; ny <= 3; ++ny) {
                const WaveguideSpec s = table_spec(family, nx, ny);
                EXPECT_DOUBLE_EQ(assembled_max_abs(s), assemble_2d(s).max_abs());
            }
        }
    }
}

TEST(fdm, table_tm11_classical_cutoff) {
    const WaveguideSpec s = table_spec(ModeFamily::TM);
    const auto eig = eigensolve_symmetric(assemble_2d(s));
    EXPECT_NEAR(eigenvalue_to_cutoff(eig.values[0], s) / 1e9, 17.9264, 5e-4);
}

TEST(fdm, cutoff_conversion) {
    EXPECT_EQ(eigenvalue_to_cutoff(0.0, 1.0), 0.0);
    const WaveguideSpec s = table_spec(ModeFamily::TE);
    const double sn = std::sin(std::numbers::pi / 32.0);
    const double lambda = std::pow(2.0 * sn / s.dx(), 2);
    EXPECT_NEAR(eigenvalue_to_cutoff(lambda, s) / 1e9, 9.9770, 5e-4);
    const auto eig = eigensolve_symmetric(assemble_2d(s));
    EXPECT_NEAR(eigenvalue_to_cutoff(eig.values[1], s) / 1e9, 9.9770, 5e-4);
}

TEST(fdm, cutoff_clips_round_off_but_rejects_real_negatives) {
    EXPECT_EQ(eigenvalue_to_cutoff(-1e-3, 1e7), 0.0);
    EXPECT_THROW(eigenvalue_to_cutoff(-1.0, 1e7), std::domain_error);
    EXPECT_THROW(eigenvalue_to_cutoff(std::nan(""), 1.0), std::domain_error);
}

TEST(fdm, analytic_cutoffs) {
    EXPECT_NEAR(analytic_cutoff(table_spec(ModeFamily::TE), 1, 0) / 1e9, 9.9931, 1e-4);
    EXPECT_NEAR(analytic_cutoff(table_spec(ModeFamily::TE), 0, 1) / 1e9, 14.9896, 1e-4);
    EXPECT_NEAR(analytic_cutoff(table_spec(ModeFamily::TM), 1, 1) / 1e9, 18.0153, 1e-4);
    EXPECT_NEAR(analytic_cutoff(table_spec(ModeFamily::TM), 2, 1) / 1e9, 24.9827, 1e-4);
}

TEST(fdm, analytic_cutoff_rejects_invalid_indices) {
    EXPECT_THROW(analytic_cutoff(table_spec(ModeFamily::TE), 0, 0), std::invalid_argument);
    EXPECT_THROW(analytic_cutoff(table_spec(ModeFamily::TM), 1, 0), std::invalid_argument);
    EXPECT_THROW(analytic_cutoff(table_spec(ModeFamily::TM), 0, 2), std::invalid_argument);
}

TEST(fdm, discretization_error_below_one_percent) {
    const WaveguideSpec s = table_spec(ModeFamily::TE);
    const double discrete = eigenvalue_to_cutoff(discrete_mode_eigenvalue(s, 1, 0), s);
    const double exact = analytic_cutoff(s, 1, 0);
    EXPECT_LT(discrete, exact);
    EXPECT_LT((exact - discrete) / exact, 0.01);
}
