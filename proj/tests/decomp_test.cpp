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

#include "wgvqd/decomp.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace wgvqd;
using wgvqd::testing::random_state;
using wgvqd::testing::table_spec;
using wgvqd::testing::unit_spec;

TEST(decomp, eight_terms_plus_constant) {
    const auto h = decompose(table_spec(ModeFamily::TE));
    EXPECT_EQ(h.term_count(), 9u);
    ASSERT_EQ(h.groups.size(), 3u);
    EXPECT_EQ(h.groups[0].terms.size(), 2u);
    EXPECT_EQ(h.groups[1].terms.size(), 3u);
    EXPECT_EQ(h.groups[2].terms.size(), 3u);
    EXPECT_EQ(h.groups[1].conjugation, Conjugation::V);
    EXPECT_EQ(h.groups[2].conjugation, Conjugation::W);
}

TEST(decomp, constant_is_twice_the_scale_sum) {
    const WaveguideSpec s = table_spec(ModeFamily::TM);
    EXPECT_DOUBLE_EQ(decompose(s).constant, 2 * s.scale_x() + 2 * s.scale_y());
}

TEST(decomp, reconstructs_assembled_operator) {
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        for (unsigned nx = 1; nx <= 4; ++nx) {
            for (unsigned ny = 1; ny <= 4; ++ny) {
                if (nx + ny > 8) {
                    continue;
                }
                const WaveguideSpec s = table_spec(family, nx, ny);
                const DenseMatrix m = assemble_2d(s);
                const DenseMatrix r = reconstruct_dense(decompose(s));
                EXPECT_LE(max_abs_diff(m, r), 1e-12 * m.max_abs()) << to_string(family) << nx << ny;
            }
        }
    }
}

TEST(decomp, expectation_matches_dense_on_random_states) {
    std::mt19937_64 rng(41);
    for (auto family : {ModeFamily::TE, ModeFamily::TM}) {
        const WaveguideSpec s = table_spec(family, 3, 2);
        const DenseMatrix m = assemble_2d(s);
        const auto h = decompose(s);
        for (int rep = 0; rep < 10; ++rep) {
            const StateVector psi = random_state(5, rng);
            EXPECT_NEAR(decomposed_expectation(h, psi), wgvqd::testing::dense_expectation(m, psi),
                        1e-12 * m.max_abs());
        }
    }
}

TEST(decomp, applied_operator_matches_dense) {
    std::mt19937_64 rng(43);
    const WaveguideSpec s = unit_spec(2, 3, ModeFamily::TE);
    const DenseMatrix m = assemble_2d(s);
    const StateVector psi = random_state(5, rng);
    const StateVector out = apply_decomposed(decompose(s), psi);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Amplitude ref = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            ref += m(i, j) * psi[j];
        }
        EXPECT_NEAR(std::abs(out[i] - ref), 0.0, 1e-12);
    }
}

TEST(decomp, corner_sign_flips_with_family) {
    const auto te = decompose(unit_spec(2, 2, ModeFamily::TE));
    const auto tm = decompose(unit_spec(2, 2, ModeFamily::TM));
    const double b_te = te.groups[1].terms[2].observable.coefficient;
    const double b_tm = tm.groups[1].terms[2].observable.coefficient;
    EXPECT_EQ(b_te, -b_tm);
    EXPECT_EQ(b_tm, 1.0);
}

TEST(decomp, pauli_round_trip) {
    const DenseMatrix m = assemble_2d(unit_spec(2, 2, ModeFamily::TE));
    const auto terms = pauli_decompose(m);
    const auto [re, im] = pauli_reconstruct(terms, 4);
    EXPECT_LT(max_abs_diff(re, m), 1e-12);
    EXPECT_LT(im.max_abs(), 1e-12);
    for (const auto &t : terms) {
        EXPECT_EQ(t.pauli.size(), 4u);
        // A real symmetric matrix has no Y-odd components.
        EXPECT_NEAR(t.coefficient.imag(), 0.0, 1e-12) << t.pauli;
    }
}

TEST(decomp, pauli_terms_of_neumann_one_qubit) {
    const auto terms = pauli_decompose(build_1d_operator(1, BoundaryCondition::Neumann));
    ASSERT_EQ(terms.size(), 2u);
    for (const auto &t : terms) {
        if (t.pauli == "I") {
            EXPECT_NEAR(t.coefficient.real(), 1.0, 1e-15);
        } else {
            EXPECT_EQ(t.pauli, "X");
            EXPECT_NEAR(t.coefficient.real(), -1.0, 1e-15);
        }
    }
}

TEST(decomp, pauli_decompose_size_limit) {
    EXPECT_THROW(pauli_decompose(DenseMatrix::identity(128)), std::invalid_argument);
    EXPECT_THROW(pauli_decompose(DenseMatrix(2, 4)), std::invalid_argument);
}

TEST(decomp, describe_lists_terms) {
    const std::string d = decompose(table_spec(ModeFamily::TE, 2, 2)).describe();
    EXPECT_NE(d.find("X[0]"), std::string::npos);
    EXPECT_NE(d.find("X[2]"), std::string::npos);
}

TEST(decomp, tm_single_cell_reconstruction) {
    const DenseMatrix r = reconstruct_dense(decompose(unit_spec(1, 1, ModeFamily::TM)));
    // I (x) D + D (x) I with D = [[3, -1], [-1, 3]].
    const DenseMatrix d = build_1d_operator(1, BoundaryCondition::Dirichlet);
    EXPECT_LT(max_abs_diff(r, kron(DenseMatrix::identity(2), d) + kron(d, DenseMatrix::identity(2))), 1e-12);
    const double expected[4][4] = {{6, -1, -1, 0}, {-1, 6, 0, -1}, {-1, 0, 6, -1}, {0, -1, -1, 6}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_NEAR(r(i, j), expected[i][j], 1e-12);
        }
    }
}

TEST(decomp, constant_only) {
    DecomposedHamiltonian h;
    h.layout = {1, 1};
    h.constant = 2.5;
    EXPECT_EQ(max_abs_diff(reconstruct_dense(h), 2.5 * DenseMatrix::identity(4)), 0.0);
    std::mt19937_64 rng(47);
    EXPECT_NEAR(decomposed_expectation(h, random_state(2, rng)), 2.5, 1e-14);
}

TEST(decomp, pauli_terms_of_dirichlet_one_qubit) {
    const auto terms = pauli_decompose(build_1d_operator(1, BoundaryCondition::Dirichlet));
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0].pauli, "I");
    EXPECT_NEAR(terms[0].coefficient.real(), 3.0, 1e-15);
    EXPECT_EQ(terms[1].pauli, "X");
    EXPECT_NEAR(terms[1].coefficient.real(), -1.0, 1e-15);
}

TEST(decomp, pauli_terms_of_identity) {
    const auto terms = pauli_decompose(DenseMatrix::identity(4));
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].pauli, "II");
    EXPECT_NEAR(terms[0].coefficient.real(), 1.0, 1e-15);
}

TEST(decomp, shift_matrices_are_permutations) {
    for (unsigned k = 1; k <= 3; ++k) {
        const DenseMatrix p = shift_matrix(4, {1, k});
        EXPECT_EQ(max_abs_diff(p * p.transposed(), DenseMatrix::identity(16)), 0.0);
    }
}
