// Copyright 2026 The Catalyst Authors
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

#include "catalyst/kernels.h"

#include <random>

#include "catalyst/errors.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace catalyst;
using catalyst::testing::oracle_permutation_sum;
using catalyst::testing::random_matrix;
using catalyst::testing::relative_error;
using catalyst::testing::to_gram;

TEST(kernels, permanent_small_cases) {
    auto ones = GramMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    EXPECT_NEAR(std::abs(permanent(ones) - Amplitude{2.0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(permanent_ryser(ones) - Amplitude{2.0}), 0.0, 1e-15);

    auto id = GramMatrix::square(3);
    for (size_t k = 0; k < 3; k++) {
        id(k, k) = 1.0;
    }
    EXPECT_NEAR(std::abs(permanent(id) - Amplitude{1.0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(permanent_ryser(id) - Amplitude{1.0}), 0.0, 1e-15);

    auto one = GramMatrix::from_rows({{Amplitude{0.5, -2.0}}});
    EXPECT_EQ(permanent_ryser(one), (Amplitude{0.5, -2.0}));
}

TEST(kernels, determinant_small_cases) {
    Amplitude a{1, 2}, bb{-0.5, 0}, c{3, -1}, d{0.25, 0.75};
    auto m = GramMatrix::from_rows({{a, bb}, {c, d}});
    EXPECT_NEAR(std::abs(determinant(m) - (a * d - bb * c)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(determinant_lu(m) - (a * d - bb * c)), 0.0, 1e-14);

    auto ones = GramMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    EXPECT_EQ(determinant(ones), Amplitude{0.0});
    EXPECT_EQ(determinant_lu(ones), Amplitude{0.0});
}

TEST(kernels, non_square_rejected) {
    GramMatrix m(2, 3);
    EXPECT_THROW(permanent(m), DimensionError);
    EXPECT_THROW(permanent_ryser(m), DimensionError);
    EXPECT_THROW(determinant(m), DimensionError);
    EXPECT_THROW(determinant_lu(m), DimensionError);
    EXPECT_THROW(permanent(GramMatrix{}), DimensionError);
    EXPECT_THROW(GramMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST(kernels, random_6x6_against_oracle) {
    std::mt19937_64 rng(20260101);
    auto m = random_matrix(6, rng);
    auto g = to_gram(m);
    EXPECT_LT(relative_error(permanent(g), oracle_permutation_sum(m, false)), 1e-10);
    EXPECT_LT(relative_error(determinant(g), oracle_permutation_sum(m, true)), 1e-10);
}

TEST(kernels, all_routes_agree_up_to_7) {
    std::mt19937_64 rng(7);
    for (size_t n = 1; n <= 7; n++) {
        for (int trial = 0; trial < 20; trial++) {
            auto m = random_matrix(n, rng);
            auto g = to_gram(m);
            Amplitude perm = oracle_permutation_sum(m, false);
            Amplitude det = oracle_permutation_sum(m, true);
            EXPECT_LT(relative_error(permanent_ryser(g), perm), 1e-10) << "n=" << n;
            EXPECT_LT(relative_error(permanent_naive(g), perm), 1e-10) << "n=" << n;
            EXPECT_LT(relative_error(determinant_lu(g), det), 1e-10) << "n=" << n;
            EXPECT_LT(relative_error(determinant_naive(g), det), 1e-10) << "n=" << n;
        }
    }
}

TEST(kernels, exchange_sum_dispatch) {
    auto ones = GramMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    EXPECT_EQ(exchange_sum(ones, Statistics::boson), Amplitude{2.0});
    EXPECT_EQ(exchange_sum(ones, Statistics::fermion), Amplitude{0.0});
}

TEST(kernels, ryser_handles_larger_sizes) {
    // perm(J_n) = n!
    auto j = GramMatrix::square(10);
    for (size_t r = 0; r < 10; r++) {
        for (size_t c = 0; c < 10; c++) {
            j(r, c) = 1.0;
        }
    }
    EXPECT_NEAR(permanent(j).real(), 3628800.0, 1e-6);
    EXPECT_NEAR(std::abs(determinant(j)), 0.0, 1e-9);
}

TEST(kernels, repeated_row_or_column_gives_exact_zero) {
    std::mt19937_64 rng(31);
    for (size_t n = 2; n <= 8; n++) {
        auto m = random_matrix(n, rng);
        auto rows = m;
        rows[n - 1] = rows[0];
        EXPECT_EQ(determinant(to_gram(rows)), Amplitude{0.0});
        auto cols = m;
        for (auto &row : cols) {
            row[n - 1] = row[0];
        }
        EXPECT_EQ(determinant(to_gram(cols)), Amplitude{0.0});
        // The permanent has no such cancellation.
        EXPECT_NE(permanent(to_gram(rows)), Amplitude{0.0});
    }
}
