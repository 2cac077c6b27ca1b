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

#include "catalyst/basis.h"

#include "catalyst/errors.h"
#include "gtest/gtest.h"

using namespace catalyst;

namespace {
BasisState b(const char *mode, Spin s) {
    return {ModeLabel(mode), s};
}
}  // namespace

TEST(basis, statistics_eta) {
    EXPECT_EQ(eta(Statistics::boson), 1);
    EXPECT_EQ(eta(Statistics::fermion), -1);
    EXPECT_EQ(parse_statistics("fermion"), Statistics::fermion);
    EXPECT_THROW(parse_statistics("anyon"), UsageError);
}

TEST(basis, order_is_mode_then_down_before_up) {
    EXPECT_LT(b("M1", Spin::down), b("M1", Spin::up));
    EXPECT_LT(b("C", Spin::up), b("M1", Spin::down));
    EXPECT_LT(b("M1", Spin::up), b("M2", Spin::down));
    EXPECT_THROW(ModeLabel(""), UsageError);
}

TEST(basis, canonicalize_single_swap) {
    auto boson = canonicalize({b("M2", Spin::down), b("M1", Spin::up)}, Statistics::boson);
    EXPECT_EQ(boson.basis, (BasisSequence{b("M1", Spin::up), b("M2", Spin::down)}));
    EXPECT_EQ(boson.sign, 1);
    EXPECT_FALSE(boson.zero);

    auto fermion = canonicalize({b("M2", Spin::down), b("M1", Spin::up)}, Statistics::fermion);
    EXPECT_EQ(fermion.basis, boson.basis);
    EXPECT_EQ(fermion.sign, -1);
}

TEST(basis, canonicalize_pauli_zero) {
    auto r = canonicalize({b("C", Spin::down), b("C", Spin::down)}, Statistics::fermion);
    EXPECT_TRUE(r.zero);
    EXPECT_EQ(r.sign, 0);

    auto boson = canonicalize({b("C", Spin::down), b("C", Spin::down)}, Statistics::boson);
    EXPECT_FALSE(boson.zero);
    EXPECT_EQ(boson.sign, 1);
}

TEST(basis, canonicalize_parity_matches_cycle_structure) {
    // A 3-cycle is even, a 4-cycle is odd.
    auto three = canonicalize({b("B", Spin::down), b("C", Spin::down), b("A", Spin::down)}, Statistics::fermion);
    EXPECT_EQ(three.sign, 1);
    auto four = canonicalize(
        {b("B", Spin::down), b("C", Spin::down), b("D", Spin::down), b("A", Spin::down)}, Statistics::fermion);
    EXPECT_EQ(four.sign, -1);
}

TEST(basis, self_overlap_multiplicities) {
    BasisSequence seq{b("C", Spin::down), b("C", Spin::down), b("C", Spin::down), b("M1", Spin::up),
                      b("M1", Spin::up)};
    EXPECT_DOUBLE_EQ(self_overlap(seq, Statistics::boson), 12.0);  // 3! * 2!
    EXPECT_DOUBLE_EQ(self_overlap(seq, Statistics::fermion), 1.0);
    EXPECT_DOUBLE_EQ(self_overlap(BasisSequence{}, Statistics::boson), 1.0);
}

TEST(basis, printing) {
    EXPECT_EQ(to_string(b("M1", Spin::up)), "M1↑");
    BasisSequence seq{b("C", Spin::down), b("M2", Spin::up)};
    EXPECT_EQ(to_string(seq), "|C↓, M2↑⟩");
}
