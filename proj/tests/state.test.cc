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

#include "catalyst/state.h"

#include <cmath>
#include <random>

#include "catalyst/errors.h"
#include "catalyst/schemes.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace catalyst;
using catalyst::testing::random_product;
using catalyst::testing::random_slot;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

OneParticleKet ket(const char *mode, Spin s) {
    return OneParticleKet::basis(ModeLabel(mode), s);
}

OneParticleKet split(const char *a, const char *b) {
    return OneParticleKet{{{ModeLabel(a), Spin::down}, kInvSqrt2}, {{ModeLabel(b), Spin::down}, kInvSqrt2}};
}

}  // namespace

TEST(one_particle, overlap_examples) {
    EXPECT_EQ(one_particle_overlap(ket("M1", Spin::down), ket("M1", Spin::down)), Amplitude{1.0});
    EXPECT_EQ(one_particle_overlap(ket("M1", Spin::down), ket("M1", Spin::up)), Amplitude{0.0});
    EXPECT_NEAR(std::abs(one_particle_overlap(split("M1", "C"), split("M2", "C")) - Amplitude{0.5}), 0, 1e-15);
}

TEST(one_particle, overlap_is_sesquilinear) {
    OneParticleKet a{{{ModeLabel("A"), Spin::up}, Amplitude{0, 1}}};
    OneParticleKet b{{{ModeLabel("A"), Spin::up}, Amplitude{2, 0}}};
    EXPECT_EQ(one_particle_overlap(a, b), (Amplitude{0, -2}));
    EXPECT_EQ(one_particle_overlap(b, a), (Amplitude{0, 2}));
}

TEST(one_particle, add_prunes_cancellation) {
    OneParticleKet k = ket("A", Spin::up);
    k.add({ModeLabel("A"), Spin::up}, -1.0);
    EXPECT_TRUE(k.empty());
    EXPECT_THROW(k.add({ModeLabel("A"), Spin::up}, Amplitude{NAN, 0}), std::domain_error);
}

TEST(product_overlap, examples) {
    ProductKet distinct({ket("M1", Spin::down), ket("M2", Spin::down)}, Statistics::boson);
    EXPECT_EQ(product_overlap(distinct, distinct), Amplitude{1.0});

    ProductKet cc_b({ket("C", Spin::down), ket("C", Spin::down)}, Statistics::boson);
    ProductKet cc_f({ket("C", Spin::down), ket("C", Spin::down)}, Statistics::fermion);
    EXPECT_EQ(product_overlap(cc_b, cc_b), Amplitude{2.0});
    EXPECT_EQ(product_overlap(cc_f, cc_f), Amplitude{0.0});

    ProductKet mmm({ket("M", Spin::up), ket("M", Spin::down), ket("M", Spin::down)}, Statistics::boson);
    EXPECT_EQ(product_overlap(mmm, mmm), Amplitude{2.0});
    EXPECT_NEAR(norm(mmm), std::sqrt(2.0), 1e-15);
}

TEST(product_overlap, incompatible) {
    ProductKet one({ket("A", Spin::up)}, Statistics::boson);
    ProductKet two({ket("A", Spin::up), ket("B", Spin::up)}, Statistics::boson);
    ProductKet one_f({ket("A", Spin::up)}, Statistics::fermion);
    EXPECT_THROW(product_overlap(one, two), IncompatibleError);
    EXPECT_THROW(product_overlap(one, one_f), IncompatibleError);
    EXPECT_THROW(ProductKet({}, Statistics::boson), UsageError);
}

TEST(expand, single_slot_linearity) {
    ProductKet k({split("M", "C")}, Statistics::boson);
    CanonicalState s = expand(k);
    ASSERT_EQ(s.size(), 2u);
    for (const auto &[seq, amp] : s.terms()) {
        EXPECT_NEAR(std::abs(amp - Amplitude{kInvSqrt2}), 0, 1e-15);
    }
}

TEST(expand, ancilla_separate_n2_has_8_terms) {
    for (auto stats : {Statistics::boson, Statistics::fermion}) {
        auto detail = expand_detailed(build_network_state(2, SchemeVariant::AncillaSeparate, stats));
        EXPECT_EQ(detail.elementary_terms, 8u);
        ASSERT_EQ(detail.state.size(), 8u);
        for (const auto &[seq, amp] : detail.state.terms()) {
            EXPECT_NEAR(std::abs(amp), 1.0 / (2.0 * std::sqrt(2.0)), 1e-15);
        }
    }
}

TEST(expand, fermion_common_n2_keeps_6_terms) {
    auto detail = expand_detailed(build_network_state(2, SchemeVariant::AncillaCommon, Statistics::fermion));
    EXPECT_EQ(detail.state.size(), 6u);
    EXPECT_EQ(detail.pauli_dropped, 2u);
}

TEST(expand, zero_slot_gives_empty_state) {
    ProductKet k({ket("A", Spin::up), OneParticleKet{}}, Statistics::boson);
    CanonicalState s = expand(k);
    EXPECT_TRUE(s.empty());
    EXPECT_EQ(norm(s), 0.0);
    EXPECT_EQ(norm(k), 0.0);
}

TEST(norm, examples) {
    ProductKet orth({ket("M1", Spin::down), ket("M2", Spin::down)}, Statistics::boson);
    EXPECT_NEAR(norm(orth), 1.0, 1e-15);
    EXPECT_NEAR(norm(expand(orth)), 1.0, 1e-15);

    auto fermion = build_network_state(2, SchemeVariant::AncillaCommon, Statistics::fermion);
    EXPECT_NEAR(norm(fermion), std::sqrt(3.0) / 2.0, 1e-14);
    CanonicalState fn = expand(fermion).normalized();
    for (const auto &[seq, amp] : fn.terms()) {
        EXPECT_NEAR(std::abs(amp), 1.0 / std::sqrt(6.0), 1e-14);
    }

    auto boson = build_network_state(2, SchemeVariant::AncillaCommon, Statistics::boson);
    EXPECT_NEAR(norm(boson), std::sqrt(5.0) / 2.0, 1e-14);
    EXPECT_NEAR(norm(expand(boson)), std::sqrt(5.0) / 2.0, 1e-14);
    CanonicalState bn = expand(boson).normalized();
    size_t single_occupancy_terms = 0;
    for (const auto &[seq, amp] : bn.terms()) {
        if (self_overlap(seq, Statistics::boson) == 1.0) {
            single_occupancy_terms++;
            EXPECT_NEAR(std::abs(amp), 1.0 / std::sqrt(10.0), 1e-14);
        }
    }
    EXPECT_GT(single_occupancy_terms, 0u);
}

TEST(inner, examples_and_errors) {
    auto w2 = build_w_state(2, Statistics::boson);
    EXPECT_NEAR(std::abs(inner(w2, w2) - Amplitude{1.0}), 0, 1e-14);
    CanonicalState downs(Statistics::boson, 2);
    downs.add({{ModeLabel("M1"), Spin::down}, {ModeLabel("M2"), Spin::down}}, 1.0);
    EXPECT_EQ(inner(w2, downs), Amplitude{0.0});

    CanonicalState three(Statistics::boson, 3);
    EXPECT_THROW(inner(w2, three), IncompatibleError);
    EXPECT_THROW(inner(w2, build_w_state(2, Statistics::fermion)), IncompatibleError);
    EXPECT_THROW(downs.add({{ModeLabel("M1"), Spin::down}}, 1.0), IncompatibleError);
}

// Randomized algebra properties. The acceptance binary runs the full
// 500-case versions; these keep per-commit coverage.

class AlgebraProperties : public ::testing::TestWithParam<Statistics> {};

TEST_P(AlgebraProperties, swap_rule) {
    std::mt19937_64 rng(11);
    Statistics stats = GetParam();
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + trial % 4;
        ProductKet k = random_product(rng, n, stats);
        size_t i = trial % n, j = (trial / 2 + 1) % n;
        if (i == j) {
            j = (i + 1) % n;
        }
        CanonicalState swapped = expand(k.with_swapped(i, j));
        CanonicalState expected = expand(k).scaled(static_cast<double>(eta(stats)));
        EXPECT_LT(max_coefficient_distance(swapped, expected), 1e-12);
    }
}

TEST_P(AlgebraProperties, multilinearity) {
    std::mt19937_64 rng(12);
    Statistics stats = GetParam();
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 4;
        ProductKet k = random_product(rng, n, stats);
        size_t slot = trial % n;
        OneParticleKet x = random_slot(rng), y = random_slot(rng);
        Amplitude a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
        CanonicalState lhs = expand(k.with_slot(slot, x * a + y * b));
        CanonicalState rx = expand(k.with_slot(slot, x)).scaled(a);
        CanonicalState ry = expand(k.with_slot(slot, y)).scaled(b);
        CanonicalState rhs(stats, n);
        for (const auto &[seq, amp] : rx.terms()) {
            rhs.add_sorted(seq, amp);
        }
        for (const auto &[seq, amp] : ry.terms()) {
            rhs.add_sorted(seq, amp);
        }
        rhs.prune();
        EXPECT_LT(max_coefficient_distance(lhs, rhs), 1e-12);
    }
}

TEST_P(AlgebraProperties, conjugate_symmetry) {
    std::mt19937_64 rng(13);
    Statistics stats = GetParam();
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 6;
        ProductKet a = random_product(rng, n, stats), b = random_product(rng, n, stats);
        Amplitude ab = product_overlap(a, b), ba = product_overlap(b, a);
        EXPECT_LT(std::abs(ab - std::conj(ba)), 1e-10 * std::max(1.0, std::abs(ab)));
    }
}

TEST_P(AlgebraProperties, inner_of_expansions_matches_kernel) {
    std::mt19937_64 rng(14);
    Statistics stats = GetParam();
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 6;
        ProductKet a = random_product(rng, n, stats), b = random_product(rng, n, stats);
        Amplitude kernel = product_overlap(a, b);
        Amplitude expanded = inner(expand(a), expand(b));
        EXPECT_LT(std::abs(kernel - expanded), 1e-10 * std::max(1.0, std::abs(kernel))) << "n=" << n;
    }
}

TEST_P(AlgebraProperties, orthonormal_slots_have_unit_norm) {
    Statistics stats = GetParam();
    for (size_t n = 1; n <= 8; n++) {
        std::vector<OneParticleKet> slots;
        for (size_t k = 0; k < n; k++) {
            slots.push_back(OneParticleKet::basis(ModeLabel("Q" + std::to_string(k)), k % 2 ? Spin::up : Spin::down));
        }
        ProductKet pk(slots, stats);
        EXPECT_NEAR(norm(pk), 1.0, 1e-12);
        EXPECT_NEAR(norm(expand(pk)), 1.0, 1e-12);
    }
}

INSTANTIATE_TEST_SUITE_P(statistics, AlgebraProperties, ::testing::Values(Statistics::boson, Statistics::fermion),
                         [](const auto &info) { return std::string(to_string(info.param)); });

TEST(algebra, pauli_exclusion_zero_norm) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + trial % 4;
        ProductKet k = random_product(rng, n, Statistics::fermion);
        OneParticleKet repeated = OneParticleKet::basis(ModeLabel("R"), Spin::up);
        k = k.with_slot(0, repeated).with_slot(n - 1, repeated);
        EXPECT_LT(norm(k), 1e-10);
        EXPECT_LT(norm(expand(k)), 1e-10);
    }
}

TEST(canonical_state, observables_independent_of_slot_order) {
    // Writing the same physical ket with slots permuted changes at most a
    // global sign, so probabilities and overlaps are unaffected.
    auto ket = build_network_state(3, SchemeVariant::AncillaCommon, Statistics::fermion);
    auto reordered = ket.with_swapped(0, 3).with_swapped(1, 2);
    CanonicalState a = expand(ket).normalized();
    CanonicalState b = expand(reordered).normalized();
    EXPECT_NEAR(std::norm(inner(a, b)), 1.0, 1e-12);
}
