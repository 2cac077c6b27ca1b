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

#ifndef CATALYST_TESTS_ORACLES_H
#define CATALYST_TESTS_ORACLES_H

// Test-only reference computations. Nothing here calls into the kernels or
// the expansion code it is used to check.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "catalyst/state.h"

namespace catalyst::testing {

using Matrix = std::vector<std::vector<Amplitude>>;

/// Sum over all permutations via std::next_permutation; the sign comes from
/// an explicit inversion count.
inline Amplitude oracle_permutation_sum(const Matrix &m, bool alternating) {
    size_t n = m.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Amplitude total = 0.0;
    do {
        Amplitude prod = 1.0;
        for (size_t k = 0; k < n; k++) {
            prod *= m[k][perm[k]];
        }
        if (alternating) {
            size_t inversions = 0;
            for (size_t a = 0; a < n; a++) {
                for (size_t b = a + 1; b < n; b++) {
                    inversions += perm[a] > perm[b];
                }
            }
            if (inversions % 2) {
                prod = -prod;
            }
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Matrix random_matrix(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Matrix m(n, std::vector<Amplitude>(n));
    for (auto &row : m) {
        for (auto &x : row) {
            x = {gauss(rng), gauss(rng)};
        }
    }
    return m;
}

inline GramMatrix to_gram(const Matrix &m) {
    return GramMatrix::from_rows(m);
}

inline double relative_error(Amplitude got, Amplitude want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

/// Random superposition over a small pool of basis states, so that slots
/// overlap often and Pauli cancellations actually occur.
inline OneParticleKet random_slot(std::mt19937_64 &rng, size_t max_terms = 3) {
    static const char *modes[] = {"A", "B", "C"};
    std::uniform_int_distribution<size_t> count(1, max_terms);
    std::uniform_int_distribution<size_t> mode_pick(0, 2);
    std::uniform_int_distribution<int> spin_pick(0, 1);
    std::normal_distribution<double> gauss;
    OneParticleKet ket;
    size_t terms = count(rng);
    for (size_t k = 0; k < terms; k++) {
        ket.add({ModeLabel(modes[mode_pick(rng)]), spin_pick(rng) ? Spin::up : Spin::down},
                Amplitude{gauss(rng), gauss(rng)});
    }
    if (ket.empty()) {
        ket.add({ModeLabel("A"), Spin::down}, 1.0);
    }
    return ket;
}

inline ProductKet random_product(std::mt19937_64 &rng, size_t slots, Statistics stats) {
    std::vector<OneParticleKet> v;
    for (size_t k = 0; k < slots; k++) {
        v.push_back(random_slot(rng));
    }
    return ProductKet(std::move(v), stats);
}

/// Postselection probability for the extraction input computed in Fock
/// space: the up particle lands in any mode (probability 1/n for the one left
/// free) and the n-1 identical down bosons, all starting in one mode, end one
/// per remaining mode with probability (n-1)! |1/sqrt(n)|^(2(n-1)). Summed
/// over the n choices of free mode this is (n-1)!/n^(n-1).
inline double fock_extraction_probability(size_t n) {
    double p = 1;
    for (size_t k = 1; k < n; k++) {
        p *= static_cast<double>(k) / static_cast<double>(n);
    }
    return p;
}

}  // namespace catalyst::testing

#endif
