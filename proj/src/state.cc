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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <sstream>
#include <stdexcept>

#include "catalyst/errors.h"

namespace catalyst {

namespace {

void require_finite(Amplitude amp) {
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
        throw std::domain_error("non-finite amplitude");
    }
}

bool negligible(Amplitude amp) {
    return std::abs(amp) < kPruneThreshold;
}

}  // namespace

OneParticleKet::OneParticleKet(std::initializer_list<std::pair<BasisState, Amplitude>> terms) {
    for (const auto &[b, amp] : terms) {
        add(b, amp);
    }
}

void OneParticleKet::add(const BasisState &b, Amplitude amp) {
    require_finite(amp);
    auto [it, inserted] = terms_.try_emplace(b, amp);
    if (!inserted) {
        it->second += amp;
    }
    if (negligible(it->second)) {
        terms_.erase(it);
    }
}

Amplitude OneParticleKet::coefficient(const BasisState &b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Amplitude{0.0} : it->second;
}

double OneParticleKet::norm_squared() const {
    double total = 0;
    for (const auto &[b, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

OneParticleKet OneParticleKet::operator*(Amplitude scale) const {
    OneParticleKet out;
    for (const auto &[b, amp] : terms_) {
        out.add(b, amp * scale);
    }
    return out;
}

OneParticleKet OneParticleKet::operator+(const OneParticleKet &other) const {
    OneParticleKet out = *this;
    for (const auto &[b, amp] : other.terms_) {
        out.add(b, amp);
    }
    return out;
}

Amplitude one_particle_overlap(const OneParticleKet &bra, const OneParticleKet &ket) {
    const auto &small = bra.size() <= ket.size() ? bra.terms() : ket.terms();
    const auto &large = bra.size() <= ket.size() ? ket.terms() : bra.terms();
    bool bra_is_small = bra.size() <= ket.size();
    Amplitude total = 0.0;
    for (const auto &[b, amp] : small) {
        auto it = large.find(b);
        if (it == large.end()) {
            continue;
        }
        total += bra_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return total;
}

ProductKet::ProductKet(std::vector<OneParticleKet> slots, Statistics stats) : slots_(std::move(slots)), stats_(stats) {
    if (slots_.empty()) {
        throw UsageError("a product ket needs at least one slot");
    }
}

ProductKet ProductKet::with_slot(size_t index, OneParticleKet slot) const {
    ProductKet out = *this;
    out.slots_.at(index) = std::move(slot);
    return out;
}

ProductKet ProductKet::with_swapped(size_t i, size_t j) const {
    ProductKet out = *this;
    std::swap(out.slots_.at(i), out.slots_.at(j));
    return out;
}

GramMatrix gram_matrix(const ProductKet &bra, const ProductKet &ket) {
    if (bra.size() != ket.size()) {
        throw IncompatibleError("product_overlap: slot counts differ (" + std::to_string(bra.size()) + " vs " +
                                std::to_string(ket.size()) + ")");
    }
    if (bra.statistics() != ket.statistics()) {
        throw IncompatibleError("product_overlap: statistics differ");
    }
    size_t n = bra.size();
    GramMatrix g = GramMatrix::square(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            g(i, j) = one_particle_overlap(bra.slots()[i], ket.slots()[j]);
        }
    }
    return g;
}

Amplitude product_overlap(const ProductKet &bra, const ProductKet &ket) {
    return exchange_sum(gram_matrix(bra, ket), bra.statistics());
}

CanonicalState::CanonicalState(Statistics stats, size_t particle_count)
    : stats_(stats), particle_count_(particle_count) {
}

bool CanonicalState::add(BasisSequence seq, Amplitude amp) {
    if (seq.size() != particle_count_) {
        throw IncompatibleError("term has " + std::to_string(seq.size()) + " particles, state has " +
                                std::to_string(particle_count_));
    }
    Canonicalized c = canonicalize(std::move(seq), stats_);
    if (c.zero) {
        return false;
    }
    add_sorted(c.basis, amp * static_cast<double>(c.sign));
    return true;
}

void CanonicalState::add_sorted(const BasisSequence &sorted, Amplitude amp) {
    require_finite(amp);
    auto [it, inserted] = terms_.try_emplace(sorted, amp);
    if (!inserted) {
        it->second += amp;
        if (negligible(it->second)) {
            terms_.erase(it);
        }
    }
}

Amplitude CanonicalState::coefficient(const BasisSequence &sorted) const {
    auto it = terms_.find(sorted);
    return it == terms_.end() ? Amplitude{0.0} : it->second;
}

CanonicalState CanonicalState::scaled(Amplitude factor) const {
    CanonicalState out(stats_, particle_count_);
    for (const auto &[seq, amp] : terms_) {
        out.terms_.emplace(seq, amp * factor);
    }
    out.prune();
    return out;
}

CanonicalState CanonicalState::normalized() const {
    double n = norm(*this);
    if (n == 0.0) {
        throw PhysicsError("cannot normalize a zero-norm state");
    }
    return scaled(1.0 / n);
}

void CanonicalState::prune() {
    std::erase_if(terms_, [](const auto &kv) { return negligible(kv.second); });
}

namespace {

struct RankSequenceHash {
    size_t operator()(const std::vector<uint32_t> &v) const {
        size_t h = v.size();
        for (uint32_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

ExpansionDetail expand_detailed(const ProductKet &ket) {
    size_t n = ket.size();
    ExpansionDetail out{CanonicalState(ket.statistics(), n)};
    bool fermion = ket.statistics() == Statistics::fermion;

    // Rank every basis state that appears so the inner loop sorts integers.
    // Rank order equals canonical order, so sorted ranks map back to sorted
    // basis sequences.
    std::vector<BasisState> alphabet;
    for (const auto &slot : ket.slots()) {
        if (slot.empty()) {
            return out;
        }
        for (const auto &[b, amp] : slot.terms()) {
            alphabet.push_back(b);
        }
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::vector<std::vector<std::pair<uint32_t, Amplitude>>> choices(n);
    for (size_t k = 0; k < n; k++) {
        for (const auto &[b, amp] : ket.slots()[k].terms()) {
            auto rank = std::lower_bound(alphabet.begin(), alphabet.end(), b) - alphabet.begin();
            choices[k].emplace_back(static_cast<uint32_t>(rank), amp);
        }
    }

    // Odometer over one term per slot, in slot order, so the swap count of
    // the sort gives the fermionic sign.
    std::unordered_map<std::vector<uint32_t>, Amplitude, RankSequenceHash> acc;
    std::vector<size_t> digit(n, 0);
    std::vector<uint32_t> seq(n);
    while (true) {
        Amplitude coeff = 1.0;
        for (size_t k = 0; k < n; k++) {
            seq[k] = choices[k][digit[k]].first;
            coeff *= choices[k][digit[k]].second;
        }
        out.elementary_terms++;

        size_t swaps = 0;
        for (size_t i = 1; i < n; i++) {
            for (size_t j = i; j > 0 && seq[j] < seq[j - 1]; j--) {
                std::swap(seq[j], seq[j - 1]);
                swaps++;
            }
        }
        bool repeated = false;
        if (fermion) {
            for (size_t i = 1; i < n && !repeated; i++) {
                repeated = seq[i] == seq[i - 1];
            }
        }
        if (repeated) {
            out.pauli_dropped++;
        } else {
            acc[seq] += (fermion && swaps % 2) ? -coeff : coeff;
        }

        size_t k = n;
        bool done = true;
        while (k > 0) {
            k--;
            if (++digit[k] < choices[k].size()) {
                done = false;
                break;
            }
            digit[k] = 0;
        }
        if (done) {
            break;
        }
    }

    BasisSequence sorted(n);
    for (const auto &[ranks, amp] : acc) {
        for (size_t k = 0; k < n; k++) {
            sorted[k] = alphabet[ranks[k]];
        }
        out.state.add_sorted(sorted, amp);
    }
    out.state.prune();
    return out;
}

CanonicalState expand(const ProductKet &ket) {
    return expand_detailed(ket).state;
}

double norm(const CanonicalState &state) {
    double total = 0;
    for (const auto &[seq, amp] : state.terms()) {
        total += std::norm(amp) * self_overlap(seq, state.statistics());
    }
    return std::sqrt(total);
}

double norm(const ProductKet &ket) {
    double squared = product_overlap(ket, ket).real();
    return squared > 0 ? std::sqrt(squared) : 0.0;
}

Amplitude inner(const CanonicalState &a, const CanonicalState &b) {
    if (a.particle_count() != b.particle_count()) {
        throw IncompatibleError("inner: particle counts differ");
    }
    if (a.statistics() != b.statistics()) {
        throw IncompatibleError("inner: statistics differ");
    }
    Amplitude total = 0.0;
    for (const auto &[seq, amp] : a.terms()) {
        auto it = b.terms().find(seq);
        if (it != b.terms().end()) {
            total += std::conj(amp) * it->second * self_overlap(seq, a.statistics());
        }
    }
    return total;
}

double max_coefficient_distance(const CanonicalState &a, const CanonicalState &b) {
    double worst = 0;
    for (const auto &[seq, amp] : a.terms()) {
        worst = std::max(worst, std::abs(amp - b.coefficient(seq)));
    }
    for (const auto &[seq, amp] : b.terms()) {
        worst = std::max(worst, std::abs(amp - a.coefficient(seq)));
    }
    return worst;
}

std::string to_string(const CanonicalState &state) {
    std::ostringstream out;
    out.precision(12);
    bool first = true;
    for (const auto &[seq, amp] : state.terms()) {
        if (!first) {
            out << "\n";
        }
        first = false;
        out << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i) " << to_string(seq);
    }
    return out.str();
}

}  // namespace catalyst
