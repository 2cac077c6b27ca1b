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

#include "catalyst/schemes.h"

#include <cmath>

#include "catalyst/errors.h"

namespace catalyst {

namespace {

void require_n(size_t n) {
    if (n < 2) {
        throw UsageError("scheme size n must be >= 2, got " + std::to_string(n));
    }
}

void reject_fermion_extraction(SchemeVariant variant, Statistics stats) {
    if (variant == SchemeVariant::Extraction && stats == Statistics::fermion) {
        throw PauliForbiddenError(
            "extraction protocol is Pauli-forbidden for fermions: the nonlocal-mode input state has zero norm");
    }
}

OneParticleKet uniform_over(std::span<const ModeLabel> modes, Spin spin) {
    OneParticleKet out;
    double amp = 1.0 / std::sqrt(static_cast<double>(modes.size()));
    for (const auto &m : modes) {
        out.add({m, spin}, amp);
    }
    return out;
}

}  // namespace

std::string_view to_string(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::AncillaSeparate:
            return "ancilla-separate";
        case SchemeVariant::AncillaCommon:
            return "ancilla-common";
        case SchemeVariant::Extraction:
            return "extraction";
    }
    return "?";
}

ModeLabel measurement_mode(size_t i) {
    return ModeLabel("M" + std::to_string(i));
}

ModeLabel ancilla_mode(size_t i) {
    return ModeLabel("C" + std::to_string(i));
}

ModeLabel source_mode(size_t i) {
    return ModeLabel("A" + std::to_string(i));
}

std::vector<ModeLabel> measurement_modes(size_t n) {
    std::vector<ModeLabel> out;
    out.reserve(n);
    for (size_t i = 1; i <= n; i++) {
        out.push_back(measurement_mode(i));
    }
    return out;
}

ProductKet build_initial(size_t n, SchemeVariant variant, Statistics stats) {
    require_n(n);
    reject_fermion_extraction(variant, stats);
    std::vector<OneParticleKet> slots;
    if (variant == SchemeVariant::Extraction) {
        slots.push_back(OneParticleKet::basis(kExtractionSource, Spin::up));
        for (size_t i = 1; i < n; i++) {
            slots.push_back(OneParticleKet::basis(kExtractionSource, Spin::down));
        }
    } else {
        for (size_t i = 1; i <= n; i++) {
            slots.push_back(OneParticleKet::basis(source_mode(i), Spin::down));
        }
        slots.push_back(OneParticleKet::basis(source_mode(n + 1), Spin::up));
    }
    return ProductKet(std::move(slots), stats);
}

ProductKet build_network_state(size_t n, SchemeVariant variant, Statistics stats) {
    require_n(n);
    reject_fermion_extraction(variant, stats);
    auto modes = measurement_modes(n);
    std::vector<OneParticleKet> slots;
    if (variant == SchemeVariant::Extraction) {
        slots.push_back(uniform_over(modes, Spin::up));
        for (size_t i = 1; i < n; i++) {
            slots.push_back(uniform_over(modes, Spin::down));
        }
        return ProductKet(std::move(slots), stats);
    }
    double half = 1.0 / std::sqrt(2.0);
    for (size_t i = 1; i <= n; i++) {
        ModeLabel ancilla = variant == SchemeVariant::AncillaCommon ? kCommonAncilla : ancilla_mode(i);
        slots.push_back(OneParticleKet{{{modes[i - 1], Spin::down}, half}, {{ancilla, Spin::down}, half}});
    }
    slots.push_back(uniform_over(modes, Spin::up));
    return ProductKet(std::move(slots), stats);
}

CanonicalState build_w_state(std::span<const ModeLabel> modes, Statistics stats) {
    size_t n = modes.size();
    if (n < 1) {
        throw UsageError("W state needs at least one mode");
    }
    CanonicalState w(stats, n);
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (size_t excited = 0; excited < n; excited++) {
        BasisSequence seq;
        for (size_t k = 0; k < n; k++) {
            seq.push_back({modes[k], k == excited ? Spin::up : Spin::down});
        }
        w.add(std::move(seq), amp);
    }
    w.prune();
    return w;
}

CanonicalState build_w_state(size_t n, Statistics stats) {
    require_n(n);
    auto modes = measurement_modes(n);
    return build_w_state(modes, stats);
}

CanonicalState build_target(size_t n, Statistics stats) {
    require_n(n);
    auto modes = measurement_modes(n);
    CanonicalState target(stats, n + 1);
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (size_t i = 0; i < n; i++) {
        BasisSequence seq;
        for (size_t k = 0; k < n; k++) {
            seq.push_back(k == i ? BasisState{kCommonAncilla, Spin::down} : BasisState{modes[k], Spin::down});
        }
        seq.push_back({modes[i], Spin::up});
        target.add(std::move(seq), amp);
    }
    target.prune();
    return target;
}

std::string_view to_string(ProbabilityKind k) {
    switch (k) {
        case ProbabilityKind::BosonAncilla:
            return "boson-ancilla";
        case ProbabilityKind::FermionAncilla:
            return "fermion-ancilla";
        case ProbabilityKind::BosonCommon:
            return "boson-common";
        case ProbabilityKind::BosonExtraction:
            return "extraction";
    }
    return "?";
}

ProbabilityKind parse_probability_kind(std::string_view text) {
    for (auto k : {ProbabilityKind::BosonAncilla, ProbabilityKind::FermionAncilla, ProbabilityKind::BosonCommon,
                   ProbabilityKind::BosonExtraction}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw UsageError("unknown probability selector '" + std::string(text) + "'");
}

double closed_form_prob(ProbabilityKind kind, size_t n) {
    require_n(n);
    double nn = static_cast<double>(n);
    switch (kind) {
        case ProbabilityKind::BosonAncilla:
            return 1.0 / std::ldexp(1.0, static_cast<int>(n));
        case ProbabilityKind::FermionAncilla:
            return 1.0 / (nn + 1.0);
        case ProbabilityKind::BosonCommon: {
            // sum_{m=0}^{n} n!/(n-m)! as a running falling factorial.
            double sum = 0;
            double falling = 1;
            for (size_t m = 0; m <= n; m++) {
                sum += falling;
                falling *= static_cast<double>(n - m);
            }
            return 1.0 / sum;
        }
        case ProbabilityKind::BosonExtraction: {
            double denom = 1;
            for (size_t k = 2; k < n; k++) {
                denom *= static_cast<double>(k);
            }
            for (size_t k = 1; k < n; k++) {
                denom *= nn;
            }
            return 1.0 / denom;
        }
    }
    throw UsageError("unknown probability selector");
}

ProbabilityKind probability_kind_for(SchemeVariant variant, Statistics stats) {
    reject_fermion_extraction(variant, stats);
    switch (variant) {
        case SchemeVariant::AncillaSeparate:
            return ProbabilityKind::BosonAncilla;
        case SchemeVariant::AncillaCommon:
            return stats == Statistics::fermion ? ProbabilityKind::FermionAncilla : ProbabilityKind::BosonCommon;
        case SchemeVariant::Extraction:
            return ProbabilityKind::BosonExtraction;
    }
    throw UsageError("unknown scheme variant");
}

ProbabilityTable make_probability_table(size_t n_min, size_t n_max) {
    if (n_min < 2 || n_min > n_max) {
        throw UsageError("table range must satisfy 2 <= n-min <= n-max");
    }
    ProbabilityTable table;
    for (size_t n = n_min; n <= n_max; n++) {
        table.rows.push_back({n, closed_form_prob(ProbabilityKind::BosonAncilla, n),
                              closed_form_prob(ProbabilityKind::FermionAncilla, n),
                              closed_form_prob(ProbabilityKind::BosonCommon, n),
                              closed_form_prob(ProbabilityKind::BosonExtraction, n)});
    }
    return table;
}

}  // namespace catalyst
