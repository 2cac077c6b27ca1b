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

#ifndef CATALYST_STATE_H
#define CATALYST_STATE_H

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catalyst/basis.h"
#include "catalyst/kernels.h"

namespace catalyst {

/// Superposition of one-particle basis states.
class OneParticleKet {
   public:
    using Terms = std::map<BasisState, Amplitude>;

    OneParticleKet() = default;
    OneParticleKet(std::initializer_list<std::pair<BasisState, Amplitude>> terms);
    static OneParticleKet basis(BasisState b) {
        return OneParticleKet{{std::move(b), Amplitude{1.0}}};
    }
    static OneParticleKet basis(const ModeLabel &mode, Spin spin) {
        return basis(BasisState{mode, spin});
    }

    /// Accumulates `amp` onto `b`, pruning the entry if it cancels.
    void add(const BasisState &b, Amplitude amp);

    const Terms &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }
    size_t size() const {
        return terms_.size();
    }
    Amplitude coefficient(const BasisState &b) const;
    double norm_squared() const;

    OneParticleKet operator*(Amplitude scale) const;
    OneParticleKet operator+(const OneParticleKet &other) const;
    bool operator==(const OneParticleKet &) const = default;

   private:
    Terms terms_;
};

/// <bra|ket>, conjugate-linear in bra.
Amplitude one_particle_overlap(const OneParticleKet &bra, const OneParticleKet &ket);

/// Elementary N-particle vector |phi_1, ..., phi_N>, generally unnormalized.
class ProductKet {
   public:
    ProductKet(std::vector<OneParticleKet> slots, Statistics stats);

    const std::vector<OneParticleKet> &slots() const {
        return slots_;
    }
    size_t size() const {
        return slots_.size();
    }
    Statistics statistics() const {
        return stats_;
    }

    ProductKet with_slot(size_t index, OneParticleKet slot) const;
    ProductKet with_swapped(size_t i, size_t j) const;

   private:
    std::vector<OneParticleKet> slots_;
    Statistics stats_;
};

/// Gram matrix of slot overlaps, entry (i, j) = <bra_i|ket_j>.
GramMatrix gram_matrix(const ProductKet &bra, const ProductKet &ket);

/// N-particle amplitude: permanent (bosons) or determinant (fermions) of the
/// Gram matrix.
Amplitude product_overlap(const ProductKet &bra, const ProductKet &ket);

/// Weighted sum over sorted basis sequences. Coefficients are stored in the
/// raw convention: a bosonic sequence with repeats is not unit-norm, its
/// self-overlap is supplied by `self_overlap`.
class CanonicalState {
   public:
    using Terms = std::map<BasisSequence, Amplitude>;

    CanonicalState(Statistics stats, size_t particle_count);

    /// Canonicalizes `seq` and accumulates amp * sign. Pauli-zero sequences
    /// are dropped. Returns false when dropped.
    bool add(BasisSequence seq, Amplitude amp);
    /// Accumulates onto an already canonical sequence.
    void add_sorted(const BasisSequence &sorted, Amplitude amp);

    const Terms &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    Statistics statistics() const {
        return stats_;
    }
    size_t particle_count() const {
        return particle_count_;
    }
    Amplitude coefficient(const BasisSequence &sorted) const;

    CanonicalState scaled(Amplitude factor) const;
    /// Copy scaled to unit norm. Throws PhysicsError on a zero-norm state.
    CanonicalState normalized() const;

    /// Drops entries below the prune threshold.
    void prune();

   private:
    Terms terms_;
    Statistics stats_;
    size_t particle_count_;
};

struct ExpansionDetail {
    CanonicalState state;
    /// Elementary product terms generated before sorting and merging.
    size_t elementary_terms = 0;
    /// Elementary terms discarded by the fermionic repeated-state rule.
    size_t pauli_dropped = 0;
};

/// Distributes the product over every slot superposition and merges the
/// result into canonical form.
CanonicalState expand(const ProductKet &ket);
ExpansionDetail expand_detailed(const ProductKet &ket);

double norm(const CanonicalState &state);
double norm(const ProductKet &ket);

Amplitude inner(const CanonicalState &a, const CanonicalState &b);

/// Maximum coefficient difference over the union of both term sets.
double max_coefficient_distance(const CanonicalState &a, const CanonicalState &b);

std::string to_string(const CanonicalState &state);

}  // namespace catalyst

#endif
