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

#ifndef CATALYST_MEASUREMENT_H
#define CATALYST_MEASUREMENT_H

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "catalyst/state.h"

namespace catalyst {

/// Required particle count per mode. Modes not listed are unconstrained.
using OccupancyPattern = std::map<ModeLabel, size_t>;

/// Pattern demanding exactly one particle in each of `modes`.
OccupancyPattern single_occupancy(std::span<const ModeLabel> modes);

bool satisfies(std::span<const BasisState> seq, const OccupancyPattern &pattern);

struct PostselectResult {
    double probability = 0;
    /// Renormalized kept part; empty when nothing survived.
    CanonicalState state;
    bool empty() const {
        return state.empty();
    }
};

/// Projects onto the occupancy sector described by `pattern` and renormalizes.
/// The probability is kept norm^2 over input norm^2.
PostselectResult postselect_single_occupancy(const CanonicalState &state, const OccupancyPattern &pattern);

/// Relabels modes (pure relabeling, no phase) and re-canonicalizes.
CanonicalState merge_modes(const CanonicalState &state, const std::map<ModeLabel, ModeLabel> &mapping);

struct FactorResult {
    /// Global sign eta' with input = eta' * (remainder (x) single), the single
    /// particle written in the last slot.
    int sign = 1;
    BasisState single;
    /// Normalized, with its leading canonical coefficient having a
    /// non-negative real part.
    CanonicalState remainder;
};

/// Splits off the one particle every term holds in `mode`. Throws
/// NotFactorizableError if some term holds zero or several particles there,
/// or the spin differs between terms.
FactorResult factor_out_mode(const CanonicalState &state, const ModeLabel &mode);

/// remainder (x) single with `single` appended in the last slot.
CanonicalState attach_particle(const CanonicalState &remainder, const BasisState &single);

/// |<a|b>|^2 for normalized states.
double fidelity(const CanonicalState &a, const CanonicalState &b);

struct ReducedDensity {
    /// Canonical kept-part sequences indexing rows and columns of `matrix`.
    std::vector<BasisSequence> kept_basis;
    Eigen::MatrixXcd matrix;
};

/// Traces out every mode outside `keep`. Valid when the traced part of each
/// term is spatially separated from the kept part; every term must hold the
/// same number of particles inside `keep`, otherwise NotReducibleError.
ReducedDensity reduce(const CanonicalState &state, const std::set<ModeLabel> &keep);

double purity(const ReducedDensity &rho);

/// Checks Hermiticity, unit trace and positivity at the given tolerances.
bool is_valid_density(const ReducedDensity &rho, double hermitian_tol = 1e-12, double eigen_tol = 1e-10);

struct Outcome {
    BasisSequence basis;
    double probability = 0;
};

struct OutcomeDistribution {
    std::vector<Outcome> entries;
};

/// Projective measurement in the canonical mode (x) spin basis:
/// p(b) = |c_b|^2 self_overlap(b) / norm^2.
OutcomeDistribution occupancy_distribution(const CanonicalState &state);

/// Name of the pseudorandom generator used by `sample`.
inline constexpr std::string_view kSamplerGenerator = "mt19937_64";

struct SampleResult {
    /// Aligned with occupancy_distribution(state).entries.
    std::vector<Outcome> outcomes;
    std::vector<uint64_t> counts;
    uint64_t shots = 0;
    uint64_t seed = 0;
    std::string_view generator = kSamplerGenerator;

    uint64_t count_where(const OccupancyPattern &pattern) const;
};

/// Inverse-CDF sampling of `shots` i.i.d. outcomes. Uniform variates are the
/// top 53 bits of mt19937_64 seeded with `seed`, so counts are reproducible
/// across platforms.
SampleResult sample(const CanonicalState &state, uint64_t shots, uint64_t seed);

}  // namespace catalyst

#endif
