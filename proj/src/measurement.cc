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

#include "catalyst/measurement.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "catalyst/errors.h"

namespace catalyst {

namespace {

int sign_power(Statistics stats, size_t transpositions) {
    return (stats == Statistics::fermion && (transpositions % 2)) ? -1 : 1;
}

}  // namespace

OccupancyPattern single_occupancy(std::span<const ModeLabel> modes) {
    OccupancyPattern pattern;
    for (const auto &m : modes) {
        pattern[m] = 1;
    }
    return pattern;
}

bool satisfies(std::span<const BasisState> seq, const OccupancyPattern &pattern) {
    for (const auto &[mode, required] : pattern) {
        size_t count = 0;
        for (const auto &b : seq) {
            count += b.mode == mode;
        }
        if (count != required) {
            return false;
        }
    }
    return true;
}

PostselectResult postselect_single_occupancy(const CanonicalState &state, const OccupancyPattern &pattern) {
    double total = norm(state);
    if (total == 0.0) {
        throw PhysicsError("cannot postselect a zero-norm state");
    }
    CanonicalState kept(state.statistics(), state.particle_count());
    for (const auto &[seq, amp] : state.terms()) {
        if (satisfies(seq, pattern)) {
            kept.add_sorted(seq, amp);
        }
    }
    PostselectResult result{0.0, CanonicalState(state.statistics(), state.particle_count())};
    if (kept.empty()) {
        return result;
    }
    double kept_norm = norm(kept);
    result.probability = (kept_norm * kept_norm) / (total * total);
    result.state = kept.scaled(1.0 / kept_norm);
    return result;
}

CanonicalState merge_modes(const CanonicalState &state, const std::map<ModeLabel, ModeLabel> &mapping) {
    CanonicalState out(state.statistics(), state.particle_count());
    for (const auto &[seq, amp] : state.terms()) {
        BasisSequence relabeled = seq;
        for (auto &b : relabeled) {
            auto it = mapping.find(b.mode);
            if (it != mapping.end()) {
                b.mode = it->second;
            }
        }
        out.add(std::move(relabeled), amp);
    }
    out.prune();
    return out;
}

FactorResult factor_out_mode(const CanonicalState &state, const ModeLabel &mode) {
    if (state.empty()) {
        throw NotFactorizableError("cannot factor mode " + mode.name() + " out of an empty state");
    }
    Statistics stats = state.statistics();
    CanonicalState rest(stats, state.particle_count() - 1);
    std::optional<BasisState> single;
    for (const auto &[seq, amp] : state.terms()) {
        size_t position = seq.size();
        for (size_t k = 0; k < seq.size(); k++) {
            if (seq[k].mode != mode) {
                continue;
            }
            if (position != seq.size()) {
                throw NotFactorizableError("mode " + mode.name() + " is multiply occupied in " + to_string(seq));
            }
            position = k;
        }
        if (position == seq.size()) {
            throw NotFactorizableError("mode " + mode.name() + " is empty in " + to_string(seq));
        }
        if (single && *single != seq[position]) {
            throw NotFactorizableError("mode " + mode.name() + " holds inconsistent spins across terms");
        }
        single = seq[position];

        BasisSequence remainder = seq;
        remainder.erase(remainder.begin() + static_cast<std::ptrdiff_t>(position));
        int sign = sign_power(stats, seq.size() - 1 - position);
        rest.add_sorted(remainder, amp * static_cast<double>(sign));
    }
    rest.prune();
    CanonicalState normalized = rest.normalized();

    Amplitude lead = normalized.terms().begin()->second;
    double axis = std::abs(lead.real()) >= kPruneThreshold ? lead.real() : lead.imag();
    int sign = axis < 0 ? -1 : 1;
    return FactorResult{sign, *single, normalized.scaled(static_cast<double>(sign))};
}

CanonicalState attach_particle(const CanonicalState &remainder, const BasisState &single) {
    CanonicalState out(remainder.statistics(), remainder.particle_count() + 1);
    for (const auto &[seq, amp] : remainder.terms()) {
        BasisSequence extended = seq;
        extended.push_back(single);
        out.add(std::move(extended), amp);
    }
    out.prune();
    return out;
}

double fidelity(const CanonicalState &a, const CanonicalState &b) {
    return std::norm(inner(a, b));
}

ReducedDensity reduce(const CanonicalState &state, const std::set<ModeLabel> &keep) {
    Statistics stats = state.statistics();
    // Kept-part amplitude vectors grouped by the traced part. Distinct
    // canonical traced parts are orthogonal, so rho = sum_t <t|t> |v_t><v_t|.
    std::map<BasisSequence, std::map<BasisSequence, Amplitude>> by_traced;
    std::optional<size_t> kept_count;
    for (const auto &[seq, amp] : state.terms()) {
        BasisSequence kept;
        BasisSequence traced;
        size_t crossings = 0;
        for (const auto &b : seq) {
            if (keep.contains(b.mode)) {
                kept.push_back(b);
                crossings += traced.size();
            } else {
                traced.push_back(b);
            }
        }
        if (kept_count && *kept_count != kept.size()) {
            throw NotReducibleError("terms hold different particle counts inside the kept modes");
        }
        kept_count = kept.size();
        Amplitude weighted = amp * static_cast<double>(sign_power(stats, crossings)) *
                             std::sqrt(self_overlap(kept, stats));
        by_traced[traced][kept] += weighted;
    }

    ReducedDensity rho;
    std::map<BasisSequence, size_t> index;
    for (const auto &[traced, vec] : by_traced) {
        for (const auto &[kept, amp] : vec) {
            index.try_emplace(kept, 0);
        }
    }
    for (auto &[kept, idx] : index) {
        idx = rho.kept_basis.size();
        rho.kept_basis.push_back(kept);
    }
    size_t dim = rho.kept_basis.size();
    rho.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &[traced, vec] : by_traced) {
        double weight = self_overlap(traced, stats);
        for (const auto &[k1, a1] : vec) {
            for (const auto &[k2, a2] : vec) {
                rho.matrix(static_cast<Eigen::Index>(index[k1]), static_cast<Eigen::Index>(index[k2])) +=
                    weight * a1 * std::conj(a2);
            }
        }
    }
    Amplitude trace = rho.matrix.trace();
    if (std::abs(trace) == 0.0) {
        throw NotReducibleError("reduced state has zero trace");
    }
    rho.matrix /= trace.real();
    return rho;
}

double purity(const ReducedDensity &rho) {
    return (rho.matrix * rho.matrix).trace().real();
}

bool is_valid_density(const ReducedDensity &rho, double hermitian_tol, double eigen_tol) {
    if (rho.matrix.rows() != rho.matrix.cols() || rho.matrix.rows() == 0) {
        return false;
    }
    if ((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol) {
        return false;
    }
    if (std::abs(rho.matrix.trace() - Amplitude{1.0}) > hermitian_tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -eigen_tol;
}

OutcomeDistribution occupancy_distribution(const CanonicalState &state) {
    double total = norm(state);
    if (total == 0.0) {
        throw PhysicsError("outcome distribution of a zero-norm state");
    }
    OutcomeDistribution dist;
    for (const auto &[seq, amp] : state.terms()) {
        dist.entries.push_back({seq, std::norm(amp) * self_overlap(seq, state.statistics()) / (total * total)});
    }
    return dist;
}

uint64_t SampleResult::count_where(const OccupancyPattern &pattern) const {
    uint64_t total = 0;
    for (size_t k = 0; k < outcomes.size(); k++) {
        if (satisfies(outcomes[k].basis, pattern)) {
            total += counts[k];
        }
    }
    return total;
}

SampleResult sample(const CanonicalState &state, uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw UsageError("shots must be >= 1");
    }
    SampleResult result;
    result.outcomes = occupancy_distribution(state).entries;
    result.counts.assign(result.outcomes.size(), 0);
    result.shots = shots;
    result.seed = seed;

    std::vector<double> cdf;
    double running = 0;
    for (const auto &o : result.outcomes) {
        running += o.probability;
        cdf.push_back(running);
    }
    std::mt19937_64 rng(seed);
    for (uint64_t s = 0; s < shots; s++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        size_t k = std::min(static_cast<size_t>(it - cdf.begin()), cdf.size() - 1);
        result.counts[k]++;
    }
    return result;
}

}  // namespace catalyst
