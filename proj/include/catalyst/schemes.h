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

#ifndef CATALYST_SCHEMES_H
#define CATALYST_SCHEMES_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catalyst/state.h"

namespace catalyst {

/// Network layouts.
///
/// AncillaSeparate: particle i splits between M_i and its own ancilla C_i,
/// the (N+1)-th (spin up) particle splits over all M_i.
/// AncillaCommon: as above with every C_i replaced by one shared mode C.
/// Extraction: N particles sit in the nonlocal mode (1/sqrt N) sum_i M_i, one
/// spin up and N-1 spin down. Bosons only.
enum class SchemeVariant { AncillaSeparate, AncillaCommon, Extraction };

std::string_view to_string(SchemeVariant v);

ModeLabel measurement_mode(size_t i);  // "M<i>", 1-based
ModeLabel ancilla_mode(size_t i);      // "C<i>", 1-based
ModeLabel source_mode(size_t i);       // "A<i>", 1-based
inline const ModeLabel kCommonAncilla{"C"};
inline const ModeLabel kExtractionSource{"M"};

/// Pre-network product ket. Throws PauliForbiddenError for Extraction with
/// fermions and UsageError for n < 2.
ProductKet build_initial(size_t n, SchemeVariant variant, Statistics stats);

/// Product ket after the splitter nodes: N+1 slots for the ancilla variants,
/// N slots on the nonlocal mode for Extraction. Same errors as build_initial.
ProductKet build_network_state(size_t n, SchemeVariant variant, Statistics stats);

/// Modes M_1..M_n in the postselection order used by the schemes.
std::vector<ModeLabel> measurement_modes(size_t n);

/// Normalized W state over `modes`: uniform superposition of the single spin
/// up terms, the elementary vector written in `modes` order.
CanonicalState build_w_state(std::span<const ModeLabel> modes, Statistics stats);
CanonicalState build_w_state(size_t n, Statistics stats);

/// The (n+1)-particle post-merge state: term i is
/// |M_1 down, ..., C down (slot i), ..., M_n down, M_i up> / sqrt(n).
CanonicalState build_target(size_t n, Statistics stats);

/// The four success-probability formulas.
enum class ProbabilityKind { BosonAncilla, FermionAncilla, BosonCommon, BosonExtraction };

std::string_view to_string(ProbabilityKind k);
/// Accepts boson-ancilla, fermion-ancilla, boson-common, extraction.
ProbabilityKind parse_probability_kind(std::string_view text);

/// Closed form evaluated in binary64:
///   BosonAncilla     1 / 2^n
///   FermionAncilla   1 / (n + 1)
///   BosonCommon      1 / sum_{m=0}^{n} n! / (n - m)!
///   BosonExtraction  1 / ((n - 1)! n^(n-1))
double closed_form_prob(ProbabilityKind kind, size_t n);

/// Which closed form describes a (variant, statistics) pipeline. Separate
/// ancillas give 1/2^n for either statistics. Throws PauliForbiddenError for
/// fermionic extraction.
ProbabilityKind probability_kind_for(SchemeVariant variant, Statistics stats);

struct ProbabilityRow {
    size_t n = 0;
    double p_boson_ancilla = 0;
    double p_fermion_ancilla = 0;
    double p_boson_common = 0;
    /// Empty when the protocol is not defined for the requested statistics.
    std::optional<double> p_extraction;
};

struct ProbabilityTable {
    std::vector<ProbabilityRow> rows;
};

/// Rows n_min..n_max. Throws UsageError unless 2 <= n_min <= n_max.
ProbabilityTable make_probability_table(size_t n_min, size_t n_max);

}  // namespace catalyst

#endif
