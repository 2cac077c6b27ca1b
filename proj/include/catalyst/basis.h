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

#ifndef CATALYST_BASIS_H
#define CATALYST_BASIS_H

#include <compare>
#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catalyst {

using Amplitude = std::complex<double>;

/// Terms whose amplitude magnitude falls below this are dropped when merging.
inline constexpr double kPruneThreshold = 1e-14;

/// Exchange statistics. The underlying value is the swap factor eta.
enum class Statistics : int8_t { boson = +1, fermion = -1 };

inline int eta(Statistics s) {
    return static_cast<int>(s);
}

std::string_view to_string(Statistics s);
Statistics parse_statistics(std::string_view text);

/// Pseudospin. Enumerator values fix the order down < up.
enum class Spin : uint8_t { down = 0, up = 1 };

std::string_view to_string(Spin s);

/// Spatial mode name, e.g. "M1", "C", "A3".
class ModeLabel {
   public:
    ModeLabel() = default;
    explicit ModeLabel(std::string name);
    ModeLabel(const char *name) : ModeLabel(std::string(name)) {
    }

    const std::string &name() const {
        return name_;
    }

    auto operator<=>(const ModeLabel &) const = default;
    bool operator==(const ModeLabel &) const = default;

   private:
    std::string name_;
};

/// Orthonormal one-particle basis element |mode spin>.
struct BasisState {
    ModeLabel mode;
    Spin spin = Spin::down;

    auto operator<=>(const BasisState &) const = default;
    bool operator==(const BasisState &) const = default;
};

std::ostream &operator<<(std::ostream &out, const BasisState &b);
std::string to_string(const BasisState &b);

/// Ordered slot contents of an elementary N-particle vector.
using BasisSequence = std::vector<BasisState>;

std::string to_string(std::span<const BasisState> seq);

/// Result of sorting an elementary vector into canonical order.
struct Canonicalized {
    BasisSequence basis;
    /// eta^(transposition parity of the sort); 0 when `zero` is set.
    int sign = 1;
    /// Fermionic vector with a repeated basis state.
    bool zero = false;
};

/// Sorts `basis` and returns the exchange sign picked up on the way. For
/// fermions a repeated basis state yields the zero-vector flag instead.
Canonicalized canonicalize(BasisSequence basis, Statistics stats);

/// <b|b> for a sorted sequence: product of multiplicity factorials for bosons,
/// 1 for fermions (which never carry repeats).
double self_overlap(std::span<const BasisState> sorted, Statistics stats);

}  // namespace catalyst

#endif
