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

#include <sstream>
#include <utility>

#include "catalyst/errors.h"

namespace catalyst {

std::string_view to_string(Statistics s) {
    return s == Statistics::boson ? "boson" : "fermion";
}

Statistics parse_statistics(std::string_view text) {
    if (text == "boson") {
        return Statistics::boson;
    }
    if (text == "fermion") {
        return Statistics::fermion;
    }
    throw UsageError("unknown statistics '" + std::string(text) + "' (expected boson or fermion)");
}

std::string_view to_string(Spin s) {
    return s == Spin::up ? "up" : "down";
}

ModeLabel::ModeLabel(std::string name) : name_(std::move(name)) {
    if (name_.empty()) {
        throw UsageError("mode label must be non-empty");
    }
}

std::ostream &operator<<(std::ostream &out, const BasisState &b) {
    return out << b.mode.name() << (b.spin == Spin::up ? "↑" : "↓");
}

std::string to_string(const BasisState &b) {
    std::ostringstream out;
    out << b;
    return out.str();
}

std::string to_string(std::span<const BasisState> seq) {
    std::ostringstream out;
    out << '|';
    for (size_t k = 0; k < seq.size(); k++) {
        if (k) {
            out << ", ";
        }
        out << seq[k];
    }
    out << "⟩";
    return out.str();
}

Canonicalized canonicalize(BasisSequence basis, Statistics stats) {
    // Insertion sort; slot counts are small and we need the swap parity.
    size_t swaps = 0;
    for (size_t i = 1; i < basis.size(); i++) {
        for (size_t j = i; j > 0 && basis[j] < basis[j - 1]; j--) {
            std::swap(basis[j], basis[j - 1]);
            swaps++;
        }
    }
    Canonicalized result;
    if (stats == Statistics::fermion) {
        for (size_t i = 1; i < basis.size(); i++) {
            if (basis[i] == basis[i - 1]) {
                result.basis = std::move(basis);
                result.sign = 0;
                result.zero = true;
                return result;
            }
        }
        result.sign = (swaps % 2) ? -1 : 1;
    }
    result.basis = std::move(basis);
    return result;
}

double self_overlap(std::span<const BasisState> sorted, Statistics stats) {
    if (stats == Statistics::fermion) {
        return 1.0;
    }
    double total = 1.0;
    size_t run = 1;
    for (size_t i = 1; i <= sorted.size(); i++) {
        if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
            run++;
            total *= static_cast<double>(run);
        } else {
            run = 1;
        }
    }
    return total;
}

}  // namespace catalyst
