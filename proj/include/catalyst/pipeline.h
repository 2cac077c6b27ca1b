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

#ifndef CATALYST_PIPELINE_H
#define CATALYST_PIPELINE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "catalyst/measurement.h"
#include "catalyst/scheme_dsl.h"

namespace catalyst {

struct StepRecord {
    std::string kind;  // "postselect" or "merge"
    double probability = 0;
};

struct SamplingRecord {
    uint64_t seed = 0;
    uint64_t shots = 0;
    std::string generator;
    double success_frequency = 0;
};

struct RunReport {
    std::string scheme;
    Statistics statistics = Statistics::boson;
    size_t n = 0;
    std::vector<StepRecord> steps;
    std::optional<double> fidelity;
    std::optional<int> eta;
    std::optional<SamplingRecord> sampling;

    /// Product of the step probabilities.
    double success_probability() const;
};

struct SamplingOptions {
    uint64_t shots = 0;
    uint64_t seed = 0;
};

/// Expands the compiled ket and executes its steps in order.
///
/// `verify w` treats the modes of the latest postselection as the W register,
/// factors every other occupied mode out of the state (their signs multiply
/// into eta) and compares the remainder with the W state on the register.
/// Sampling draws from the normalized pre-postselection state and counts the
/// shots that satisfy the first postselection.
RunReport run_scheme(const CompiledScheme &scheme, std::string descriptor,
                     std::optional<SamplingOptions> sampling = std::nullopt);

/// Rounds to 12 significant digits, the precision used for every printed real.
double round_significant(double value);
/// Locale-independent 12-significant-digit rendering.
std::string format_real(double value);

nlohmann::json to_json(const RunReport &report);
RunReport report_from_json(const nlohmann::json &j);

}  // namespace catalyst

#endif
