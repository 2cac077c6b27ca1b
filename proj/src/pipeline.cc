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

#include "catalyst/pipeline.h"

#include <charconv>
#include <cmath>
#include <set>

#include "catalyst/errors.h"

namespace catalyst {

double RunReport::success_probability() const {
    double p = 1;
    for (const auto &s : steps) {
        p *= s.probability;
    }
    return p;
}

RunReport run_scheme(const CompiledScheme &scheme, std::string descriptor, std::optional<SamplingOptions> sampling) {
    RunReport report;
    report.scheme = std::move(descriptor);
    report.statistics = scheme.ket.statistics();
    report.n = scheme.ket.size();

    CanonicalState initial = expand(scheme.ket);
    if (norm(initial) == 0.0) {
        throw PauliForbiddenError("scheme state has zero norm");
    }
    CanonicalState state = initial.normalized();
    std::optional<std::vector<ModeLabel>> reg;
    std::optional<OccupancyPattern> first_pattern;

    for (const auto &step : scheme.steps) {
        if (const auto *ps = std::get_if<PostselectStep>(&step)) {
            OccupancyPattern pattern = single_occupancy(ps->modes);
            if (!first_pattern) {
                first_pattern = pattern;
            }
            PostselectResult r = postselect_single_occupancy(state, pattern);
            report.steps.push_back({"postselect", r.probability});
            if (r.empty()) {
                throw PhysicsError("postselection on single occupancy has zero probability");
            }
            state = std::move(r.state);
            reg = ps->modes;
            report.n = ps->modes.size();
        } else if (const auto *ms = std::get_if<MergeStep>(&step)) {
            std::map<ModeLabel, ModeLabel> mapping;
            for (const auto &src : ms->sources) {
                mapping[src] = ms->target;
            }
            CanonicalState merged = merge_modes(state, mapping);
            double kept = norm(merged);
            report.steps.push_back({"merge", kept * kept});
            if (kept == 0.0) {
                throw PhysicsError("merge annihilated the state");
            }
            state = merged.scaled(1.0 / kept);
        } else {
            if (!reg) {
                throw UsageError("verify w needs a preceding postselect step");
            }
            std::set<ModeLabel> in_register(reg->begin(), reg->end());
            std::set<ModeLabel> extra;
            for (const auto &[seq, amp] : state.terms()) {
                for (const auto &b : seq) {
                    if (!in_register.contains(b.mode)) {
                        extra.insert(b.mode);
                    }
                }
            }
            int sign = 1;
            for (const auto &mode : extra) {
                FactorResult f = factor_out_mode(state, mode);
                sign *= f.sign;
                state = std::move(f.remainder);
            }
            if (state.particle_count() != reg->size()) {
                throw NotFactorizableError("register holds " + std::to_string(state.particle_count()) +
                                           " particles after factoring, expected " + std::to_string(reg->size()));
            }
            report.fidelity = fidelity(state, build_w_state(*reg, state.statistics()));
            report.eta = sign;
        }
    }

    if (sampling) {
        if (!first_pattern) {
            throw UsageError("sampling needs a postselect step to define success");
        }
        SampleResult s = sample(initial, sampling->shots, sampling->seed);
        report.sampling = SamplingRecord{s.seed, s.shots, std::string(s.generator),
                                         static_cast<double>(s.count_where(*first_pattern)) /
                                             static_cast<double>(s.shots)};
    }
    return report;
}

double round_significant(double value) {
    std::string text = format_real(value);
    double out = 0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, ptr);
}

nlohmann::json to_json(const RunReport &report) {
    nlohmann::json j;
    j["scheme"] = report.scheme;
    j["statistics"] = std::string(to_string(report.statistics));
    j["n"] = report.n;
    j["steps"] = nlohmann::json::array();
    for (const auto &s : report.steps) {
        j["steps"].push_back({{"kind", s.kind}, {"probability", round_significant(s.probability)}});
    }
    j["fidelity"] = report.fidelity ? nlohmann::json(round_significant(*report.fidelity)) : nlohmann::json(nullptr);
    j["eta"] = report.eta ? nlohmann::json(*report.eta) : nlohmann::json(nullptr);
    if (report.sampling) {
        j["sampling"] = {{"seed", report.sampling->seed},
                         {"shots", report.sampling->shots},
                         {"generator", report.sampling->generator},
                         {"success_frequency", round_significant(report.sampling->success_frequency)}};
    }
    return j;
}

RunReport report_from_json(const nlohmann::json &j) {
    RunReport r;
    r.scheme = j.at("scheme").get<std::string>();
    r.statistics = parse_statistics(j.at("statistics").get<std::string>());
    r.n = j.at("n").get<size_t>();
    for (const auto &s : j.at("steps")) {
        r.steps.push_back({s.at("kind").get<std::string>(), s.at("probability").get<double>()});
    }
    if (!j.at("fidelity").is_null()) {
        r.fidelity = j.at("fidelity").get<double>();
    }
    if (!j.at("eta").is_null()) {
        r.eta = j.at("eta").get<int>();
    }
    if (j.contains("sampling")) {
        const auto &s = j.at("sampling");
        r.sampling = SamplingRecord{s.at("seed").get<uint64_t>(), s.at("shots").get<uint64_t>(),
                                    s.at("generator").get<std::string>(), s.at("success_frequency").get<double>()};
    }
    return r;
}

}  // namespace catalyst
