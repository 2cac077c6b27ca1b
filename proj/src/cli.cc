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

#include "catalyst/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "catalyst/errors.h"
#include "catalyst/pipeline.h"
#include "catalyst/schemes.h"

namespace catalyst {

namespace {

struct VariantChoice {
    std::string variant;
    std::string stats;
    size_t n = 0;
};

SchemeVariant resolve_variant(const std::string &name, Statistics stats) {
    // Plain "ancilla" picks the layout each statistics is best served by.
    if (name == "ancilla") {
        return stats == Statistics::boson ? SchemeVariant::AncillaSeparate : SchemeVariant::AncillaCommon;
    }
    if (name == "ancilla-separate") {
        return SchemeVariant::AncillaSeparate;
    }
    if (name == "ancilla-common") {
        return SchemeVariant::AncillaCommon;
    }
    if (name == "extraction") {
        return SchemeVariant::Extraction;
    }
    throw UsageError("unknown variant '" + name + "'");
}

const std::vector<std::string> kVariantNames{"ancilla", "ancilla-separate", "ancilla-common", "extraction"};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open scheme file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SchemeAst load_scheme(const std::string &path, std::ostream &err) {
    ParseResult parsed = parse_scheme(read_file(path));
    if (!parsed.ok()) {
        throw SchemeParseError(parsed.diagnostics);
    }
    for (const auto &d : parsed.diagnostics) {
        err << path << ":" << to_string(d) << "\n";
    }
    return *parsed.ast;
}

void print_table_csv(const ProbabilityTable &table, std::ostream &out) {
    out << "n,p_boson_ancilla,p_fermion_ancilla,p_boson_common,p_extraction\n";
    for (const auto &r : table.rows) {
        out << r.n << "," << format_real(r.p_boson_ancilla) << "," << format_real(r.p_fermion_ancilla) << ","
            << format_real(r.p_boson_common) << "," << (r.p_extraction ? format_real(*r.p_extraction) : "n/a") << "\n";
    }
}

void print_table_json(const ProbabilityTable &table, std::ostream &out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : table.rows) {
        rows.push_back({{"n", r.n},
                        {"p_boson_ancilla", round_significant(r.p_boson_ancilla)},
                        {"p_fermion_ancilla", round_significant(r.p_fermion_ancilla)},
                        {"p_boson_common", round_significant(r.p_boson_common)},
                        {"p_extraction", r.p_extraction ? nlohmann::json(round_significant(*r.p_extraction))
                                                        : nlohmann::json("n/a")}});
    }
    out << nlohmann::json{{"rows", rows}}.dump(2) << "\n";
}

void print_report_text(const RunReport &r, std::ostream &out) {
    out << "scheme: " << r.scheme << "\n";
    out << "statistics: " << to_string(r.statistics) << "\n";
    out << "n: " << r.n << "\n";
    for (size_t k = 0; k < r.steps.size(); k++) {
        out << "step " << k + 1 << " " << r.steps[k].kind << ": " << format_real(r.steps[k].probability) << "\n";
    }
    out << "success_probability: " << format_real(r.success_probability()) << "\n";
    if (r.fidelity) {
        out << "fidelity: " << format_real(*r.fidelity) << "\n";
    }
    if (r.eta) {
        out << "eta: " << *r.eta << "\n";
    }
    if (r.sampling) {
        out << "sampling: generator=" << r.sampling->generator << " seed=" << r.sampling->seed
            << " shots=" << r.sampling->shots << " success_frequency=" << format_real(r.sampling->success_frequency)
            << "\n";
    }
}

struct RunOptions {
    std::string file;
    VariantChoice builtin;
    std::string format = "json";
    std::optional<uint64_t> shots;
    uint64_t seed = 1;
};

void add_run_options(CLI::App *cmd, RunOptions &opts) {
    cmd->add_option("file", opts.file, "Scheme file");
    cmd->add_option("--variant", opts.builtin.variant, "Built-in layout instead of a file")
        ->check(CLI::IsMember(kVariantNames));
    cmd->add_option("--stats", opts.builtin.stats, "Statistics for --variant")->check(CLI::IsMember({"boson", "fermion"}));
    cmd->add_option("--n", opts.builtin.n, "Size for --variant");
    cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--shots", opts.shots, "Monte Carlo shots")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "Sampler seed");
}

int do_run(const RunOptions &opts, bool require_shots, bool require_verify, std::ostream &out, std::ostream &err) {
    SchemeAst ast;
    std::string descriptor;
    if (!opts.file.empty()) {
        if (!opts.builtin.variant.empty()) {
            throw UsageError("give either a scheme file or --variant, not both");
        }
        ast = load_scheme(opts.file, err);
        descriptor = opts.file;
    } else {
        if (opts.builtin.variant.empty() || opts.builtin.stats.empty() || opts.builtin.n == 0) {
            throw UsageError("need a scheme file or --variant, --stats and --n");
        }
        Statistics stats = parse_statistics(opts.builtin.stats);
        SchemeVariant variant = resolve_variant(opts.builtin.variant, stats);
        ast = builtin_scheme(opts.builtin.n, variant, stats);
        descriptor = "builtin:" + std::string(to_string(variant));
    }
    if (require_shots && !opts.shots) {
        throw UsageError("--shots is required");
    }
    if (require_verify) {
        bool has_verify = false;
        for (const auto &s : ast.steps) {
            has_verify |= std::holds_alternative<VerifyStep>(s);
        }
        if (!has_verify) {
            throw SchemeParseError({ParseDiagnostic{0, 0, "scheme has no 'verify w' step", Severity::error}});
        }
    }
    std::optional<SamplingOptions> sampling;
    if (opts.shots) {
        sampling = SamplingOptions{*opts.shots, opts.seed};
    }
    RunReport report = run_scheme(compile(ast), descriptor, sampling);
    if (opts.format == "json") {
        out << to_json(report).dump(2) << "\n";
    } else {
        print_report_text(report, out);
    }
    if (report.fidelity && std::abs(*report.fidelity - 1.0) > 1e-10) {
        err << "verify w: fidelity " << format_real(*report.fidelity) << " differs from 1\n";
        return kExitPhysics;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Ancilla-mode W-state generation simulator", "wcat"};
    app.require_subcommand(1);

    VariantChoice prob_choice;
    std::string prob_mode = "exact";
    size_t boson_cap = 12;
    size_t fermion_cap = 16;
    auto *prob = app.add_subcommand("prob", "Success probability of a built-in scheme");
    prob->add_option("--variant", prob_choice.variant)->required()->check(CLI::IsMember(kVariantNames));
    prob->add_option("--stats", prob_choice.stats)->required()->check(CLI::IsMember({"boson", "fermion"}));
    prob->add_option("--n", prob_choice.n)->required();
    prob->add_option("--mode", prob_mode, "exact (closed form) or brute-force")
        ->check(CLI::IsMember({"exact", "exact-formula", "brute-force"}));
    prob->add_option("--boson-cap", boson_cap, "Largest n for brute-force bosons");
    prob->add_option("--fermion-cap", fermion_cap, "Largest n for brute-force fermions");

    size_t n_min = 2;
    size_t n_max = 10;
    std::string table_format = "csv";
    auto *table = app.add_subcommand("table", "Closed-form success probabilities per n");
    table->add_option("--n-min", n_min);
    table->add_option("--n-max", n_max);
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    RunOptions run_opts;
    auto *run = app.add_subcommand("run", "Execute a scheme file or built-in scheme");
    add_run_options(run, run_opts);
    RunOptions sample_opts;
    auto *sample_cmd = app.add_subcommand("sample", "run with Monte Carlo sampling (--shots required)");
    add_run_options(sample_cmd, sample_opts);
    RunOptions verify_opts;
    auto *verify = app.add_subcommand("verify", "run, requiring a 'verify w' step");
    add_run_options(verify, verify_opts);

    VariantChoice emit_choice;
    auto *emit = app.add_subcommand("emit", "Print a built-in scheme in file syntax");
    emit->add_option("--variant", emit_choice.variant)->required()->check(CLI::IsMember(kVariantNames));
    emit->add_option("--stats", emit_choice.stats)->required()->check(CLI::IsMember({"boson", "fermion"}));
    emit->add_option("--n", emit_choice.n)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "wcat: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (prob->parsed()) {
            Statistics stats = parse_statistics(prob_choice.stats);
            SchemeVariant variant = resolve_variant(prob_choice.variant, stats);
            size_t n = prob_choice.n;
            double p = 0;
            if (prob_mode == "brute-force") {
                size_t cap = stats == Statistics::boson ? boson_cap : fermion_cap;
                if (n > cap) {
                    throw ResourceError("brute-force n = " + std::to_string(n) + " exceeds the " +
                                        std::string(to_string(stats)) + " cap of " + std::to_string(cap));
                }
                p = run_scheme(compile(builtin_scheme(n, variant, stats)), "builtin").success_probability();
            } else {
                p = closed_form_prob(probability_kind_for(variant, stats), n);
            }
            out << format_real(p) << "\n";
        } else if (table->parsed()) {
            ProbabilityTable t = make_probability_table(n_min, n_max);
            if (table_format == "csv") {
                print_table_csv(t, out);
            } else {
                print_table_json(t, out);
            }
        } else if (run->parsed()) {
            return do_run(run_opts, false, false, out, err);
        } else if (sample_cmd->parsed()) {
            return do_run(sample_opts, true, false, out, err);
        } else if (verify->parsed()) {
            return do_run(verify_opts, false, true, out, err);
        } else if (emit->parsed()) {
            Statistics stats = parse_statistics(emit_choice.stats);
            out << pretty_print(builtin_scheme(emit_choice.n, resolve_variant(emit_choice.variant, stats), stats));
        }
    } catch (const SchemeParseError &e) {
        for (const auto &d : e.diagnostics) {
            err << "wcat: " << to_string(d) << "\n";
        }
        return kExitParse;
    } catch (const PhysicsError &e) {
        err << "wcat: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const ResourceError &e) {
        err << "wcat: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument &e) {
        err << "wcat: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace catalyst
