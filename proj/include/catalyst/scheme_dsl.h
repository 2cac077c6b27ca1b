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

#ifndef CATALYST_SCHEME_DSL_H
#define CATALYST_SCHEME_DSL_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "catalyst/schemes.h"
#include "catalyst/state.h"

namespace catalyst {

// Line-oriented scheme files:
//
//   statistics = boson
//   particle: 1/sqrt(2)*M1 down + 1/sqrt(2)*C1 down
//   particle: 1/sqrt(2)*M2 down + 1/sqrt(2)*C2 down
//   particle: 1/sqrt(2)*M1 up + 1/sqrt(2)*M2 up
//   postselect single M1, M2
//   merge C1, C2 -> C
//   verify w
//
// '#' starts a comment. Coefficients are products of `p`, `p/q` and
// `p/sqrt(k)` factors, evaluated once at parse time.

enum class Severity { error, warning };

struct ParseDiagnostic {
    size_t line = 0;    // 1-based
    size_t column = 0;  // 1-based
    std::string message;
    Severity severity = Severity::error;
};

std::string to_string(const ParseDiagnostic &d);

struct ParticleSpec {
    std::vector<std::pair<BasisState, double>> terms;
    bool operator==(const ParticleSpec &) const = default;
};

struct PostselectStep {
    std::vector<ModeLabel> modes;
    bool operator==(const PostselectStep &) const = default;
};

struct MergeStep {
    std::vector<ModeLabel> sources;
    ModeLabel target;
    bool operator==(const MergeStep &) const = default;
};

struct VerifyStep {
    bool operator==(const VerifyStep &) const = default;
};

using SchemeStep = std::variant<PostselectStep, MergeStep, VerifyStep>;

struct SchemeAst {
    Statistics statistics = Statistics::boson;
    std::vector<ParticleSpec> particles;
    std::vector<SchemeStep> steps;
    bool operator==(const SchemeAst &) const = default;
};

struct ParseResult {
    std::optional<SchemeAst> ast;
    /// Errors and warnings in source order. Non-empty whenever `ast` is empty.
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const {
        return ast.has_value();
    }
};

ParseResult parse_scheme(std::string_view source);

/// Canonical text form; parse_scheme(pretty_print(ast)) reproduces `ast`.
std::string pretty_print(const SchemeAst &ast);

struct CompiledScheme {
    ProductKet ket;
    std::vector<SchemeStep> steps;
};

/// Builds the product ket from the particle lines. Throws PauliForbiddenError
/// for a fermionic scheme whose ket has (numerically) zero norm.
CompiledScheme compile(const SchemeAst &ast);

/// The built-in layouts as ASTs: network particles, single-occupancy
/// postselection on M1..Mn, the ancilla merge for separate ancillas, verify.
SchemeAst builtin_scheme(size_t n, SchemeVariant variant, Statistics stats);

/// Thrown by load helpers when a file does not parse.
struct SchemeParseError : std::runtime_error {
    explicit SchemeParseError(std::vector<ParseDiagnostic> diags);
    std::vector<ParseDiagnostic> diagnostics;
};

}  // namespace catalyst

#endif
