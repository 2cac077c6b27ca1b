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

#include "catalyst/scheme_dsl.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "catalyst/errors.h"

namespace catalyst {

namespace {

constexpr double kNormWarning = 1e-9;
constexpr double kNormError = 1e-6;
constexpr double kPauliNorm = 1e-10;

enum class TokenKind { identifier, number, symbol, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    size_t column = 0;
};

struct LineError {
    size_t column;
    std::string message;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            i++;
            continue;
        }
        size_t start = i;
        if (is_ident_start(c)) {
            while (i < line.size() && is_ident_char(line[i])) {
                i++;
            }
            tokens.push_back({TokenKind::identifier, std::string(line.substr(start, i - start)), start + 1});
        } else if (is_digit(c) || (c == '.' && i + 1 < line.size() && is_digit(line[i + 1]))) {
            while (i < line.size() && (is_digit(line[i]) || line[i] == '.')) {
                i++;
            }
            if (i < line.size() && (line[i] == 'e' || line[i] == 'E')) {
                size_t j = i + 1;
                if (j < line.size() && (line[j] == '+' || line[j] == '-')) {
                    j++;
                }
                if (j < line.size() && is_digit(line[j])) {
                    i = j;
                    while (i < line.size() && is_digit(line[i])) {
                        i++;
                    }
                }
            }
            tokens.push_back({TokenKind::number, std::string(line.substr(start, i - start)), start + 1});
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            tokens.push_back({TokenKind::symbol, "->", start + 1});
            i += 2;
        } else {
            tokens.push_back({TokenKind::symbol, std::string(1, c), start + 1});
            i++;
        }
    }
    tokens.push_back({TokenKind::end, "", line.size() + 1});
    return tokens;
}

class LineParser {
   public:
    explicit LineParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    }

    const Token &peek(size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token &next() {
        const Token &t = peek();
        if (pos_ < tokens_.size() - 1) {
            pos_++;
        }
        return t;
    }
    bool at_symbol(std::string_view s, size_t ahead = 0) const {
        return peek(ahead).kind == TokenKind::symbol && peek(ahead).text == s;
    }

    void expect_symbol(std::string_view s) {
        if (!at_symbol(s)) {
            fail(peek(), "expected '" + std::string(s) + "'");
        }
        next();
    }
    void expect_end() {
        if (peek().kind != TokenKind::end) {
            fail(peek(), "unexpected '" + peek().text + "'");
        }
    }

    [[noreturn]] static void fail(const Token &at, std::string message) {
        if (at.kind == TokenKind::end) {
            message += " at end of line";
        }
        throw LineError{at.column, std::move(message)};
    }

    ModeLabel mode() {
        const Token &t = peek();
        if (t.kind != TokenKind::identifier) {
            fail(t, "expected a mode name");
        }
        next();
        return ModeLabel(t.text);
    }

    std::vector<ModeLabel> mode_list() {
        std::vector<ModeLabel> modes{mode()};
        while (at_symbol(",")) {
            next();
            modes.push_back(mode());
        }
        return modes;
    }

    double number() {
        const Token &t = peek();
        if (t.kind != TokenKind::number) {
            fail(t, "expected a number");
        }
        double value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(value)) {
            fail(t, "malformed number '" + t.text + "'");
        }
        next();
        return value;
    }

    // factor := ['-'] number ['/' (number | 'sqrt' '(' integer ')')]
    double factor() {
        double sign = 1;
        if (at_symbol("-")) {
            next();
            sign = -1;
        }
        double value = number();
        if (!at_symbol("/")) {
            return sign * value;
        }
        next();
        if (peek().kind == TokenKind::identifier && peek().text == "sqrt") {
            next();
            expect_symbol("(");
            const Token &arg = peek();
            if (arg.kind != TokenKind::number || arg.text.find_first_not_of("0123456789") != std::string::npos) {
                fail(arg, "sqrt() takes a positive integer");
            }
            double radicand = number();
            if (radicand <= 0) {
                fail(arg, "sqrt() takes a positive integer");
            }
            expect_symbol(")");
            return sign * value / std::sqrt(radicand);
        }
        const Token &den_tok = peek();
        double den = number();
        if (den == 0) {
            fail(den_tok, "division by zero");
        }
        return sign * value / den;
    }

    bool at_coefficient() const {
        return peek().kind == TokenKind::number || at_symbol("-");
    }

    // term := [coeff '*'] mode spin
    std::pair<BasisState, double> term() {
        double coeff = 1;
        if (at_coefficient()) {
            coeff = factor();
            while (true) {
                expect_symbol("*");
                if (!at_coefficient()) {
                    break;
                }
                coeff *= factor();
            }
        }
        ModeLabel m = mode();
        const Token &spin_tok = peek();
        if (spin_tok.kind != TokenKind::identifier) {
            fail(spin_tok, "expected spin 'up' or 'down'");
        }
        Spin spin;
        if (spin_tok.text == "up") {
            spin = Spin::up;
        } else if (spin_tok.text == "down") {
            spin = Spin::down;
        } else {
            fail(spin_tok, "unknown spin '" + spin_tok.text + "' (expected up or down)");
        }
        next();
        return {BasisState{std::move(m), spin}, coeff};
    }

   private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::set<ModeLabel> modes_of(const ParticleSpec &p) {
    std::set<ModeLabel> out;
    for (const auto &[b, c] : p.terms) {
        out.insert(b.mode);
    }
    return out;
}

}  // namespace

std::string to_string(const ParseDiagnostic &d) {
    std::ostringstream out;
    out << d.line << ":" << d.column << ": " << (d.severity == Severity::error ? "error" : "warning") << ": "
        << d.message;
    return out.str();
}

ParseResult parse_scheme(std::string_view source) {
    ParseResult result;
    auto &diags = result.diagnostics;
    auto error = [&](size_t line, size_t column, std::string msg) {
        diags.push_back({line, column, std::move(msg), Severity::error});
    };

    SchemeAst ast;
    std::optional<size_t> statistics_line;
    std::set<ModeLabel> available;
    bool seen_step = false;
    bool seen_postselect = false;
    size_t line_no = 0;
    size_t last_line = 1;

    std::istringstream lines{std::string(source)};
    std::string raw;
    while (std::getline(lines, raw)) {
        line_no++;
        last_line = line_no;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        LineParser p(tokenize(raw));
        if (p.peek().kind == TokenKind::end) {
            continue;
        }
        const Token head = p.peek();
        try {
            if (head.kind != TokenKind::identifier) {
                LineParser::fail(head, "expected a directive");
            }
            p.next();
            if (head.text == "statistics") {
                p.expect_symbol("=");
                const Token &value = p.peek();
                if (value.kind != TokenKind::identifier || (value.text != "boson" && value.text != "fermion")) {
                    LineParser::fail(value, "statistics must be 'boson' or 'fermion'");
                }
                p.next();
                p.expect_end();
                if (statistics_line) {
                    LineParser::fail(head, "duplicate directive 'statistics' (first on line " +
                                               std::to_string(*statistics_line) + ")");
                }
                if (!ast.particles.empty() || seen_step) {
                    LineParser::fail(head, "'statistics' must be the first directive");
                }
                statistics_line = line_no;
                ast.statistics = parse_statistics(value.text);
            } else if (head.text == "particle") {
                p.expect_symbol(":");
                ParticleSpec spec;
                spec.terms.push_back(p.term());
                while (p.at_symbol("+")) {
                    p.next();
                    spec.terms.push_back(p.term());
                }
                p.expect_end();
                if (!statistics_line) {
                    LineParser::fail(head, "'statistics' header must precede particle lines");
                }
                if (seen_step) {
                    LineParser::fail(head, "particle lines must precede pipeline steps");
                }
                OneParticleKet ket;
                for (const auto &[b, c] : spec.terms) {
                    ket.add(b, c);
                }
                double deviation = std::abs(ket.norm_squared() - 1.0);
                if (deviation >= kNormError) {
                    LineParser::fail(head, "particle is not normalized (norm^2 = " + format_double(ket.norm_squared()) +
                                               ")");
                }
                if (deviation >= kNormWarning) {
                    diags.push_back({line_no, head.column,
                                     "particle norm^2 deviates from 1 by " + format_double(deviation),
                                     Severity::warning});
                }
                auto modes = modes_of(spec);
                available.insert(modes.begin(), modes.end());
                ast.particles.push_back(std::move(spec));
            } else if (head.text == "postselect") {
                const Token &kind = p.peek();
                if (kind.kind != TokenKind::identifier || kind.text != "single") {
                    LineParser::fail(kind, "expected 'single' after 'postselect'");
                }
                p.next();
                size_t col = p.peek().column;
                auto modes = p.mode_list();
                p.expect_end();
                std::set<ModeLabel> unique;
                for (const auto &m : modes) {
                    if (!available.contains(m)) {
                        throw LineError{col, "postselect references unknown mode '" + m.name() + "'"};
                    }
                    if (!unique.insert(m).second) {
                        throw LineError{col, "mode '" + m.name() + "' listed twice"};
                    }
                }
                seen_step = true;
                seen_postselect = true;
                ast.steps.push_back(PostselectStep{std::move(modes)});
            } else if (head.text == "merge") {
                size_t col = p.peek().column;
                auto sources = p.mode_list();
                p.expect_symbol("->");
                ModeLabel target = p.mode();
                p.expect_end();
                for (const auto &m : sources) {
                    if (!available.contains(m)) {
                        throw LineError{col, "merge references unknown mode '" + m.name() + "'"};
                    }
                }
                available.insert(target);
                seen_step = true;
                ast.steps.push_back(MergeStep{std::move(sources), std::move(target)});
            } else if (head.text == "verify") {
                const Token &what = p.peek();
                if (what.kind != TokenKind::identifier || what.text != "w") {
                    LineParser::fail(what, "only 'verify w' is supported");
                }
                p.next();
                p.expect_end();
                if (!seen_postselect) {
                    LineParser::fail(head, "'verify w' needs a preceding postselect step to define the register");
                }
                seen_step = true;
                ast.steps.push_back(VerifyStep{});
            } else {
                LineParser::fail(head, "unknown directive '" + head.text + "'");
            }
        } catch (const LineError &e) {
            error(line_no, e.column, e.message);
        } catch (const std::invalid_argument &e) {
            error(line_no, head.column, e.what());
        }
    }

    if (!statistics_line) {
        error(1, 1, "missing 'statistics = boson|fermion' header");
    }
    if (ast.particles.empty()) {
        error(last_line, 1, "scheme declares no particles");
    }
    bool has_error = false;
    for (const auto &d : diags) {
        has_error |= d.severity == Severity::error;
    }
    if (!has_error) {
        result.ast = std::move(ast);
    }
    return result;
}

std::string pretty_print(const SchemeAst &ast) {
    std::ostringstream out;
    out << "statistics = " << to_string(ast.statistics) << "\n";
    for (const auto &p : ast.particles) {
        out << "particle:";
        for (size_t k = 0; k < p.terms.size(); k++) {
            const auto &[b, c] = p.terms[k];
            out << (k ? " + " : " ") << format_double(c) << "*" << b.mode.name() << " " << to_string(b.spin);
        }
        out << "\n";
    }
    auto join = [](const std::vector<ModeLabel> &modes) {
        std::string s;
        for (size_t k = 0; k < modes.size(); k++) {
            s += (k ? ", " : "") + modes[k].name();
        }
        return s;
    };
    for (const auto &step : ast.steps) {
        if (const auto *ps = std::get_if<PostselectStep>(&step)) {
            out << "postselect single " << join(ps->modes) << "\n";
        } else if (const auto *ms = std::get_if<MergeStep>(&step)) {
            out << "merge " << join(ms->sources) << " -> " << ms->target.name() << "\n";
        } else {
            out << "verify w\n";
        }
    }
    return out.str();
}

CompiledScheme compile(const SchemeAst &ast) {
    std::vector<OneParticleKet> slots;
    for (const auto &p : ast.particles) {
        OneParticleKet ket;
        for (const auto &[b, c] : p.terms) {
            ket.add(b, c);
        }
        slots.push_back(std::move(ket));
    }
    ProductKet ket(std::move(slots), ast.statistics);
    if (ast.statistics == Statistics::fermion && norm(ket) < kPauliNorm) {
        throw PauliForbiddenError("scheme is Pauli-forbidden: the fermionic product state has zero norm");
    }
    return CompiledScheme{std::move(ket), ast.steps};
}

SchemeAst builtin_scheme(size_t n, SchemeVariant variant, Statistics stats) {
    ProductKet ket = build_network_state(n, variant, stats);
    SchemeAst ast;
    ast.statistics = stats;
    for (const auto &slot : ket.slots()) {
        ParticleSpec spec;
        for (const auto &[b, amp] : slot.terms()) {
            spec.terms.emplace_back(b, amp.real());
        }
        ast.particles.push_back(std::move(spec));
    }
    ast.steps.push_back(PostselectStep{measurement_modes(n)});
    if (variant == SchemeVariant::AncillaSeparate) {
        std::vector<ModeLabel> sources;
        for (size_t i = 1; i <= n; i++) {
            sources.push_back(ancilla_mode(i));
        }
        ast.steps.push_back(MergeStep{std::move(sources), kCommonAncilla});
    }
    ast.steps.push_back(VerifyStep{});
    return ast;
}

SchemeParseError::SchemeParseError(std::vector<ParseDiagnostic> diags)
    : std::runtime_error(diags.empty() ? "scheme parse error" : to_string(diags.front())),
      diagnostics(std::move(diags)) {
}

}  // namespace catalyst
