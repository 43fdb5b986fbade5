#include "ann/parser.hpp"

#include <utility>

#include "ann/lexer.hpp"

namespace ann {

namespace {

bool is_type_keyword(const Token& tok) {
    return tok.kind == Token::Kind::Keyword &&
           (tok.text == "String" || tok.text == "int" || tok.text == "float" ||
            tok.text == "boolean" || tok.text == "Class");
}

std::optional<TargetKind> as_target_kind(const Token& tok) {
    if (tok.kind != Token::Kind::Keyword) return std::nullopt;
    for (TargetKind k : all_target_kinds) {
        if (tok.text == target_kind_keyword(k)) return k;
    }
    return std::nullopt;
}

std::optional<Modifier> as_modifier(const Token& tok) {
    if (tok.kind != Token::Kind::Keyword) return std::nullopt;
    for (Modifier m : all_modifiers) {
        if (tok.text == modifier_keyword(m)) return m;
    }
    return std::nullopt;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string_view source_name)
        : tokens_(std::move(tokens)), source_name_(source_name) {}

    ParseResult run() {
        AnnotationUnit unit;
        unit.source_name = std::string(source_name_);
        parse_package(unit);
        while (!at(Token::Kind::Eof)) {
            if (peek_keyword("runtime") || peek_keyword("annotation")) {
                parse_decl(unit);
            } else {
                error_expected("'annotation' or 'runtime'");
                recover_to_decl();
            }
        }
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (result.diagnostics.empty()) result.unit = std::move(unit);
        return result;
    }

private:
    std::vector<Token> tokens_;
    std::string_view source_name_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diagnostics_;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() {
        const Token& tok = peek();
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return tok;
    }
    bool at(Token::Kind kind) const { return peek().kind == kind; }
    bool peek_keyword(std::string_view word, std::size_t ahead = 0) const {
        const Token& tok = peek(ahead);
        return tok.kind == Token::Kind::Keyword && tok.text == word;
    }
    bool peek_punct(char c) const {
        return at(Token::Kind::Punct) && peek().text[0] == c;
    }
    bool eat_keyword(std::string_view word) {
        if (!peek_keyword(word)) return false;
        advance();
        return true;
    }
    bool eat_punct(char c) {
        if (!peek_punct(c)) return false;
        advance();
        return true;
    }

    std::string describe(const Token& tok) const {
        if (tok.kind == Token::Kind::Eof) return "end of file";
        return "'" + tok.text + "'";
    }

    void error_expected(std::string_view expected) {
        diagnostics_.push_back(make_error(
            "ANN0110", "expected " + std::string(expected) + ", found " + describe(peek()),
            peek().span));
    }

    bool expect_punct(char c, std::string_view expected) {
        if (eat_punct(c)) return true;
        error_expected(expected);
        return false;
    }

    // Skips past the next ';' (statement-level recovery); stops before '}' or EOF.
    void recover_to_semicolon() {
        while (!at(Token::Kind::Eof) && !peek_punct('}')) {
            if (peek_punct(';')) {
                advance();
                return;
            }
            advance();
        }
    }

    void recover_to_decl() {
        while (!at(Token::Kind::Eof) && !peek_keyword("annotation") && !peek_keyword("runtime")) {
            advance();
        }
    }

    SourceSpan span_between(const SourceSpan& first, const SourceSpan& last) const {
        SourceSpan span = first;
        span.length = static_cast<int>(last.offset + last.length - first.offset);
        return span;
    }

    void parse_package(AnnotationUnit& unit) {
        if (!eat_keyword("package")) return;
        std::string path;
        if (!at(Token::Kind::Identifier)) {
            error_expected("package name");
            recover_to_semicolon();
            return;
        }
        path += advance().text;
        while (eat_punct('.')) {
            if (!at(Token::Kind::Identifier)) {
                error_expected("identifier after '.'");
                recover_to_semicolon();
                return;
            }
            path += '.';
            path += advance().text;
        }
        expect_punct(';', "';' after package name");
        unit.package_name = std::move(path);
    }

    void parse_decl(AnnotationUnit& unit) {
        SourceSpan start = peek().span;
        AnnotationDecl decl;
        decl.runtime = eat_keyword("runtime");
        if (!eat_keyword("annotation")) {
            error_expected("'annotation'");
            recover_to_decl();
            return;
        }
        if (!at(Token::Kind::Identifier)) {
            error_expected("annotation name");
            recover_to_decl();
            return;
        }
        decl.name = advance().text;
        if (!expect_punct('{', "'{'")) {
            recover_to_decl();
            return;
        }
        while (!at(Token::Kind::Eof) && !peek_punct('}')) {
            parse_body_item(decl);
        }
        SourceSpan end = peek().span;
        if (!expect_punct('}', "'}'")) return;
        decl.span = span_between(start, end);
        unit.declarations.push_back(std::move(decl));
    }

    void parse_body_item(AnnotationDecl& decl) {
        if (is_type_keyword(peek())) {
            parse_attribute(decl);
        } else if (peek_keyword("require") || peek_keyword("forbid") || peek_keyword("at")) {
            parse_constraint(decl);
        } else {
            error_expected("an attribute, a constraint, or '}'");
            recover_to_semicolon();
        }
    }

    void parse_attribute(AnnotationDecl& decl) {
        SourceSpan start = peek().span;
        AttributeDecl attr;
        std::string type_word = advance().text;
        if (type_word == "String") attr.type = AttrType::String;
        else if (type_word == "int") attr.type = AttrType::Int;
        else if (type_word == "float") attr.type = AttrType::Float;
        else if (type_word == "boolean") attr.type = AttrType::Boolean;
        else attr.type = AttrType::Class;

        if (!at(Token::Kind::Identifier)) {
            error_expected("attribute name");
            recover_to_semicolon();
            return;
        }
        attr.name = advance().text;
        if (eat_punct('=')) {
            std::optional<Literal> lit = parse_literal();
            if (!lit) {
                recover_to_semicolon();
                return;
            }
            attr.default_value = std::move(lit);
        }
        SourceSpan end = peek().span;
        if (!expect_punct(';', "';' after attribute")) {
            recover_to_semicolon();
            return;
        }
        attr.span = span_between(start, end);
        decl.attributes.push_back(std::move(attr));
    }

    std::optional<Literal> parse_literal() {
        const Token& tok = peek();
        Literal lit;
        switch (tok.kind) {
            case Token::Kind::StringLiteral: lit.kind = Literal::Kind::String; break;
            case Token::Kind::IntLiteral: lit.kind = Literal::Kind::Int; break;
            case Token::Kind::FloatLiteral: lit.kind = Literal::Kind::Float; break;
            case Token::Kind::BoolLiteral: lit.kind = Literal::Kind::Bool; break;
            default:
                error_expected("a literal value");
                return std::nullopt;
        }
        lit.text = tok.text;
        lit.span = tok.span;
        advance();
        return lit;
    }

    void parse_constraint(AnnotationDecl& decl) {
        SourceSpan start = peek().span;
        Constraint constraint;

        if (eat_keyword("at")) {
            std::optional<TargetKind> scope = as_target_kind(peek());
            if (!scope) {
                error_expected("a target kind after 'at'");
                recover_to_semicolon();
                return;
            }
            advance();
            constraint.scope = scope;
            if (!expect_punct(':', "':' after target kind")) {
                recover_to_semicolon();
                return;
            }
        }

        if (eat_keyword("require")) {
            constraint.polarity = Constraint::Polarity::Require;
        } else if (eat_keyword("forbid")) {
            constraint.polarity = Constraint::Polarity::Forbid;
        } else {
            error_expected("'require' or 'forbid'");
            recover_to_semicolon();
            return;
        }

        if (peek_keyword("all")) {
            bool scoped_require = constraint.scope.has_value() &&
                                  constraint.polarity == Constraint::Polarity::Require;
            if (!scoped_require) {
                diagnostics_.push_back(make_error(
                    "ANN0111", "'all' is only allowed in a scoped require constraint",
                    peek().span));
                recover_to_semicolon();
                return;
            }
            constraint.all_quantifier = true;
            advance();
        }

        if (peek_punct(';')) {
            diagnostics_.push_back(
                make_error("ANN0112", "constraint has no statements", peek().span));
            advance();
            return;
        }

        std::string_view connective =
            constraint.polarity == Constraint::Polarity::Require ? "or" : "and";
        while (true) {
            std::optional<Statement> stmt = parse_statement();
            if (!stmt) {
                recover_to_semicolon();
                return;
            }
            constraint.statements.push_back(std::move(*stmt));
            if (peek_punct(';')) break;
            if (!eat_keyword(connective)) {
                error_expected("'" + std::string(connective) + "' or ';'");
                recover_to_semicolon();
                return;
            }
        }
        SourceSpan end = peek().span;
        advance();  // ';'
        constraint.span = span_between(start, end);
        decl.constraints.push_back(std::move(constraint));
    }

    // Statement ::= AnnotationRef? Modifier* TargetKind
    std::optional<Statement> parse_statement() {
        SourceSpan start = peek().span;
        Statement stmt;
        if (at(Token::Kind::AnnotationRef)) {
            stmt.annotation_ref = advance().text.substr(1);
        }
        bool has_access = false;
        while (std::optional<Modifier> mod = as_modifier(peek())) {
            if (stmt.modifiers.contains(*mod) || (has_access && is_access_modifier(*mod))) {
                error_expected("a single access level and no repeated modifiers");
                return std::nullopt;
            }
            has_access = has_access || is_access_modifier(*mod);
            stmt.modifiers.insert(*mod);
            advance();
        }
        std::optional<TargetKind> kind = as_target_kind(peek());
        if (!kind) {
            error_expected("a target kind (class, interface, enum, field, method, constructor)");
            return std::nullopt;
        }
        SourceSpan end = advance().span;
        stmt.kind = *kind;
        stmt.span = span_between(start, end);
        return stmt;
    }
};

}  // namespace

ParseResult parse_unit(std::string_view text, std::string_view source_name) {
    LexResult lexed = tokenize(text, source_name);
    if (!lexed.diagnostics.empty()) {
        ParseResult result;
        result.diagnostics = std::move(lexed.diagnostics);
        sort_diagnostics(result.diagnostics);
        return result;
    }
    ParseResult result = Parser(std::move(lexed.tokens), source_name).run();
    sort_diagnostics(result.diagnostics);
    return result;
}

}  // namespace ann
