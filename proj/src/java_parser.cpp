#include "ann/java_parser.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace ann {

namespace {

struct JTok {
    enum class Kind : std::uint8_t { Ident, Punct, Str, Char, Num, End };
    Kind kind = Kind::End;
    std::string text;
    SourceSpan span;
};

bool jident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool jident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Java modifiers mapped into the checked set; the rest are accepted and dropped.
const std::unordered_map<std::string_view, Modifier> kJavaModifiers = {
    {"public", Modifier::Public},   {"protected", Modifier::Protected},
    {"private", Modifier::Private}, {"static", Modifier::Static},
    {"final", Modifier::Final},     {"abstract", Modifier::Abstract},
};
const std::unordered_set<std::string_view> kIgnoredModifiers = {
    "synchronized", "native", "transient", "volatile", "strictfp", "default", "sealed",
};

class JavaScanner {
public:
    JavaScanner(std::string_view text, std::string_view source_name)
        : text_(text), source_name_(source_name) {
        if (text_.substr(0, 3) == "\xEF\xBB\xBF") {  // UTF-8 BOM
            pos_ = 3;
        }
    }

    std::vector<JTok> run() {
        std::vector<JTok> tokens;
        while (true) {
            skip_trivia();
            if (at_end()) break;
            tokens.push_back(next_token());
        }
        tokens.push_back(JTok{JTok::Kind::End, "", here(0)});
        return tokens;
    }

private:
    std::string_view text_;
    std::string_view source_name_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }
    SourceSpan here(int length) const {
        return SourceSpan{std::string(source_name_), line_, column_, length, pos_};
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                advance();
                advance();
                while (!at_end() && !(peek() == '*' && peek(1) == '/')) advance();
                if (!at_end()) {
                    advance();
                    advance();
                }
            } else {
                break;
            }
        }
    }

    JTok next_token() {
        SourceSpan start = here(0);
        char c = peek();
        if (jident_start(c)) {
            std::size_t begin = pos_;
            while (!at_end() && jident_part(peek())) advance();
            return finish(JTok::Kind::Ident, begin, start);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t begin = pos_;
            char prev = '\0';
            while (!at_end()) {
                char n = peek();
                bool exponent_sign =
                    (n == '+' || n == '-') && (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P');
                if (!(jident_part(n) || n == '.' || exponent_sign)) break;
                prev = n;
                advance();
            }
            return finish(JTok::Kind::Num, begin, start);
        }
        if (c == '"') {
            std::size_t begin = pos_;
            if (peek(1) == '"' && peek(2) == '"') {  // text block
                advance();
                advance();
                advance();
                while (!at_end() && !(peek() == '"' && peek(1) == '"' && peek(2) == '"')) advance();
                for (int i = 0; i < 3 && !at_end(); ++i) advance();
            } else {
                advance();
                while (!at_end() && peek() != '"') {
                    if (peek() == '\\' && pos_ + 1 < text_.size()) advance();
                    advance();
                }
                if (!at_end()) advance();
            }
            return finish(JTok::Kind::Str, begin, start);
        }
        if (c == '\'') {
            std::size_t begin = pos_;
            advance();
            while (!at_end() && peek() != '\'') {
                if (peek() == '\\' && pos_ + 1 < text_.size()) advance();
                advance();
            }
            if (!at_end()) advance();
            return finish(JTok::Kind::Char, begin, start);
        }
        advance();
        JTok tok{JTok::Kind::Punct, std::string(1, c), start};
        tok.span.length = 1;
        return tok;
    }

    JTok finish(JTok::Kind kind, std::size_t begin, SourceSpan start) {
        start.length = static_cast<int>(pos_ - begin);
        return JTok{kind, std::string(text_.substr(begin, pos_ - begin)), std::move(start)};
    }
};

class JavaParser {
public:
    JavaParser(std::string_view text, std::string_view source_name)
        : text_(text), source_name_(source_name),
          tokens_(JavaScanner(text, source_name).run()) {}

    JavaParseResult run() {
        CompilationUnit unit;
        unit.source_name = std::string(source_name_);
        parse_package(unit);
        parse_imports(unit);
        while (!at_end()) {
            if (is_punct(';')) {
                advance();
                continue;
            }
            if (is_punct('}')) {
                diagnostics_.push_back(make_error("ANN0301", "unmatched '}'", peek().span));
                advance();
                continue;
            }
            std::optional<TypeDecl> type = parse_type_decl();
            if (type) unit.types.push_back(std::move(*type));
        }
        JavaParseResult result;
        result.diagnostics = std::move(diagnostics_);
        sort_diagnostics(result.diagnostics);
        if (result.diagnostics.empty()) result.unit = std::move(unit);
        return result;
    }

private:
    std::string_view text_;
    std::string_view source_name_;
    std::vector<JTok> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diagnostics_;

    const JTok& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const JTok& advance() {
        const JTok& tok = peek();
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return tok;
    }
    bool at_end() const { return peek().kind == JTok::Kind::End; }
    bool is_punct(char c, std::size_t ahead = 0) const {
        const JTok& tok = peek(ahead);
        return tok.kind == JTok::Kind::Punct && tok.text[0] == c;
    }
    bool is_ident(std::string_view word, std::size_t ahead = 0) const {
        const JTok& tok = peek(ahead);
        return tok.kind == JTok::Kind::Ident && tok.text == word;
    }

    void error(const std::string& code, std::string message, SourceSpan span) {
        diagnostics_.push_back(make_error(code, std::move(message), std::move(span)));
    }

    SourceSpan span_between(const SourceSpan& first, const SourceSpan& last) const {
        SourceSpan span = first;
        span.length = static_cast<int>(last.offset + last.length - first.offset);
        return span;
    }

    std::string slice(std::size_t begin_offset, std::size_t end_offset) const {
        return std::string(text_.substr(begin_offset, end_offset - begin_offset));
    }

    void parse_package(CompilationUnit& unit) {
        if (!is_ident("package")) return;
        advance();
        std::string path;
        while (peek().kind == JTok::Kind::Ident) {
            path += advance().text;
            if (is_punct('.')) {
                advance();
                path += '.';
            } else {
                break;
            }
        }
        if (is_punct(';')) advance();
        unit.package_name = std::move(path);
    }

    void parse_imports(CompilationUnit& unit) {
        while (is_ident("import")) {
            SourceSpan start = advance().span;
            std::size_t begin = peek().span.offset;
            std::size_t end = begin;
            while (!at_end() && !is_punct(';')) {
                const JTok& tok = advance();
                end = tok.span.offset + tok.span.length;
            }
            if (is_punct(';')) advance();
            (void)start;
            unit.imports.push_back(slice(begin, end));
        }
    }

    AnnotationUse parse_annotation_use() {
        AnnotationUse use;
        SourceSpan start = advance().span;  // '@'
        SourceSpan end = start;
        std::string name;
        while (peek().kind == JTok::Kind::Ident) {
            const JTok& part = advance();
            name += part.text;
            end = part.span;
            if (is_punct('.') && peek(1).kind == JTok::Kind::Ident) {
                advance();
                name += '.';
            } else {
                break;
            }
        }
        use.name = std::move(name);
        if (is_punct('(')) {
            std::size_t args_begin = peek().span.offset + 1;
            int depth = 0;
            std::size_t args_end = args_begin;
            while (!at_end()) {
                const JTok& tok = advance();
                if (tok.kind == JTok::Kind::Punct && tok.text[0] == '(') ++depth;
                if (tok.kind == JTok::Kind::Punct && tok.text[0] == ')') {
                    --depth;
                    if (depth == 0) {
                        args_end = tok.span.offset;
                        end = tok.span;
                        break;
                    }
                }
            }
            use.args_text = slice(args_begin, args_end);
        }
        use.span = span_between(start, end);
        return use;
    }

    // Consumes a '{'-opened block, honoring nesting. Reports ANN0301 at the
    // opening brace when the file ends first.
    bool skip_balanced_braces() {
        SourceSpan open = peek().span;
        advance();  // '{'
        int depth = 1;
        while (!at_end() && depth > 0) {
            const JTok& tok = advance();
            if (tok.kind != JTok::Kind::Punct) continue;
            if (tok.text[0] == '{') ++depth;
            if (tok.text[0] == '}') --depth;
        }
        if (depth > 0) {
            error("ANN0301", "unbalanced braces: block opened here is never closed", open);
            return false;
        }
        return true;
    }

    struct Prologue {
        std::vector<AnnotationUse> annotations;
        ModifierSet modifiers;
        std::optional<SourceSpan> start;
    };

    // Annotations and modifiers shared by type and member declarations.
    // Returns false when an '@interface' introducer was consumed (the caller
    // then parses an annotation-type declaration).
    bool parse_prologue(Prologue& out) {
        while (true) {
            if (is_punct('@')) {
                if (!out.start) out.start = peek().span;
                if (is_ident("interface", 1)) {
                    advance();  // '@'
                    advance();  // 'interface'
                    return false;
                }
                out.annotations.push_back(parse_annotation_use());
                continue;
            }
            if (peek().kind == JTok::Kind::Ident) {
                auto it = kJavaModifiers.find(peek().text);
                if (it != kJavaModifiers.end()) {
                    if (!out.start) out.start = peek().span;
                    out.modifiers.insert(it->second);
                    advance();
                    continue;
                }
                if (kIgnoredModifiers.count(peek().text) != 0) {
                    if (!out.start) out.start = peek().span;
                    advance();
                    continue;
                }
            }
            return true;
        }
    }

    // Skips to a declaration boundary: past the next top-level ';', over a
    // balanced '{...}', or up to an enclosing '}'.
    void recover_declaration() {
        int depth = 0;
        while (!at_end()) {
            if (is_punct('{')) {
                skip_balanced_braces();
                if (depth == 0) return;
                continue;
            }
            if (is_punct('}')) return;  // leave for the enclosing scope
            if (is_punct(';') && depth == 0) {
                advance();
                return;
            }
            if (is_punct('(')) ++depth;
            if (is_punct(')') && depth > 0) --depth;
            advance();
        }
    }

    std::optional<TypeDecl> parse_type_decl() {
        Prologue prologue;
        TypeDecl type;
        if (parse_prologue(prologue)) {
            if (is_ident("class")) {
                type.kind = TypeDecl::Kind::Class;
            } else if (is_ident("interface")) {
                type.kind = TypeDecl::Kind::Interface;
            } else if (is_ident("enum")) {
                type.kind = TypeDecl::Kind::Enum;
            } else if (is_ident("record")) {
                error("ANN0302", "records are outside the supported Java subset", peek().span);
                recover_declaration();
                return std::nullopt;
            } else {
                error("ANN0302",
                      "expected a type declaration, found '" + peek().text + "'",
                      peek().span);
                recover_declaration();
                return std::nullopt;
            }
            if (!prologue.start) prologue.start = peek().span;
            advance();
        } else {
            // '@interface': annotation types are modeled as interfaces.
            type.kind = TypeDecl::Kind::Interface;
        }
        return parse_type_rest(std::move(type), std::move(prologue));
    }

    std::optional<TypeDecl> parse_type_rest(TypeDecl type, Prologue prologue) {
        type.annotations = std::move(prologue.annotations);
        type.modifiers = prologue.modifiers;
        SourceSpan start = prologue.start.value_or(peek().span);

        if (peek().kind != JTok::Kind::Ident) {
            error("ANN0302", "expected a type name, found '" + peek().text + "'", peek().span);
            recover_declaration();
            return std::nullopt;
        }
        type.name = advance().text;

        // Type parameters, extends/implements/permits: opaque until the body.
        while (!at_end() && !is_punct('{')) {
            if (is_punct(';') || is_punct('}')) {
                error("ANN0302", "type declaration '" + type.name + "' has no body", peek().span);
                if (is_punct(';')) advance();
                return std::nullopt;
            }
            advance();
        }
        if (at_end()) {
            error("ANN0301", "unexpected end of file in type declaration '" + type.name + "'",
                  start);
            return std::nullopt;
        }
        SourceSpan open = peek().span;
        advance();  // '{'

        if (type.kind == TypeDecl::Kind::Enum && !skip_enum_constants(open)) {
            return std::nullopt;
        }

        while (!at_end() && !is_punct('}')) {
            parse_member(type);
        }
        if (at_end()) {
            error("ANN0301",
                  "unbalanced braces: type '" + type.name + "' is never closed", open);
            return std::nullopt;
        }
        SourceSpan close = advance().span;  // '}'
        type.span = span_between(start, close);
        return type;
    }

    // Enum constants are skipped (they are not checkable elements); members
    // follow the first top-level ';' when present.
    bool skip_enum_constants(const SourceSpan& open) {
        int paren_depth = 0;
        while (!at_end()) {
            if (is_punct('{')) {
                if (!skip_balanced_braces()) return false;  // constant class body
                continue;
            }
            if (is_punct('}') && paren_depth == 0) return true;
            if (is_punct(';') && paren_depth == 0) {
                advance();
                return true;
            }
            if (is_punct('(')) ++paren_depth;
            if (is_punct(')') && paren_depth > 0) --paren_depth;
            advance();
        }
        error("ANN0301", "unbalanced braces: enum body opened here is never closed", open);
        return false;
    }

    void parse_member(TypeDecl& type) {
        Prologue prologue;
        if (!parse_prologue(prologue)) {
            // Nested '@interface'.
            TypeDecl nested;
            nested.kind = TypeDecl::Kind::Interface;
            if (std::optional<TypeDecl> parsed = parse_type_rest(std::move(nested), std::move(prologue))) {
                type.nested_types.push_back(std::move(*parsed));
            }
            return;
        }

        if (is_ident("class") || is_ident("interface") || is_ident("enum")) {
            TypeDecl nested;
            nested.kind = is_ident("class") ? TypeDecl::Kind::Class
                          : is_ident("interface") ? TypeDecl::Kind::Interface
                                                  : TypeDecl::Kind::Enum;
            if (!prologue.start) prologue.start = peek().span;
            advance();
            if (std::optional<TypeDecl> parsed = parse_type_rest(std::move(nested), std::move(prologue))) {
                type.nested_types.push_back(std::move(*parsed));
            }
            return;
        }
        if (is_ident("record")) {
            error("ANN0302", "records are outside the supported Java subset", peek().span);
            recover_declaration();
            return;
        }
        if (is_punct(';')) {
            advance();
            return;
        }
        if (is_punct('{')) {
            // Instance or static initializer block.
            if (!prologue.annotations.empty()) {
                error("ANN0302", "cannot parse member declaration here", peek().span);
            }
            skip_balanced_braces();
            return;
        }

        parse_field_or_executable(type, std::move(prologue));
    }

    struct Head {
        std::vector<JTok> tokens;
        char terminator = '\0';  // one of ( = , ; {
        bool ok = false;
    };

    // Reads the type-and-name section of a member up to the token that decides
    // its shape. Tracks <> and [] so generics and arrays stay opaque.
    Head scan_member_head() {
        Head head;
        int angle_depth = 0;
        int bracket_depth = 0;
        while (!at_end()) {
            const JTok& tok = peek();
            if (tok.kind == JTok::Kind::Punct) {
                char c = tok.text[0];
                if (angle_depth == 0 && bracket_depth == 0 &&
                    (c == '(' || c == '=' || c == ',' || c == ';' || c == '{')) {
                    head.terminator = c;
                    head.ok = true;
                    return head;
                }
                if (c == '<') ++angle_depth;
                if (c == '>' && angle_depth > 0) --angle_depth;
                if (c == '[') ++bracket_depth;
                if (c == ']' && bracket_depth > 0) --bracket_depth;
                if (c == '}') {
                    error("ANN0302", "member declaration is incomplete", tok.span);
                    return head;
                }
                bool allowed = c == '.' || c == '<' || c == '>' || c == '[' || c == ']' ||
                               c == '?' || c == '&' || c == '@' || c == ',';
                if (!allowed) {
                    error("ANN0302",
                          "construct outside the supported Java subset at '" + tok.text + "'",
                          tok.span);
                    recover_declaration();
                    return head;
                }
            } else if (tok.kind != JTok::Kind::Ident) {
                error("ANN0302",
                      "construct outside the supported Java subset at '" + tok.text + "'",
                      tok.span);
                recover_declaration();
                return head;
            }
            head.tokens.push_back(tok);
            advance();
        }
        error("ANN0301", "unexpected end of file in member declaration", peek().span);
        return head;
    }

    static std::string join_tokens(const std::vector<JTok>& tokens, std::size_t skip_index) {
        std::string out;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i == skip_index) continue;
            if (!out.empty() && tokens[i].kind == JTok::Kind::Ident &&
                tokens[i - 1 == skip_index ? i - 2 : i - 1].kind == JTok::Kind::Ident) {
                out += ' ';
            }
            out += tokens[i].text;
        }
        return out;
    }

    static std::size_t last_ident_index(const std::vector<JTok>& tokens) {
        for (std::size_t i = tokens.size(); i > 0; --i) {
            if (tokens[i - 1].kind == JTok::Kind::Ident) return i - 1;
        }
        return tokens.size();
    }

    void parse_field_or_executable(TypeDecl& type, Prologue prologue) {
        SourceSpan start = prologue.start.value_or(peek().span);
        Head head = scan_member_head();
        if (!head.ok) return;

        if (head.terminator == '{') {
            error("ANN0302", "cannot parse member declaration here", peek().span);
            skip_balanced_braces();
            return;
        }
        if (head.tokens.empty()) {
            error("ANN0302", "construct outside the supported Java subset", peek().span);
            recover_declaration();
            return;
        }

        if (head.terminator == '(') {
            parse_executable(type, std::move(prologue), std::move(head), start);
        } else {
            parse_fields(type, std::move(prologue), std::move(head), start);
        }
    }

    void parse_executable(TypeDecl& type, Prologue prologue, Head head, SourceSpan start) {
        std::size_t name_index = last_ident_index(head.tokens);
        if (name_index >= head.tokens.size() ||
            name_index + 1 != head.tokens.size()) {
            // The name must be the token right before '('.
            if (name_index >= head.tokens.size()) {
                error("ANN0302", "cannot parse member declaration here", peek().span);
                recover_declaration();
                return;
            }
        }
        const JTok& name_tok = head.tokens.back();
        if (name_tok.kind != JTok::Kind::Ident) {
            error("ANN0302", "cannot parse member declaration here", name_tok.span);
            recover_declaration();
            return;
        }

        // Leading generic parameters of generic methods are not part of the
        // return type.
        std::size_t head_begin = 0;
        if (!head.tokens.empty() && head.tokens[0].kind == JTok::Kind::Punct &&
            head.tokens[0].text[0] == '<') {
            int depth = 0;
            for (std::size_t i = 0; i < head.tokens.size(); ++i) {
                if (head.tokens[i].kind != JTok::Kind::Punct) continue;
                if (head.tokens[i].text[0] == '<') ++depth;
                if (head.tokens[i].text[0] == '>' && --depth == 0) {
                    head_begin = i + 1;
                    break;
                }
            }
        }

        MemberDecl member;
        member.name = name_tok.text;
        member.annotations = std::move(prologue.annotations);
        member.modifiers = prologue.modifiers;

        bool is_constructor = head_begin + 1 == head.tokens.size() && member.name == type.name;
        if (is_constructor) {
            member.kind = MemberDecl::Kind::Constructor;
            if (type.kind == TypeDecl::Kind::Interface) {
                error("ANN0302", "interfaces cannot declare constructors", name_tok.span);
                recover_declaration();
                return;
            }
        } else {
            member.kind = MemberDecl::Kind::Method;
            std::string return_type;
            for (std::size_t i = head_begin; i + 1 < head.tokens.size(); ++i) {
                if (!return_type.empty() && head.tokens[i].kind == JTok::Kind::Ident &&
                    head.tokens[i - 1].kind == JTok::Kind::Ident) {
                    return_type += ' ';
                }
                return_type += head.tokens[i].text;
            }
            member.type_text = std::move(return_type);
        }

        // Parameter list, opaque.
        int depth = 0;
        SourceSpan end = peek().span;
        while (!at_end()) {
            const JTok& tok = advance();
            end = tok.span;
            if (tok.kind != JTok::Kind::Punct) continue;
            if (tok.text[0] == '(') ++depth;
            if (tok.text[0] == ')' && --depth == 0) break;
        }
        if (depth != 0) {
            error("ANN0301", "unexpected end of file in parameter list", start);
            return;
        }

        // throws clause, annotation-element defaults, array dims.
        while (!at_end() && !is_punct('{') && !is_punct(';')) {
            if (is_punct('}')) {
                error("ANN0302", "member declaration is incomplete", peek().span);
                return;
            }
            advance();
        }
        if (at_end()) {
            error("ANN0301", "unexpected end of file in member declaration", start);
            return;
        }
        if (is_punct('{')) {
            SourceSpan open = peek().span;
            std::size_t before = diagnostics_.size();
            if (!skip_balanced_braces()) return;
            (void)open;
            (void)before;
            end = tokens_[pos_ - 1].span;
        } else {
            end = advance().span;  // ';'
        }
        member.span = span_between(start, end);
        type.members.push_back(std::move(member));
    }

    void parse_fields(TypeDecl& type, Prologue prologue, Head head, SourceSpan start) {
        std::size_t name_index = last_ident_index(head.tokens);
        if (name_index >= head.tokens.size()) {
            error("ANN0302", "cannot parse member declaration here", peek().span);
            recover_declaration();
            return;
        }
        std::string type_text = join_tokens(head.tokens, name_index);

        MemberDecl first;
        first.kind = MemberDecl::Kind::Field;
        first.name = head.tokens[name_index].text;
        first.annotations = prologue.annotations;
        first.modifiers = prologue.modifiers;
        first.type_text = type_text;

        std::vector<MemberDecl> declared;
        declared.push_back(std::move(first));

        // = initializer | , next declarator | ;
        while (!at_end()) {
            if (is_punct('=')) {
                advance();
                if (!skip_initializer(start)) return;
                continue;
            }
            if (is_punct(',')) {
                advance();
                if (peek().kind != JTok::Kind::Ident) {
                    error("ANN0302", "expected a field name after ','", peek().span);
                    recover_declaration();
                    return;
                }
                MemberDecl next;
                next.kind = MemberDecl::Kind::Field;
                next.name = advance().text;
                next.annotations = prologue.annotations;
                next.modifiers = prologue.modifiers;
                next.type_text = type_text;
                while (is_punct('[') || is_punct(']')) advance();
                declared.push_back(std::move(next));
                continue;
            }
            if (is_punct(';')) {
                SourceSpan end = advance().span;
                for (MemberDecl& member : declared) {
                    member.span = span_between(start, end);
                    type.members.push_back(std::move(member));
                }
                return;
            }
            error("ANN0302", "cannot parse field declaration at '" + peek().text + "'",
                  peek().span);
            recover_declaration();
            return;
        }
        error("ANN0301", "unexpected end of file in field declaration", start);
    }

    // Initializers are opaque; commas split declarators only outside any
    // bracket nesting.
    bool skip_initializer(const SourceSpan& start) {
        int depth = 0;
        while (!at_end()) {
            if (peek().kind == JTok::Kind::Punct) {
                char c = peek().text[0];
                if (depth == 0 && (c == ',' || c == ';')) return true;
                if (c == '(' || c == '[' || c == '{') ++depth;
                if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
                if (c == '}' && depth == 0) {
                    error("ANN0302", "member declaration is incomplete", peek().span);
                    return false;
                }
            }
            advance();
        }
        error("ANN0301", "unexpected end of file in field initializer", start);
        return false;
    }
};

}  // namespace

JavaParseResult parse_java_source(std::string_view text, std::string_view source_name) {
    return JavaParser(text, source_name).run();
}

}  // namespace ann
